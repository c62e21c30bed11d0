#include "palab/stats.hpp"

#include <algorithm>
#include <cmath>

namespace palab {

double compensated_sum(std::span<const double> values) {
  double sum = 0.0, comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  return sum + comp;
}

Aggregate aggregate(std::span<const double> values) {
  Aggregate agg;
  agg.count = values.size();
  if (values.empty()) return agg;
  agg.mean = compensated_sum(values) / static_cast<double>(values.size());
  agg.min = *std::min_element(values.begin(), values.end());
  agg.max = *std::max_element(values.begin(), values.end());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - agg.mean) * (v - agg.mean);
    agg.sd = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return agg;
}

}  // namespace palab
