#pragma once

#include <cstddef>
#include <span>

namespace palab {

/// Neumaier-compensated sum; keeps asserted identities (heavy + light = total,
/// value = sum of powers) tight even for 10^5-term sums.
double compensated_sum(std::span<const double> values);

struct Aggregate {
  std::size_t count = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation (n - 1); 0 for count < 2
  double min = 0.0;
  double max = 0.0;
};

Aggregate aggregate(std::span<const double> values);

}  // namespace palab
