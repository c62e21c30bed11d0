#include "palab/generators.hpp"

#include <cmath>
#include <string>

#include "palab/errors.hpp"

namespace palab {

Instance gen_uniform(Seed seed, std::uint64_t trial, std::size_t n, int d, double p) {
  if (n < 1) throw InputError("n must be >= 1");
  const Params params(d, p);
  Xoshiro256pp rng = trial_rng(seed, trial);
  std::vector<double> coords(n * static_cast<std::size_t>(d));
  for (double& c : coords) c = rng.next_double();
  return Instance(params, std::move(coords));
}

Instance star_instance(const StarSpec& spec) {
  if (spec.m < 1) throw InputError("star instance needs m >= 1");
  if (!(spec.ratio > 1.0)) throw InputError("star growth ratio K must be > 1");
  const std::size_t m = spec.m;
  std::vector<double> raw;  // ascending: -a_m .. -a_1, 0, a_1 .. a_m
  raw.reserve(2 * m + 1);
  for (std::size_t i = m; i >= 1; --i) raw.push_back(-std::pow(spec.ratio, double(i - 1)));
  raw.push_back(0.0);
  for (std::size_t i = 1; i <= m; ++i) raw.push_back(std::pow(spec.ratio, double(i - 1)));

  const double a_max = raw.back();
  std::vector<double> coords(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    coords[i] = 0.5 + raw[i] / (2.0 * a_max);
  coords.front() = 0.0;  // pin the extremes exactly despite rounding
  coords.back() = 1.0;
  return Instance(Params(1, spec.p), std::move(coords));
}

}  // namespace palab
