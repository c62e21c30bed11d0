#include "palab/d1.hpp"

#include <algorithm>
#include <cmath>

#include "palab/errors.hpp"
#include "palab/stats.hpp"

namespace palab {

namespace {

double pw(double gap, double p) {
  if (p == 1.0) return gap;
  if (p == 2.0) return gap * gap;
  return std::pow(gap, p);
}

}  // namespace

OneDimDecomposition run_d1_decomposition(const Instance& inst) {
  if (inst.dim() != 1) throw InputError("the decomposition is defined for d=1 only");
  const double p = inst.gradient();
  const std::size_t n = inst.size();

  std::vector<double> x(inst.coords());
  std::sort(x.begin(), x.end());
  // Augmented sequence x_0 = 0 <= x_1 <= ... <= x_n <= x_{n+1} = 1.
  std::vector<double> gap(n + 1);  // gap[i] = x_i - x_{i-1}, 1-based, powered below
  gap[0] = x.front() - 0.0;
  for (std::size_t i = 1; i < n; ++i) gap[i] = x[i] - x[i - 1];
  gap[n] = 1.0 - x.back();

  OneDimDecomposition dec;
  std::vector<double> m_charges(n), p_charges(n);
  std::vector<double> m_even, m_odd, p_even, p_odd;
  for (std::size_t i = 1; i <= n; ++i) {
    const double left = gap[i - 1];
    const double right = gap[i];
    const double m_i = 0.5 * (pw(left, p) + pw(right, p));
    const double p_i = pw(std::max(left, right), p);
    m_charges[i - 1] = m_i;
    p_charges[i - 1] = p_i;
    ((i % 2 == 0) ? m_even : m_odd).push_back(m_i);
    ((i % 2 == 0) ? p_even : p_odd).push_back(p_i);
  }
  dec.m_star = compensated_sum(m_charges);
  dec.p_star = compensated_sum(p_charges);
  dec.m_prime = 0.5 * (pw(gap[0], p) + pw(gap[n], p));
  dec.p_prime = pw(gap[0], p) + pw(gap[n], p);
  dec.m_even = compensated_sum(m_even);
  dec.m_odd = compensated_sum(m_odd);
  dec.p_even = compensated_sum(p_even);
  dec.p_odd = compensated_sum(p_odd);
  dec.mst_total = dec.m_star + dec.m_prime;
  dec.pt_total = dec.p_star + dec.p_prime;

  for (std::size_t i = 2; i <= n; i += 2) {
    const double lo = x[i - 2];  // x_{i-1} in 1-based augmented indexing
    const double hi = (i == n) ? 1.0 : x[i];
    dec.interval_lengths.push_back(hi - lo);
  }
  return dec;
}

IntervalChargeStats interval_charge_mc(double length, double p, std::size_t samples,
                                       Seed seed) {
  if (!(length > 0.0)) throw InputError("interval length must be > 0");
  if (!(p > 0.0)) throw InputError("p must be > 0");
  if (samples < 1) throw InputError("samples must be >= 1");

  Xoshiro256pp rng = trial_rng(seed, 0);
  std::vector<double> ms(samples), ps(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    const double u = rng.uniform(0.0, length);
    ms[s] = 0.5 * (pw(u, p) + pw(length - u, p));
    ps[s] = pw(std::max(u, length - u), p);
  }
  IntervalChargeStats stats;
  stats.length = length;
  stats.p = p;
  stats.samples = samples;
  stats.mean_m = compensated_sum(ms) / static_cast<double>(samples);
  stats.mean_p = compensated_sum(ps) / static_cast<double>(samples);
  stats.expected_m = pw(length, p) / (p + 1.0);
  stats.expected_p = (2.0 - std::pow(2.0, -p)) * stats.expected_m;
  return stats;
}

}  // namespace palab
