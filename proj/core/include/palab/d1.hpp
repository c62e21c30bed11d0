#pragma once

#include <cstdint>
#include <vector>

#include "palab/instance.hpp"
#include "palab/rng.hpp"

namespace palab {

/// The d=1 charge decomposition. With sorted points x_1 <= ... <= x_n and
/// sentinels x_0 = 0, x_{n+1} = 1, each point carries
///   M_i = ((x_i - x_{i-1})^p + (x_{i+1} - x_i)^p) / 2   (MST half-charges)
///   P_i = max(x_i - x_{i-1}, x_{i+1} - x_i)^p           (heuristic power)
/// M* + M' and P* + P' equal the MST and PT of the sentinel-augmented point
/// set {0} u X u {1} exactly; the primed terms are the two boundary charges.
struct OneDimDecomposition {
  double m_star = 0.0, m_prime = 0.0;
  double p_star = 0.0, p_prime = 0.0;
  double m_even = 0.0, m_odd = 0.0;  // split of M* by point parity (1-based)
  double p_even = 0.0, p_odd = 0.0;
  std::vector<double> interval_lengths;  // l_{2i} = x_{2i+1} - x_{2i-1}
  double mst_total = 0.0;  // = m_star + m_prime
  double pt_total = 0.0;   // = p_star + p_prime
};

OneDimDecomposition run_d1_decomposition(const Instance& inst);

/// Monte Carlo estimate of the per-interval charges for one uniform point in
/// an interval of given length; the closed forms are
///   E(M) = len^p / (p+1),  E(P) = (2 - 2^-p) * len^p / (p+1).
struct IntervalChargeStats {
  double length = 0.0;
  double p = 0.0;
  std::size_t samples = 0;
  double mean_m = 0.0, mean_p = 0.0;
  double expected_m = 0.0, expected_p = 0.0;
};

IntervalChargeStats interval_charge_mc(double length, double p, std::size_t samples,
                                       Seed seed);

}  // namespace palab
