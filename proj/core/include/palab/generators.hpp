#pragma once

#include <cstdint>

#include "palab/instance.hpp"
#include "palab/rng.hpp"

namespace palab {

/// n points drawn i.i.d. uniformly from [0,1]^d; fully determined by
/// (seed, trial). Coordinates come from the pinned xoshiro256++ stream.
Instance gen_uniform(Seed seed, std::uint64_t trial, std::size_t n, int d, double p);

/// The adversarial unbounded-degree construction: 2m+1 collinear points with
/// magnitudes 0, 1, K, ..., K^(m-1) mirrored around the origin, affinely
/// rescaled into [0,1]. For K large enough the unique optimal PA graph is the
/// star centred at 0.5 with degree n-1.
struct StarSpec {
  std::size_t m;
  double ratio = 10.0;  // K > 1, successive magnitude growth
  double p = 2.0;
};

Instance star_instance(const StarSpec& spec);

}  // namespace palab
