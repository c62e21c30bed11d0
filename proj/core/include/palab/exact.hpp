#pragma once

#include <cstdint>
#include <vector>

#include "palab/instance.hpp"
#include "palab/power.hpp"

namespace palab {

/// Default node cap for the branch-and-bound search; beyond it the solve is
/// refused rather than silently slow. The CLI can raise it with --budget.
inline constexpr int kDefaultExactBudget = 12;
/// Hard cap for the brute-force oracle (full Cartesian product of levels).
inline constexpr int kOracleCap = 7;

enum class LevelMode { Interior, Boundary };

/// Admissible power values per node, sorted strictly ascending. An optimal
/// assignment is induced by its own graph, so each optimal psi(v) equals some
/// pairwise distance^p (interior), or additionally the boundary distance^p
/// (boundary mode). Zero is admissible only for n = 1 or for a point lying
/// exactly on the rectangle boundary.
struct CandidateLevels {
  std::vector<std::vector<double>> levels;
};

CandidateLevels candidate_levels(const Instance& inst, LevelMode mode,
                                 const HyperRect* rect = nullptr);

struct BoundarySolution {
  PowerVector powers;
  double value = 0.0;
  std::vector<std::uint32_t> boundary_links;  // nodes whose power reaches the boundary
};

/// Globally optimal power assignment. Branch and bound over candidate levels,
/// hardest-to-connect nodes first; ties within kValueTol report the
/// lexicographically smallest power vector.
PaSolution exact_pa(const Instance& inst, int budget = kDefaultExactBudget);

/// Optimal boundary power assignment PA_B(X, R): components may attach to the
/// boundary of `rect` instead of each other; the boundary itself costs nothing.
BoundarySolution exact_pa_boundary(const Instance& inst, const HyperRect& rect,
                                   int budget = kDefaultExactBudget);

/// Brute-force cross-validation oracle: evaluates every tuple of candidate
/// levels and keeps the cheapest feasible one. Same contract as exact_pa /
/// exact_pa_boundary; capped at kOracleCap points.
PaSolution oracle_enumerate(const Instance& inst);
BoundarySolution oracle_enumerate_boundary(const Instance& inst, const HyperRect& rect);

}  // namespace palab
