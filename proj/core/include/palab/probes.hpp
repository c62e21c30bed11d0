#pragma once

#include <cstdint>
#include <vector>

#include "palab/experiment.hpp"

namespace palab {

/// Single-point replacement probe: for s = min(n, 32) sampled victims, each is
/// moved onto every point of a grid^d lattice and the largest |delta F| is
/// recorded, normalized by (log n / n)^(p/d) — the typical-smoothness scale.
struct SmoothnessPerN {
  std::size_t n = 0;
  double max_abs_delta = 0.0;
  double normalized_max = 0.0;  // 0 for n < 2
};

struct SmoothnessResult {
  int grid = 8;
  std::size_t victims_per_trial = 0;
  std::vector<SmoothnessPerN> per_n;
};

SmoothnessResult probe_smoothness(const ExperimentConfig& cfg, int grid = 8);

struct ClosenessRecord {
  std::size_t n = 0;
  std::uint64_t trial = 0;
  std::uint64_t stream_seed = 0;
  double pa = 0.0;
  double pa_boundary = 0.0;
  double diff = 0.0;        // pa - pa_boundary, >= 0 up to tolerance
  double normalized = 0.0;  // diff / n^((d-p)/d)
};

/// Mean normalized gap between PA and its boundary relaxation; exact solves
/// on both sides, so every record doubles as a PA_B <= PA check.
struct ClosenessResult {
  std::vector<std::size_t> n_values;
  std::vector<Aggregate> normalized_stats;  // per n
  std::size_t violations = 0;               // diff < -kValueTol
  std::vector<ClosenessRecord> records;
};

ClosenessResult probe_closeness(const ExperimentConfig& cfg);

/// Empirical exceedance frequencies P(|F - mean| >= t) with t given as a
/// multiplier of the per-n sample mean, plus the paper-shaped reference bound
///   exp(-t^2 n^(2p/d-1) / (C (log n)^(2p/d)))
/// with C fitted as the smallest constant dominating every observed frequency.
struct TailCell {
  std::size_t n = 0;
  double threshold_rel = 0.0;
  double threshold_abs = 0.0;
  double frequency = 0.0;
  double bound = 0.0;
};

struct TailResult {
  double fitted_c = 0.0;
  std::vector<std::size_t> n_values;
  std::vector<Aggregate> value_stats;  // per n, raw functional values
  std::vector<TailCell> cells;
};

TailResult probe_tail(const ExperimentConfig& cfg, std::vector<double> rel_thresholds);

/// Fraction of trials containing an empty ball of radius
/// c_ball (log n / n)^(1/d). Ball centers sit on a lattice of pitch <= r/2,
/// so a reported hit certifies a continuum-empty ball of the same radius.
struct EmptyBallPerN {
  std::size_t n = 0;
  double radius = 0.0;
  std::size_t centers_per_axis = 0;
  double fraction_empty = 0.0;
};

struct EmptyBallResult {
  double c_ball = 0.0;
  std::vector<EmptyBallPerN> per_n;
};

EmptyBallResult probe_empty_ball(const ExperimentConfig& cfg, double c_ball);

/// Longest MST edge over (log n/n)^(1/d), largest heuristic power over
/// (log n/n)^(p/d), and the MST degree maxima.
struct LongestEdgePerN {
  std::size_t n = 0;
  Aggregate normalized_longest;
  Aggregate normalized_max_power;
  int max_degree = 0;
};

struct LongestEdgeResult {
  std::vector<LongestEdgePerN> per_n;
};

LongestEdgeResult probe_longest_edge(const ExperimentConfig& cfg);

/// Random triples (x, v, y) with angle_at(x,v,y) <= alpha and |xv| <= |yv|,
/// powered tight at psi(x) = |xv|^p, psi(y) = |yv|^p. Checks
///   (a) psi(y) >= |xy|^p, and
///   (b) if psi(x) < |xy|^p then |yv| > (sin 2a / sin a) |xv|.
/// Both are theorems for alpha <= pi/3, so the expected violation count is 0.
struct ConeResult {
  std::size_t samples = 0;
  double alpha = 0.0;
  double factor = 0.0;  // sin(2a)/sin(a)
  std::size_t violations_reach = 0;
  std::size_t violations_growth = 0;
};

ConeResult probe_cone(std::size_t samples, double alpha, int d, double p, Seed seed);

/// Random subadditivity checks PA(X u Y) <= PA(X) + PA(Y) + 2 diam^p and,
/// for p >= 1, superadditivity of PA_B under axis-aligned bisections.
/// Exact solves throughout; expected violation counts are 0.
struct AdditivityResult {
  std::size_t trials = 0;
  std::size_t sub_checked = 0;
  std::size_t sub_violations = 0;
  std::size_t super_checked = 0;
  std::size_t super_violations = 0;
};

AdditivityResult probe_additivity(std::size_t trials, std::size_t max_n, int d,
                                  double p, Seed seed,
                                  int budget = kDefaultExactBudget, int workers = 0);

}  // namespace palab
