#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "palab/d1.hpp"
#include "palab/errors.hpp"
#include "palab/experiment.hpp"
#include "palab/generators.hpp"
#include "palab/mst.hpp"
#include "palab/power.hpp"
#include "palab/probes.hpp"

using namespace palab;

namespace {

ExperimentConfig base_config() {
  ExperimentConfig cfg;
  cfg.seed = Seed{20260810};
  return cfg;
}

}  // namespace

TEST_CASE("run_gamma: d=1 closed form and n=1 degenerate case") {
  ExperimentConfig cfg = base_config();
  cfg.functional = Functional::Mst;
  cfg.d = 1;
  cfg.p = 1.0;
  cfg.n_values = {10000};
  cfg.trials = 30;
  const GammaEstimate est = run_gamma(cfg);
  // d=1, p=1: the MST total is x_max - x_min with expectation (n-1)/(n+1),
  // and the normalization exponent is 0.
  CHECK(est.trend[0] == doctest::Approx(1.0).epsilon(0.02));

  cfg.n_values = {1};
  cfg.trials = 3;
  const GammaEstimate lone = run_gamma(cfg);
  CHECK(lone.records[0].value == 0.0);
  CHECK(lone.records[0].normalized == 0.0);
}

TEST_CASE("run_gamma: PT mean sits in the sandwich band") {
  ExperimentConfig cfg = base_config();
  cfg.functional = Functional::Pt;
  cfg.d = 1;
  cfg.p = 1.0;
  cfg.n_values = {10000};
  cfg.trials = 10;
  const GammaEstimate est = run_gamma(cfg);
  CHECK(est.trend[0] >= 1.0);
  CHECK(est.trend[0] <= 1.5);
}

TEST_CASE("run_gamma is reproducible and scheduling independent") {
  ExperimentConfig cfg = base_config();
  cfg.functional = Functional::Mst;
  cfg.d = 2;
  cfg.p = 2.0;
  cfg.n_values = {64, 128};
  cfg.trials = 8;
  cfg.workers = 1;
  const GammaEstimate serial = run_gamma(cfg);
  cfg.workers = 4;
  const GammaEstimate parallel = run_gamma(cfg);
  REQUIRE(serial.records.size() == parallel.records.size());
  for (std::size_t i = 0; i < serial.records.size(); ++i) {
    CHECK(serial.records[i].n == parallel.records[i].n);
    CHECK(serial.records[i].trial == parallel.records[i].trial);
    CHECK(serial.records[i].value == parallel.records[i].value);  // bitwise
    CHECK(serial.records[i].normalized == parallel.records[i].normalized);
  }
}

TEST_CASE("run_gamma means are permutation invariant") {
  ExperimentConfig cfg = base_config();
  cfg.d = 2;
  cfg.p = 1.0;
  cfg.n_values = {128};
  cfg.trials = 16;
  const GammaEstimate est = run_gamma(cfg);
  std::vector<double> values;
  for (const TrialRecord& rec : est.records) values.push_back(rec.normalized);
  std::reverse(values.begin(), values.end());
  CHECK(aggregate(values).mean ==
        doctest::Approx(est.normalized_stats[0].mean).epsilon(1e-12));
}

TEST_CASE("run_ratio: n=2 is exactly 1 and PT/MST never exceeds 2") {
  ExperimentConfig cfg = base_config();
  cfg.d = 2;
  cfg.p = 2.0;
  cfg.n_values = {2};
  cfg.trials = 20;
  const RatioStats exact = run_ratio(cfg);
  CHECK(exact.exact_denominator);
  for (const RatioRecord& rec : exact.records)
    CHECK(rec.ratio == doctest::Approx(1.0).epsilon(1e-9));

  cfg.n_values = {400};
  cfg.trials = 10;
  const RatioStats surrogate = run_ratio(cfg);
  CHECK_FALSE(surrogate.exact_denominator);
  for (const RatioRecord& rec : surrogate.records) {
    CHECK(rec.ratio >= 1.0 - 1e-9);
    CHECK(rec.ratio <= 2.0 + 1e-9);
  }

  cfg.n_values = {1};
  CHECK_THROWS_AS(run_ratio(cfg), InputError);
}

TEST_CASE("run_ratio: d=1 mean approaches 2 - 2^-p") {
  ExperimentConfig cfg = base_config();
  cfg.d = 1;
  cfg.p = 2.0;
  cfg.n_values = {2000};
  cfg.trials = 10;
  const RatioStats stats = run_ratio(cfg);
  CHECK(stats.ratio_stats[0].mean == doctest::Approx(1.75).epsilon(0.06));
}

TEST_CASE("d1 decomposition identities") {
  // Equally spaced interior points: every max-gap equals every half-sum.
  const Instance equal(Params(1, 2.0), std::vector<double>{0.2, 0.4, 0.6, 0.8});
  const OneDimDecomposition eq = run_d1_decomposition(equal);
  CHECK(eq.p_star == doctest::Approx(eq.m_star));

  for (int iter = 0; iter < 25; ++iter) {
    const double p = 1.0 + iter % 3;
    const std::size_t n = 1 + (iter * 7) % 40;
    const Instance inst = gen_uniform(Seed{5150}, iter, n, 1, p);
    const OneDimDecomposition dec = run_d1_decomposition(inst);

    CHECK(dec.m_star + dec.m_prime == doctest::Approx(dec.mst_total).epsilon(1e-12));
    CHECK(dec.p_star + dec.p_prime == doctest::Approx(dec.pt_total).epsilon(1e-12));
    CHECK(dec.m_even + dec.m_odd == doctest::Approx(dec.m_star).epsilon(1e-12));
    CHECK(dec.p_even + dec.p_odd == doctest::Approx(dec.p_star).epsilon(1e-12));

    // The decomposition totals are the MST/PT of the sentinel-augmented set.
    std::vector<double> augmented = inst.coords();
    augmented.push_back(0.0);
    augmented.push_back(1.0);
    const Instance with_sentinels(Params(1, p), std::move(augmented));
    CHECK(dec.mst_total ==
          doctest::Approx(build_mst(with_sentinels).total).epsilon(1e-9));
    CHECK(dec.pt_total ==
          doctest::Approx(pt_heuristic(with_sentinels).value).epsilon(1e-9));

    // M' is two boundary half-charges, each at most the largest gap.
    double largest_gap = 0.0;
    std::vector<double> xs = inst.coords();
    std::sort(xs.begin(), xs.end());
    largest_gap = std::max(xs.front() - 0.0, 1.0 - xs.back());
    for (std::size_t i = 1; i < xs.size(); ++i)
      largest_gap = std::max(largest_gap, xs[i] - xs[i - 1]);
    CHECK(dec.m_prime <= 2.0 * std::pow(largest_gap, p) + 1e-12);

    CHECK_THROWS_AS(run_d1_decomposition(gen_uniform(Seed{1}, 0, 4, 2, 1.0)),
                    InputError);
  }
}

TEST_CASE("single-interval charge expectations") {
  const IntervalChargeStats stats = interval_charge_mc(0.4, 1.0, 100000, Seed{8});
  CHECK(stats.expected_m == doctest::Approx(0.2));
  CHECK(stats.expected_p == doctest::Approx(0.3));
  CHECK(stats.mean_m == doctest::Approx(0.2).epsilon(0.05));
  CHECK(stats.mean_p == doctest::Approx(0.3).epsilon(0.05));
}

TEST_CASE("probe_smoothness basics") {
  ExperimentConfig cfg = base_config();
  cfg.functional = Functional::Mst;
  cfg.d = 2;
  cfg.p = 1.0;
  cfg.n_values = {1};
  cfg.trials = 2;
  const SmoothnessResult lone = probe_smoothness(cfg, 3);
  CHECK(lone.per_n[0].max_abs_delta == 0.0);  // nothing to disconnect
  CHECK(lone.per_n[0].normalized_max == 0.0);

  cfg.n_values = {64};
  cfg.trials = 2;
  const SmoothnessResult small = probe_smoothness(cfg, 3);
  CHECK(small.per_n[0].max_abs_delta > 0.0);
  CHECK(std::isfinite(small.per_n[0].normalized_max));

  //

  // Replacing a point by itself changes nothing: the functional is a pure
  // function of the coordinates.
  const Instance inst = gen_uniform(Seed{3}, 0, 50, 2, 1.0);
  const double base = eval_functional(Functional::Mst, inst, kDefaultExactBudget);
  const Instance copy(inst.params(), inst.coords());
  CHECK(eval_functional(Functional::Mst, copy, kDefaultExactBudget) == base);
}

TEST_CASE("probe_closeness: boundary never beats interior the wrong way") {
  ExperimentConfig cfg = base_config();
  cfg.d = 2;
  cfg.p = 1.0;
  cfg.n_values = {4, 6};
  cfg.trials = 20;
  const ClosenessResult result = probe_closeness(cfg);
  CHECK(result.violations == 0);
  for (const ClosenessRecord& rec : result.records) {
    CHECK(rec.diff >= -1e-9);
    CHECK(std::isfinite(rec.normalized));
  }
  cfg.n_values = {40};
  CHECK_THROWS_AS(probe_closeness(cfg), CapacityError);
}

TEST_CASE("probe_tail: threshold zero and monotone frequencies") {
  ExperimentConfig cfg = base_config();
  cfg.functional = Functional::Mst;
  cfg.d = 2;
  cfg.p = 1.0;
  cfg.n_values = {64, 256};
  cfg.trials = 60;
  const TailResult result = probe_tail(cfg, {0.0, 0.02, 0.05, 0.1, 0.5});
  for (const TailCell& cell : result.cells) {
    if (cell.threshold_rel == 0.0) CHECK(cell.frequency == 1.0);
    CHECK(cell.bound >= -1e-12);
    CHECK(cell.bound <= 1.0 + 1e-12);
  }
  // frequencies are non-increasing in t for fixed n
  for (std::size_t i = 0; i + 1 < result.cells.size(); ++i) {
    if (result.cells[i].n == result.cells[i + 1].n)
      CHECK(result.cells[i].frequency >= result.cells[i + 1].frequency);
  }
  // the fitted bound dominates every positive-threshold frequency
  for (const TailCell& cell : result.cells)
    if (cell.threshold_rel > 0.0 && cell.frequency < 1.0)
      CHECK(cell.bound >= cell.frequency - 1e-12);
}

TEST_CASE("probe_empty_ball extremes and monotonicity") {
  ExperimentConfig cfg = base_config();
  cfg.d = 2;
  cfg.p = 1.0;
  cfg.n_values = {256};
  cfg.trials = 30;

  // Radius covering the whole cube: never empty.
  const double huge = std::sqrt(2.0) / std::pow(std::log(256.0) / 256.0, 0.5);
  CHECK(probe_empty_ball(cfg, huge).per_n[0].fraction_empty == 0.0);

  // Tiny radius: an empty ball always exists somewhere.
  CHECK(probe_empty_ball(cfg, 0.1).per_n[0].fraction_empty == 1.0);

  const double lo = probe_empty_ball(cfg, 1.0).per_n[0].fraction_empty;
  const double hi = probe_empty_ball(cfg, 4.0).per_n[0].fraction_empty;
  CHECK(hi <= lo);

  // at fixed c the empty-ball frequency falls (or stays) as n grows
  cfg.n_values = {256, 4096};
  cfg.trials = 200;
  const EmptyBallResult trend = probe_empty_ball(cfg, 2.0);
  CHECK(trend.per_n[1].fraction_empty <= trend.per_n[0].fraction_empty);
}

TEST_CASE("probe_longest_edge: normalized lengths stay bounded") {
  // pilot maxima (seed 606, 50 trials) were <= 0.97 across n in {256..4096}
  ExperimentConfig cfg = base_config();
  cfg.functional = Functional::Mst;
  cfg.d = 2;
  cfg.p = 1.0;
  cfg.n_values = {256, 1024};
  cfg.trials = 20;
  const LongestEdgeResult result = probe_longest_edge(cfg);
  for (const LongestEdgePerN& row : result.per_n) {
    CHECK(row.normalized_longest.max < 2.0);
    CHECK(row.normalized_max_power.max < 2.0);
    CHECK(row.normalized_longest.mean > 0.0);
  }
}

TEST_CASE("probe_longest_edge: d=1 path degrees and n=2 edge") {
  ExperimentConfig cfg = base_config();
  cfg.d = 1;
  cfg.p = 2.0;
  cfg.n_values = {2, 200};
  cfg.trials = 10;
  const LongestEdgeResult result = probe_longest_edge(cfg);
  for (const LongestEdgePerN& row : result.per_n) CHECK(row.max_degree <= 2);

  const Instance pair = gen_uniform(Seed{11}, 0, 2, 1, 2.0);
  const MstSummary mst = build_mst(pair);
  CHECK(mst.longest_edge ==
        doctest::Approx(std::abs(pair.coords()[0] - pair.coords()[1])));
}

TEST_CASE("probe_cone: deterministic example and random sweep") {
  const double pi = std::acos(-1.0);
  // factor at alpha = pi/6 is sqrt(3)
  const ConeResult tiny = probe_cone(10, pi / 6.0, 2, 2.0, Seed{1});
  CHECK(tiny.factor == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  const ConeResult sweep = probe_cone(10000, pi / 6.0, 2, 2.0, Seed{2});
  CHECK(sweep.violations_reach == 0);
  CHECK(sweep.violations_growth == 0);

  // holds for any alpha <= pi/3, including the boundary angle
  for (double alpha : {0.2, pi / 4.0, pi / 3.0}) {
    const ConeResult r = probe_cone(4000, alpha, 3, 1.0, Seed{3});
    CHECK(r.violations_reach == 0);
    CHECK(r.violations_growth == 0);
  }

  CHECK_THROWS_AS(probe_cone(10, 0.0, 2, 1.0, Seed{1}), InputError);
  CHECK_THROWS_AS(probe_cone(10, pi / 2.0, 2, 1.0, Seed{1}), InputError);

  // Collinear v=0, x=0.3, y=0.9 (d=1, p=2): psi(y) = 0.81 >= 0.36 = |xy|^2.
  CHECK(powered_dist(Point{0.9}, Point{0.0}, 2.0) >=
        powered_dist(Point{0.3}, Point{0.9}, 2.0));
}

TEST_CASE("probe_additivity finds no violations") {
  const AdditivityResult result =
      probe_additivity(50, 6, 2, 2.0, Seed{606}, kDefaultExactBudget, 2);
  CHECK(result.trials == 50);
  CHECK(result.sub_checked == 50);
  CHECK(result.sub_violations == 0);
  CHECK(result.super_checked == 50);
  CHECK(result.super_violations == 0);

  // p < 1: superadditivity is not claimed, so only subadditivity is checked.
  const AdditivityResult sub_only =
      probe_additivity(10, 5, 1, 0.5, Seed{607}, kDefaultExactBudget, 2);
  CHECK(sub_only.super_checked == 0);
  CHECK(sub_only.sub_violations == 0);
}

TEST_CASE("experiment config validation") {
  ExperimentConfig cfg = base_config();
  cfg.n_values = {};
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg.n_values = {4};
  cfg.trials = 0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg.trials = 1;
  cfg.functional = Functional::PaExact;
  cfg.n_values = {40};
  CHECK_THROWS_AS(cfg.validate(), CapacityError);
}
