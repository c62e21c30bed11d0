#include "palab/probes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>

#include "palab/errors.hpp"
#include "palab/generators.hpp"
#include "palab/mst.hpp"
#include "palab/power.hpp"

namespace palab {

namespace {

constexpr std::uint64_t kVictimTag = 0x736d6f6f7468ULL;    // victim sampling stream
constexpr std::uint64_t kAdditivityTag = 0x616464ULL;      // membership stream

double log_scale(std::size_t n, double exponent) {
  return std::pow(std::log(static_cast<double>(n)) / static_cast<double>(n), exponent);
}

std::vector<std::size_t> sorted_n(const ExperimentConfig& cfg) {
  std::vector<std::size_t> ns = cfg.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return ns;
}

// Odometer over the g^d lattice with coordinates (j + 0.5) / g.
class GridWalker {
 public:
  GridWalker(int grid, int d) : grid_(grid), idx_(d, 0), done_(false) {}

  bool done() const { return done_; }

  void write_point(double* out) const {
    for (std::size_t a = 0; a < idx_.size(); ++a)
      out[a] = (idx_[a] + 0.5) / static_cast<double>(grid_);
  }

  void advance() {
    for (std::size_t a = 0; a < idx_.size(); ++a) {
      if (++idx_[a] < grid_) return;
      idx_[a] = 0;
    }
    done_ = true;
  }

 private:
  int grid_;
  std::vector<int> idx_;
  bool done_;
};

}  // namespace

SmoothnessResult probe_smoothness(const ExperimentConfig& cfg, int grid) {
  cfg.validate();
  if (grid < 1) throw InputError("grid resolution must be >= 1");
  SmoothnessResult result;
  result.grid = grid;
  const std::vector<std::size_t> ns = sorted_n(cfg);
  result.victims_per_trial = std::min<std::size_t>(ns.back(), 32);

  std::vector<double> task_max(ns.size() * cfg.trials, 0.0);
  parallel_run(task_max.size(), cfg.workers, [&](std::size_t task) {
    const std::size_t n = ns[task / cfg.trials];
    const std::uint64_t trial = task % cfg.trials;
    const Instance inst = gen_uniform(cfg.seed, trial, n, cfg.d, cfg.p);
    const double base = eval_functional(cfg.functional, inst, cfg.exact_budget);

    // Sample min(n, 32) distinct victims via a partial Fisher-Yates pass.
    Xoshiro256pp rng = trial_rng(cfg.seed, trial, kVictimTag);
    const std::size_t s = std::min<std::size_t>(n, 32);
    std::vector<std::uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0u);
    for (std::size_t i = 0; i < s; ++i)
      std::swap(pool[i], pool[i + rng.below(n - i)]);

    double worst = 0.0;
    std::vector<double> coords = inst.coords();
    for (std::size_t i = 0; i < s; ++i) {
      const std::uint32_t victim = pool[i];
      double* slot = coords.data() + victim * static_cast<std::size_t>(cfg.d);
      const std::vector<double> saved(slot, slot + cfg.d);
      for (GridWalker walk(grid, cfg.d); !walk.done(); walk.advance()) {
        walk.write_point(slot);
        const Instance modified(inst.params(), coords);
        const double value = eval_functional(cfg.functional, modified, cfg.exact_budget);
        worst = std::max(worst, std::abs(value - base));
      }
      std::copy(saved.begin(), saved.end(), slot);
    }
    task_max[task] = worst;
  });

  for (std::size_t i = 0; i < ns.size(); ++i) {
    SmoothnessPerN row;
    row.n = ns[i];
    for (std::size_t t = 0; t < cfg.trials; ++t)
      row.max_abs_delta = std::max(row.max_abs_delta, task_max[i * cfg.trials + t]);
    row.normalized_max =
        row.n < 2 ? 0.0
                  : row.max_abs_delta / log_scale(row.n, cfg.p / cfg.d);
    result.per_n.push_back(row);
  }
  return result;
}

ClosenessResult probe_closeness(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<std::size_t> ns = sorted_n(cfg);
  if (static_cast<int>(ns.back()) > cfg.exact_budget)
    throw CapacityError("probe_closeness needs exact solves; n=" +
                        std::to_string(ns.back()) + " exceeds the budget " +
                        std::to_string(cfg.exact_budget));

  ClosenessResult result;
  result.n_values = ns;
  result.records.resize(ns.size() * cfg.trials);
  parallel_run(result.records.size(), cfg.workers, [&](std::size_t task) {
    const std::size_t n = ns[task / cfg.trials];
    const std::uint64_t trial = task % cfg.trials;
    const Instance inst = gen_uniform(cfg.seed, trial, n, cfg.d, cfg.p);
    ClosenessRecord& rec = result.records[task];
    rec.n = n;
    rec.trial = trial;
    rec.stream_seed = trial_seed(cfg.seed, trial);
    rec.pa = exact_pa(inst, cfg.exact_budget).value;
    rec.pa_boundary =
        exact_pa_boundary(inst, HyperRect::unit_cube(cfg.d), cfg.exact_budget).value;
    rec.diff = rec.pa - rec.pa_boundary;
    rec.normalized = normalize_value(rec.diff, n, cfg.d, cfg.p);
  });

  for (std::size_t i = 0; i < ns.size(); ++i) {
    std::vector<double> normalized(cfg.trials);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const ClosenessRecord& rec = result.records[i * cfg.trials + t];
      normalized[t] = rec.normalized;
      if (rec.diff < -kValueTol) ++result.violations;
    }
    result.normalized_stats.push_back(aggregate(normalized));
  }
  return result;
}

TailResult probe_tail(const ExperimentConfig& cfg, std::vector<double> rel_thresholds) {
  cfg.validate();
  if (rel_thresholds.empty()) throw InputError("tail probe needs thresholds");
  for (double t : rel_thresholds)
    if (t < 0.0) throw InputError("thresholds must be >= 0");
  const std::vector<std::size_t> ns = sorted_n(cfg);
  if (ns.front() < 2) throw InputError("tail probe needs n >= 2");

  std::vector<double> values(ns.size() * cfg.trials, 0.0);
  parallel_run(values.size(), cfg.workers, [&](std::size_t task) {
    const std::size_t n = ns[task / cfg.trials];
    const std::uint64_t trial = task % cfg.trials;
    const Instance inst = gen_uniform(cfg.seed, trial, n, cfg.d, cfg.p);
    values[task] = eval_functional(cfg.functional, inst, cfg.exact_budget);
  });

  TailResult result;
  result.n_values = ns;
  const double ratio_exp = 2.0 * cfg.p / cfg.d;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const std::span<const double> slice(values.data() + i * cfg.trials, cfg.trials);
    const Aggregate agg = aggregate(slice);
    result.value_stats.push_back(agg);
    for (double rel : rel_thresholds) {
      TailCell cell;
      cell.n = ns[i];
      cell.threshold_rel = rel;
      cell.threshold_abs = rel * agg.mean;
      std::size_t hits = 0;
      for (double v : slice)
        if (std::abs(v - agg.mean) >= cell.threshold_abs) ++hits;
      cell.frequency = static_cast<double>(hits) / static_cast<double>(cfg.trials);
      result.cells.push_back(cell);
    }
  }

  // Smallest C with bound >= frequency at every observed (n, t > 0) cell.
  double fitted = 0.0;
  for (const TailCell& cell : result.cells) {
    if (cell.threshold_abs <= 0.0 || cell.frequency <= 0.0 || cell.frequency >= 1.0)
      continue;
    const double nd = static_cast<double>(cell.n);
    const double scale =
        std::pow(nd, ratio_exp - 1.0) / std::pow(std::log(nd), ratio_exp);
    fitted = std::max(fitted, cell.threshold_abs * cell.threshold_abs * scale /
                                  std::log(1.0 / cell.frequency));
  }
  result.fitted_c = fitted;
  for (TailCell& cell : result.cells) {
    if (cell.threshold_abs <= 0.0) {
      cell.bound = 1.0;
    } else if (fitted <= 0.0) {
      cell.bound = 0.0;
    } else {
      const double nd = static_cast<double>(cell.n);
      const double scale =
          std::pow(nd, ratio_exp - 1.0) / std::pow(std::log(nd), ratio_exp);
      cell.bound =
          std::exp(-cell.threshold_abs * cell.threshold_abs * scale / fitted);
    }
  }
  return result;
}

EmptyBallResult probe_empty_ball(const ExperimentConfig& cfg, double c_ball) {
  cfg.validate();
  if (!(c_ball > 0.0)) throw InputError("c_ball must be > 0");
  const std::vector<std::size_t> ns = sorted_n(cfg);
  if (ns.front() < 2) throw InputError("empty-ball probe needs n >= 2");

  EmptyBallResult result;
  result.c_ball = c_ball;
  std::vector<char> has_empty(ns.size() * cfg.trials, 0);

  parallel_run(has_empty.size(), cfg.workers, [&](std::size_t task) {
    const std::size_t n = ns[task / cfg.trials];
    const std::uint64_t trial = task % cfg.trials;
    const Instance inst = gen_uniform(cfg.seed, trial, n, cfg.d, cfg.p);
    const int d = cfg.d;
    const double radius = c_ball * log_scale(n, 1.0 / d);
    const double r_sq = radius * radius;

    // Bucket the points at half-radius pitch; a ball reaches at most two
    // buckets per axis in each direction.
    const double cell = radius / 2.0;
    const int buckets = std::max(1, static_cast<int>(std::ceil(1.0 / cell)));
    auto bucket_of = [&](double coord) {
      return std::min(buckets - 1, static_cast<int>(coord / cell));
    };
    std::vector<std::vector<std::uint32_t>> grid_points(
        static_cast<std::size_t>(std::pow(buckets, d)));
    for (std::uint32_t i = 0; i < n; ++i) {
      std::size_t key = 0;
      for (int a = 0; a < d; ++a) key = key * buckets + bucket_of(inst.point(i)[a]);
      grid_points[key].push_back(i);
    }

    const std::size_t centers_per_axis =
        static_cast<std::size_t>(std::ceil(2.0 / radius)) + 1;
    std::vector<std::size_t> idx(d, 0);
    std::vector<double> center(d, 0.0);
    bool found_empty = false;
    for (;;) {
      for (int a = 0; a < d; ++a)
        center[a] = static_cast<double>(idx[a]) /
                    static_cast<double>(centers_per_axis - 1);
      bool empty = true;
      std::vector<int> lo(d), hi(d);
      for (int a = 0; a < d; ++a) {
        lo[a] = std::max(0, bucket_of(center[a]) - 2);
        hi[a] = std::min(buckets - 1, bucket_of(center[a]) + 2);
      }
      std::vector<int> cur(lo);
      for (bool more = true; more && empty;) {
        std::size_t key = 0;
        for (int a = 0; a < d; ++a) key = key * buckets + cur[a];
        for (std::uint32_t i : grid_points[key]) {
          double sq = 0.0;
          for (int a = 0; a < d; ++a) {
            const double diff = inst.point(i)[a] - center[a];
            sq += diff * diff;
          }
          if (sq < r_sq) {  // interior containment
            empty = false;
            break;
          }
        }
        more = false;
        for (int a = 0; a < d && !more; ++a) {
          if (++cur[a] <= hi[a])
            more = true;
          else
            cur[a] = lo[a];
        }
      }
      if (empty) {
        found_empty = true;
        break;
      }
      bool more = false;
      for (int a = 0; a < d && !more; ++a) {
        if (++idx[a] < centers_per_axis)
          more = true;
        else
          idx[a] = 0;
      }
      if (!more) break;
    }
    has_empty[task] = found_empty ? 1 : 0;
  });

  for (std::size_t i = 0; i < ns.size(); ++i) {
    EmptyBallPerN row;
    row.n = ns[i];
    row.radius = c_ball * log_scale(ns[i], 1.0 / cfg.d);
    row.centers_per_axis = static_cast<std::size_t>(std::ceil(2.0 / row.radius)) + 1;
    std::size_t hits = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t) hits += has_empty[i * cfg.trials + t];
    row.fraction_empty = static_cast<double>(hits) / static_cast<double>(cfg.trials);
    result.per_n.push_back(row);
  }
  return result;
}

LongestEdgeResult probe_longest_edge(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<std::size_t> ns = sorted_n(cfg);

  struct Row {
    double longest = 0.0, max_power = 0.0;
    int degree = 0;
  };
  std::vector<Row> rows(ns.size() * cfg.trials);
  parallel_run(rows.size(), cfg.workers, [&](std::size_t task) {
    const std::size_t n = ns[task / cfg.trials];
    const std::uint64_t trial = task % cfg.trials;
    const Instance inst = gen_uniform(cfg.seed, trial, n, cfg.d, cfg.p);
    const MstSummary mst = build_mst(inst);
    Row& row = rows[task];
    row.degree = mst.max_degree;
    if (n < 2) return;
    const PowerVector powers = induced_power(inst, mst.edges);
    row.longest = mst.longest_edge / log_scale(n, 1.0 / cfg.d);
    row.max_power = *std::max_element(powers.begin(), powers.end()) /
                    log_scale(n, cfg.p / cfg.d);
  });

  LongestEdgeResult result;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    LongestEdgePerN row;
    row.n = ns[i];
    std::vector<double> longest(cfg.trials), max_power(cfg.trials);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      longest[t] = rows[i * cfg.trials + t].longest;
      max_power[t] = rows[i * cfg.trials + t].max_power;
      row.max_degree = std::max(row.max_degree, rows[i * cfg.trials + t].degree);
    }
    row.normalized_longest = aggregate(longest);
    row.normalized_max_power = aggregate(max_power);
    result.per_n.push_back(row);
  }
  return result;
}

ConeResult probe_cone(std::size_t samples, double alpha, int d, double p, Seed seed) {
  if (!(alpha > 0.0) || alpha > std::acos(-1.0) / 3.0 + 1e-15)
    throw InputError("alpha must lie in (0, pi/3]");
  Params(d, p);
  if (samples < 1) throw InputError("samples must be >= 1");

  ConeResult result;
  result.samples = samples;
  result.alpha = alpha;
  result.factor = std::sin(2.0 * alpha) / std::sin(alpha);
  const double factor_sq = result.factor * result.factor;

  Xoshiro256pp rng = trial_rng(seed, 0);
  std::vector<double> v(d), a(d), b(d);
  std::size_t accepted = 0;
  while (accepted < samples) {
    for (int i = 0; i < d; ++i) v[i] = rng.next_double();
    for (int i = 0; i < d; ++i) a[i] = rng.next_double();
    for (int i = 0; i < d; ++i) b[i] = rng.next_double();
    const double sq_av = squared_dist(a, v);
    const double sq_bv = squared_dist(b, v);
    if (sq_av == 0.0 || sq_bv == 0.0) continue;
    const auto& x = sq_av <= sq_bv ? a : b;
    const auto& y = sq_av <= sq_bv ? b : a;
    if (angle_at(x, v, y) > alpha) continue;
    ++accepted;

    const double sq_xv = std::min(sq_av, sq_bv);
    const double sq_yv = std::max(sq_av, sq_bv);
    const double sq_xy = squared_dist(x, y);
    const double psi_x = powered_from_squared(sq_xv, p);
    const double psi_y = powered_from_squared(sq_yv, p);
    const double need_xy = powered_from_squared(sq_xy, p);

    if (psi_y + kPowerSlack < need_xy) ++result.violations_reach;
    if (psi_x + kPowerSlack < need_xy) {
      // x cannot reach y; the lemma then promises strict radial growth.
      if (sq_yv <= factor_sq * sq_xv - kPowerSlack) ++result.violations_growth;
    }
  }
  return result;
}

AdditivityResult probe_additivity(std::size_t trials, std::size_t max_n, int d,
                                  double p, Seed seed, int budget, int workers) {
  Params(d, p);
  if (trials < 1) throw InputError("trials must be >= 1");
  if (max_n < 1) throw InputError("max_n must be >= 1");
  if (static_cast<int>(max_n) > budget)
    throw CapacityError("probe_additivity: max_n=" + std::to_string(max_n) +
                        " points exceed the budget " + std::to_string(budget));

  struct Counts {
    std::size_t sub_checked = 0, sub_violations = 0;
    std::size_t super_checked = 0, super_violations = 0;
  };
  std::vector<Counts> per_trial(trials);
  const HyperRect cube = HyperRect::unit_cube(d);
  const double join_cost = 2.0 * powered_from_squared(static_cast<double>(d), p);

  parallel_run(trials, workers, [&](std::size_t trial) {
    Xoshiro256pp rng = trial_rng(seed, trial, kAdditivityTag);
    Counts& counts = per_trial[trial];

    // Subadditivity: split a ground set Z into covering subsets X, Y.
    const std::size_t nz = 1 + rng.below(max_n);
    std::vector<double> coords(nz * d);
    for (double& c : coords) c = rng.next_double();
    const Instance ground(Params(d, p), coords);
    std::vector<std::uint32_t> x_idx, y_idx;
    for (std::uint32_t i = 0; i < nz; ++i) {
      switch (rng.below(3)) {
        case 0: x_idx.push_back(i); break;
        case 1: y_idx.push_back(i); break;
        default:
          x_idx.push_back(i);
          y_idx.push_back(i);
      }
    }
    auto pa_of = [&](const std::vector<std::uint32_t>& idx) {
      if (idx.empty()) return 0.0;
      return exact_pa(subset(ground, idx), budget).value;
    };
    const double lhs = exact_pa(ground, budget).value;
    const double rhs = pa_of(x_idx) + pa_of(y_idx) + join_cost;
    ++counts.sub_checked;
    if (lhs > rhs + kValueTol) ++counts.sub_violations;

    // Superadditivity of the boundary functional (p >= 1 only).
    if (p >= 1.0) {
      const std::size_t nx = 1 + rng.below(max_n);
      std::vector<double> xc(nx * d);
      for (double& c : xc) c = rng.next_double();
      const Instance inst(Params(d, p), xc);
      const int axis = static_cast<int>(rng.below(d));
      double cut;
      do {
        cut = rng.next_double();
      } while (!(cut > 0.0) || !(cut < 1.0));
      const auto [r1, r2] = cube.bisect(axis, cut);
      std::vector<std::uint32_t> in1, in2;
      for (std::uint32_t i = 0; i < nx; ++i)
        (inst.point(i)[axis] <= cut ? in1 : in2).push_back(i);
      auto pab_of = [&](const std::vector<std::uint32_t>& idx, const HyperRect& r) {
        if (idx.empty()) return 0.0;
        return exact_pa_boundary(subset(inst, idx), r, budget).value;
      };
      const double whole = exact_pa_boundary(inst, cube, budget).value;
      const double parts = pab_of(in1, r1) + pab_of(in2, r2);
      ++counts.super_checked;
      if (whole < parts - kValueTol) ++counts.super_violations;
    }
  });

  AdditivityResult result;
  result.trials = trials;
  for (const Counts& c : per_trial) {
    result.sub_checked += c.sub_checked;
    result.sub_violations += c.sub_violations;
    result.super_checked += c.super_checked;
    result.super_violations += c.super_violations;
  }
  return result;
}

}  // namespace palab
