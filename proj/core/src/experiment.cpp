#include "palab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "palab/errors.hpp"
#include "palab/generators.hpp"
#include "palab/mst.hpp"
#include "palab/power.hpp"

namespace palab {

std::string_view functional_name(Functional f) {
  switch (f) {
    case Functional::Mst: return "MST";
    case Functional::Pt: return "PT";
    case Functional::PaExact: return "PA_exact";
    case Functional::PaBExact: return "PA_B_exact";
  }
  return "?";
}

Functional functional_from_name(std::string_view name) {
  if (name == "MST" || name == "mst") return Functional::Mst;
  if (name == "PT" || name == "pt") return Functional::Pt;
  if (name == "PA_exact" || name == "pa-exact") return Functional::PaExact;
  if (name == "PA_B_exact" || name == "pab-exact") return Functional::PaBExact;
  throw InputError("unknown functional '" + std::string(name) +
                   "' (expected mst, pt, pa-exact or pab-exact)");
}

void ExperimentConfig::validate() const {
  Params(d, p);  // d >= 1, p > 0
  if (n_values.empty()) throw InputError("n must list at least one value");
  for (std::size_t n : n_values)
    if (n < 1) throw InputError("n must be >= 1");
  if (trials < 1) throw InputError("trials must be >= 1");
  if (!(beta > 0.0)) throw InputError("beta must be > 0");
  if (functional == Functional::PaExact || functional == Functional::PaBExact) {
    const std::size_t max_n = *std::max_element(n_values.begin(), n_values.end());
    if (static_cast<int>(max_n) > exact_budget)
      throw CapacityError("exact functional requested at n=" + std::to_string(max_n) +
                          ", beyond the budget " + std::to_string(exact_budget));
  }
}

double normalization_exponent(int d, double p) {
  return (static_cast<double>(d) - p) / static_cast<double>(d);
}

double normalize_value(double value, std::size_t n, int d, double p) {
  return value / std::pow(static_cast<double>(n), normalization_exponent(d, p));
}

double eval_functional(Functional f, const Instance& inst, int budget) {
  switch (f) {
    case Functional::Mst: return build_mst(inst).total;
    case Functional::Pt: return pt_heuristic(inst).value;
    case Functional::PaExact: return exact_pa(inst, budget).value;
    case Functional::PaBExact:
      return exact_pa_boundary(inst, HyperRect::unit_cube(inst.dim()), budget).value;
  }
  return 0.0;
}

void parallel_run(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& fn) {
  if (workers <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    workers = hw ? static_cast<int>(hw) : 1;
  }
  workers = static_cast<int>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

std::vector<std::size_t> sorted_n(const ExperimentConfig& cfg) {
  std::vector<std::size_t> ns = cfg.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return ns;
}

}  // namespace

GammaEstimate run_gamma(const ExperimentConfig& cfg) {
  cfg.validate();
  GammaEstimate est;
  est.n_values = sorted_n(cfg);
  est.records.resize(est.n_values.size() * cfg.trials);

  parallel_run(est.records.size(), cfg.workers, [&](std::size_t task) {
    const std::size_t n = est.n_values[task / cfg.trials];
    const std::uint64_t trial = task % cfg.trials;
    const auto t0 = std::chrono::steady_clock::now();
    const Instance inst = gen_uniform(cfg.seed, trial, n, cfg.d, cfg.p);
    const double value = eval_functional(cfg.functional, inst, cfg.exact_budget);
    const auto t1 = std::chrono::steady_clock::now();
    TrialRecord& rec = est.records[task];
    rec.n = n;
    rec.trial = trial;
    rec.stream_seed = trial_seed(cfg.seed, trial);
    rec.value = value;
    rec.normalized = normalize_value(value, n, cfg.d, cfg.p);
    rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  });

  for (std::size_t i = 0; i < est.n_values.size(); ++i) {
    std::vector<double> normalized(cfg.trials);
    for (std::size_t t = 0; t < cfg.trials; ++t)
      normalized[t] = est.records[i * cfg.trials + t].normalized;
    est.normalized_stats.push_back(aggregate(normalized));
    est.trend.push_back(est.normalized_stats.back().mean);
  }
  return est;
}

RatioStats run_ratio(const ExperimentConfig& cfg) {
  cfg.validate();
  RatioStats stats;
  stats.n_values = sorted_n(cfg);
  if (stats.n_values.front() < 2)
    throw InputError("ratio experiments need n >= 2 (both values are 0 at n=1)");
  const std::size_t max_n = stats.n_values.back();
  stats.exact_denominator = static_cast<int>(max_n) <= cfg.exact_budget;
  stats.records.resize(stats.n_values.size() * cfg.trials);

  parallel_run(stats.records.size(), cfg.workers, [&](std::size_t task) {
    const std::size_t n = stats.n_values[task / cfg.trials];
    const std::uint64_t trial = task % cfg.trials;
    const auto t0 = std::chrono::steady_clock::now();
    const Instance inst = gen_uniform(cfg.seed, trial, n, cfg.d, cfg.p);
    const MstSummary mst = build_mst(inst);
    const PowerVector powers = induced_power(inst, mst.edges);
    const double pt = compensated_sum(powers);
    const double denom =
        stats.exact_denominator ? exact_pa(inst, cfg.exact_budget).value : mst.total;
    const auto t1 = std::chrono::steady_clock::now();
    RatioRecord& rec = stats.records[task];
    rec.n = n;
    rec.trial = trial;
    rec.stream_seed = trial_seed(cfg.seed, trial);
    rec.pt = pt;
    rec.denominator = denom;
    rec.ratio = pt / denom;
    rec.two_heavy = 2.0 * mst.heavy;
    rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  });

  for (std::size_t i = 0; i < stats.n_values.size(); ++i) {
    std::vector<double> ratios(cfg.trials), vs_heavy(cfg.trials);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const RatioRecord& rec = stats.records[i * cfg.trials + t];
      ratios[t] = rec.ratio;
      vs_heavy[t] = rec.two_heavy > 0.0 ? rec.pt / rec.two_heavy : 1.0;
    }
    stats.ratio_stats.push_back(aggregate(ratios));
    stats.pt_over_two_heavy.push_back(aggregate(vs_heavy));
  }
  return stats;
}

}  // namespace palab
