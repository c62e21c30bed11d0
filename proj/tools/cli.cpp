#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "palab/csv.hpp"
#include "palab/d1.hpp"
#include "palab/errors.hpp"
#include "palab/exact.hpp"
#include "palab/experiment.hpp"
#include "palab/generators.hpp"
#include "palab/instance_io.hpp"
#include "palab/mst.hpp"
#include "palab/power.hpp"
#include "palab/probes.hpp"

namespace palab::cli {

namespace {

using nlohmann::json;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PALAB_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError("PALAB_SEED must be an unsigned 64-bit integer");
  }
  return 1;
}

// Output sink honoring -o: file when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) : path_(path) {
    if (!path_.empty()) {
      file_.open(path_, std::ios::binary);
      if (!file_) throw InputError("cannot open " + path_ + " for writing");
    }
  }
  std::ostream& stream() { return path_.empty() ? std::cout : file_; }
  bool to_file() const { return !path_.empty(); }

 private:
  std::string path_;
  std::ofstream file_;
};

void write_summary(const json& summary, const std::string& summary_path,
                   bool csv_went_to_file) {
  if (!summary_path.empty()) {
    std::ofstream out(summary_path, std::ios::binary);
    if (!out) throw InputError("cannot open " + summary_path + " for writing");
    out << summary.dump(2) << '\n';
  } else if (csv_went_to_file) {
    std::cout << summary.dump(2) << '\n';
  } else {
    // CSV owns stdout; keep the config echo visible on stderr.
    std::cerr << "summary: " << summary.dump() << '\n';
  }
}

// ---------------------------------------------------------------------------
// exp: shared options

struct ExpOptions {
  std::string functional = "mst";
  int d = 2;
  double p = 1.0;
  std::vector<std::size_t> n_values;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int workers = 0;
  int budget = kDefaultExactBudget;
  double beta = 1.0;
  std::string out;
  std::string summary;

  ExperimentConfig config() const {
    ExperimentConfig cfg;
    cfg.functional = functional_from_name(functional);
    cfg.d = d;
    cfg.p = p;
    cfg.n_values = n_values;
    cfg.trials = trials;
    cfg.seed = Seed{seed_set ? seed : default_seed()};
    cfg.beta = beta;
    cfg.workers = workers;
    cfg.exact_budget = budget;
    return cfg;
  }
};

void add_common_exp_options(CLI::App* sub, ExpOptions& opt, bool needs_n = true) {
  sub->add_option("--functional", opt.functional,
                  "functional: mst, pt, pa-exact, pab-exact");
  sub->add_option("--d", opt.d, "dimension");
  sub->add_option("--p", opt.p, "distance-power gradient");
  auto* n_opt = sub->add_option("--n", opt.n_values, "point counts (comma separated)")
                    ->delimiter(',');
  if (needs_n) n_opt->required();
  sub->add_option("--trials", opt.trials, "trials per n");
  sub->add_option("--seed", opt.seed, "master seed (default: PALAB_SEED or 1)")
      ->each([&opt](const std::string&) { opt.seed_set = true; });
  sub->add_option("--workers", opt.workers, "worker threads (0: all cores)");
  sub->add_option("--budget", opt.budget, "exact solver node cap");
  sub->add_option("--beta", opt.beta, "confidence exponent (provenance echo)");
  sub->add_option("-o,--out", opt.out, "CSV output path (default: stdout)");
  sub->add_option("--summary", opt.summary, "summary JSON path");
}

void validate_common(const ExpOptions& opt) {
  if (opt.d < 1) throw InputError("d must be >= 1");
  if (!(opt.p > 0.0)) throw InputError("p must be > 0");
  for (std::size_t n : opt.n_values)
    if (n < 1) throw InputError("n must be >= 1");
  if (opt.trials < 1) throw InputError("trials must be >= 1");
  if (opt.budget > kDefaultExactBudget)
    std::cerr << "warning: exact budget raised to " << opt.budget << " (default "
              << kDefaultExactBudget << "); search cost grows exponentially\n";
}

json config_json(const ExpOptions& opt, const ExperimentConfig& cfg) {
  json j;
  j["functional"] = std::string(functional_name(cfg.functional));
  j["d"] = cfg.d;
  j["p"] = cfg.p;
  j["n"] = cfg.n_values;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed.master;
  j["workers"] = cfg.workers;
  j["budget"] = cfg.exact_budget;
  j["beta"] = cfg.beta;
  j["out"] = opt.out;
  j["summary"] = opt.summary;
  return j;
}

std::string experiment_id(const std::string& kind, const ExperimentConfig& cfg) {
  std::ostringstream id;
  id << kind << '-' << functional_name(cfg.functional) << "-d" << cfg.d << "-p"
     << fmt17(cfg.p) << "-s" << cfg.seed.master;
  return id.str();
}

json aggregate_json(const Aggregate& agg) {
  return json{{"count", agg.count},
              {"mean", agg.mean},
              {"sd", agg.sd},
              {"min", agg.min},
              {"max", agg.max}};
}

// ---------------------------------------------------------------------------
// exp handlers

int run_exp_gamma(const ExpOptions& opt) {
  validate_common(opt);
  const ExperimentConfig cfg = opt.config();
  const GammaEstimate est = run_gamma(cfg);
  const std::string id = experiment_id("gamma", cfg);

  Sink sink(opt.out);
  CsvWriter csv(sink.stream());
  csv.row({"experiment_id", "functional", "d", "p", "n", "trial", "seed", "value",
           "normalized_value", "wall_ms"});
  for (const TrialRecord& rec : est.records)
    csv.row({id, std::string(functional_name(cfg.functional)), std::to_string(cfg.d),
             fmt17(cfg.p), std::to_string(rec.n), std::to_string(rec.trial),
             std::to_string(rec.stream_seed), fmt17(rec.value), fmt17(rec.normalized),
             fmt17(rec.wall_ms)});

  json summary;
  summary["command"] = "exp gamma";
  summary["experiment_id"] = id;
  summary["config"] = config_json(opt, cfg);
  json per_n = json::array();
  for (std::size_t i = 0; i < est.n_values.size(); ++i) {
    json row = aggregate_json(est.normalized_stats[i]);
    row["n"] = est.n_values[i];
    per_n.push_back(row);
  }
  summary["normalized_per_n"] = per_n;
  summary["trend"] = est.trend;
  write_summary(summary, opt.summary, sink.to_file());
  return 0;
}

int run_exp_ratio(const ExpOptions& opt) {
  validate_common(opt);
  ExperimentConfig cfg = opt.config();
  cfg.functional = Functional::Pt;  // the ratio is always PT over PA-or-MST
  const RatioStats stats = run_ratio(cfg);
  const std::string id = experiment_id("ratio", cfg);
  const std::string denom_kind = stats.exact_denominator ? "PA_exact" : "MST";

  Sink sink(opt.out);
  CsvWriter csv(sink.stream());
  csv.row({"experiment_id", "functional", "d", "p", "n", "trial", "seed", "value",
           "normalized_value", "wall_ms", "pt_value", "denominator",
           "denominator_kind", "two_heavy"});
  for (const RatioRecord& rec : stats.records)
    csv.row({id, "PT", std::to_string(cfg.d), fmt17(cfg.p), std::to_string(rec.n),
             std::to_string(rec.trial), std::to_string(rec.stream_seed),
             fmt17(rec.ratio), fmt17(rec.ratio), fmt17(rec.wall_ms), fmt17(rec.pt),
             fmt17(rec.denominator), denom_kind, fmt17(rec.two_heavy)});

  json summary;
  summary["command"] = "exp ratio";
  summary["experiment_id"] = id;
  summary["config"] = config_json(opt, cfg);
  summary["denominator"] = denom_kind;
  json per_n = json::array();
  for (std::size_t i = 0; i < stats.n_values.size(); ++i) {
    json row = aggregate_json(stats.ratio_stats[i]);
    row["n"] = stats.n_values[i];
    row["pt_over_two_heavy"] = aggregate_json(stats.pt_over_two_heavy[i]);
    per_n.push_back(row);
  }
  summary["ratio_per_n"] = per_n;
  write_summary(summary, opt.summary, sink.to_file());
  return 0;
}

int run_exp_d1(const ExpOptions& opt, double interval, std::size_t samples) {
  if (interval > 0.0) {
    // Single-interval Monte Carlo for the per-interval charge expectations.
    if (!(opt.p > 0.0)) throw InputError("p must be > 0");
    const Seed seed{opt.seed_set ? opt.seed : default_seed()};
    const IntervalChargeStats stats = interval_charge_mc(interval, opt.p, samples, seed);

    Sink sink(opt.out);
    CsvWriter csv(sink.stream());
    csv.row({"experiment_id", "length", "p", "samples", "mean_m", "expected_m",
             "mean_p", "expected_p", "rel_err_m", "rel_err_p"});
    const std::string id = "d1-interval-p" + fmt17(opt.p) + "-s" +
                           std::to_string(seed.master);
    csv.row({id, fmt17(stats.length), fmt17(stats.p), std::to_string(stats.samples),
             fmt17(stats.mean_m), fmt17(stats.expected_m), fmt17(stats.mean_p),
             fmt17(stats.expected_p),
             fmt17(std::abs(stats.mean_m - stats.expected_m) / stats.expected_m),
             fmt17(std::abs(stats.mean_p - stats.expected_p) / stats.expected_p)});

    json summary;
    summary["command"] = "exp d1 --interval";
    summary["experiment_id"] = id;
    summary["config"] = {{"length", interval}, {"p", opt.p},
                         {"samples", samples},  {"seed", seed.master},
                         {"out", opt.out},      {"summary", opt.summary}};
    summary["mean_m"] = stats.mean_m;
    summary["expected_m"] = stats.expected_m;
    summary["mean_p"] = stats.mean_p;
    summary["expected_p"] = stats.expected_p;
    write_summary(summary, opt.summary, sink.to_file());
    return 0;
  }

  if (opt.d != 1) throw InputError("exp d1 requires d=1");
  if (opt.n_values.empty()) throw InputError("n must list at least one value");
  validate_common(opt);
  const ExperimentConfig cfg = opt.config();
  cfg.validate();
  const std::string id = experiment_id("d1", cfg);

  std::vector<std::size_t> ns = cfg.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::vector<OneDimDecomposition> recs(ns.size() * cfg.trials);
  parallel_run(recs.size(), cfg.workers, [&](std::size_t task) {
    const std::size_t n = ns[task / cfg.trials];
    const std::uint64_t trial = task % cfg.trials;
    recs[task] = run_d1_decomposition(gen_uniform(cfg.seed, trial, n, 1, cfg.p));
  });

  Sink sink(opt.out);
  CsvWriter csv(sink.stream());
  csv.row({"experiment_id", "d", "p", "n", "trial", "seed", "m_star", "m_prime",
           "p_star", "p_prime", "m_even", "m_odd", "p_even", "p_odd", "mst_total",
           "pt_total"});
  for (std::size_t task = 0; task < recs.size(); ++task) {
    const std::size_t n = ns[task / cfg.trials];
    const std::uint64_t trial = task % cfg.trials;
    const OneDimDecomposition& dec = recs[task];
    csv.row({id, "1", fmt17(cfg.p), std::to_string(n), std::to_string(trial),
             std::to_string(trial_seed(cfg.seed, trial)), fmt17(dec.m_star),
             fmt17(dec.m_prime), fmt17(dec.p_star), fmt17(dec.p_prime),
             fmt17(dec.m_even), fmt17(dec.m_odd), fmt17(dec.p_even),
             fmt17(dec.p_odd), fmt17(dec.mst_total), fmt17(dec.pt_total)});
  }

  json summary;
  summary["command"] = "exp d1";
  summary["experiment_id"] = id;
  summary["config"] = config_json(opt, cfg);
  json per_n = json::array();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    std::vector<double> ratios(cfg.trials);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const OneDimDecomposition& dec = recs[i * cfg.trials + t];
      ratios[t] = dec.p_star / dec.m_star;
    }
    json row = aggregate_json(aggregate(ratios));
    row["n"] = ns[i];
    row["statistic"] = "p_star_over_m_star";
    per_n.push_back(row);
  }
  summary["per_n"] = per_n;
  write_summary(summary, opt.summary, sink.to_file());
  return 0;
}

int run_exp_smooth(const ExpOptions& opt, int grid) {
  validate_common(opt);
  const ExperimentConfig cfg = opt.config();
  const SmoothnessResult result = probe_smoothness(cfg, grid);
  const std::string id = experiment_id("smooth", cfg);

  Sink sink(opt.out);
  CsvWriter csv(sink.stream());
  csv.row({"experiment_id", "functional", "d", "p", "n", "trials", "grid", "victims",
           "max_abs_delta", "normalized_max"});
  for (const SmoothnessPerN& row : result.per_n)
    csv.row({id, std::string(functional_name(cfg.functional)), std::to_string(cfg.d),
             fmt17(cfg.p), std::to_string(row.n), std::to_string(cfg.trials),
             std::to_string(result.grid), std::to_string(result.victims_per_trial),
             fmt17(row.max_abs_delta), fmt17(row.normalized_max)});

  json summary;
  summary["command"] = "exp smooth";
  summary["experiment_id"] = id;
  summary["config"] = config_json(opt, cfg);
  summary["config"]["grid"] = grid;
  double constant = 0.0;
  json per_n = json::array();
  for (const SmoothnessPerN& row : result.per_n) {
    per_n.push_back({{"n", row.n},
                     {"max_abs_delta", row.max_abs_delta},
                     {"normalized_max", row.normalized_max}});
    constant = std::max(constant, row.normalized_max);
  }
  summary["per_n"] = per_n;
  summary["normalized_max_constant"] = constant;
  write_summary(summary, opt.summary, sink.to_file());
  return 0;
}

int run_exp_close(const ExpOptions& opt) {
  validate_common(opt);
  const ExperimentConfig cfg = opt.config();
  const ClosenessResult result = probe_closeness(cfg);
  const std::string id = experiment_id("close", cfg);

  Sink sink(opt.out);
  CsvWriter csv(sink.stream());
  csv.row({"experiment_id", "d", "p", "n", "trial", "seed", "pa", "pa_boundary",
           "diff", "normalized_diff"});
  for (const ClosenessRecord& rec : result.records)
    csv.row({id, std::to_string(cfg.d), fmt17(cfg.p), std::to_string(rec.n),
             std::to_string(rec.trial), std::to_string(rec.stream_seed),
             fmt17(rec.pa), fmt17(rec.pa_boundary), fmt17(rec.diff),
             fmt17(rec.normalized)});

  json summary;
  summary["command"] = "exp close";
  summary["experiment_id"] = id;
  summary["config"] = config_json(opt, cfg);
  summary["violations"] = result.violations;
  json per_n = json::array();
  for (std::size_t i = 0; i < result.n_values.size(); ++i) {
    json row = aggregate_json(result.normalized_stats[i]);
    row["n"] = result.n_values[i];
    per_n.push_back(row);
  }
  summary["normalized_diff_per_n"] = per_n;
  write_summary(summary, opt.summary, sink.to_file());
  return 0;
}

int run_exp_tail(const ExpOptions& opt, const std::vector<double>& thresholds) {
  validate_common(opt);
  const ExperimentConfig cfg = opt.config();
  const TailResult result = probe_tail(cfg, thresholds);
  const std::string id = experiment_id("tail", cfg);

  Sink sink(opt.out);
  CsvWriter csv(sink.stream());
  csv.row({"experiment_id", "functional", "d", "p", "n", "trials", "mean", "sd",
           "threshold_rel", "threshold_abs", "frequency", "bound"});
  std::size_t per_n_index = 0;
  for (const TailCell& cell : result.cells) {
    while (result.n_values[per_n_index] != cell.n) ++per_n_index;
    const Aggregate& agg = result.value_stats[per_n_index];
    csv.row({id, std::string(functional_name(cfg.functional)), std::to_string(cfg.d),
             fmt17(cfg.p), std::to_string(cell.n), std::to_string(cfg.trials),
             fmt17(agg.mean), fmt17(agg.sd), fmt17(cell.threshold_rel),
             fmt17(cell.threshold_abs), fmt17(cell.frequency), fmt17(cell.bound)});
  }

  json summary;
  summary["command"] = "exp tail";
  summary["experiment_id"] = id;
  summary["config"] = config_json(opt, cfg);
  summary["config"]["thresholds"] = thresholds;
  summary["fitted_c"] = result.fitted_c;
  write_summary(summary, opt.summary, sink.to_file());
  return 0;
}

int run_exp_emptyball(const ExpOptions& opt, double c_ball) {
  validate_common(opt);
  const ExperimentConfig cfg = opt.config();
  const EmptyBallResult result = probe_empty_ball(cfg, c_ball);
  const std::string id = experiment_id("emptyball", cfg);

  Sink sink(opt.out);
  CsvWriter csv(sink.stream());
  csv.row({"experiment_id", "d", "p", "n", "trials", "c_ball", "radius",
           "centers_per_axis", "fraction_empty"});
  for (const EmptyBallPerN& row : result.per_n)
    csv.row({id, std::to_string(cfg.d), fmt17(cfg.p), std::to_string(row.n),
             std::to_string(cfg.trials), fmt17(c_ball), fmt17(row.radius),
             std::to_string(row.centers_per_axis), fmt17(row.fraction_empty)});

  json summary;
  summary["command"] = "exp emptyball";
  summary["experiment_id"] = id;
  summary["config"] = config_json(opt, cfg);
  summary["config"]["c_ball"] = c_ball;
  json per_n = json::array();
  for (const EmptyBallPerN& row : result.per_n)
    per_n.push_back({{"n", row.n},
                     {"radius", row.radius},
                     {"fraction_empty", row.fraction_empty}});
  summary["per_n"] = per_n;
  write_summary(summary, opt.summary, sink.to_file());
  return 0;
}

int run_exp_longestedge(const ExpOptions& opt) {
  validate_common(opt);
  const ExperimentConfig cfg = opt.config();
  const LongestEdgeResult result = probe_longest_edge(cfg);
  const std::string id = experiment_id("longestedge", cfg);

  Sink sink(opt.out);
  CsvWriter csv(sink.stream());
  csv.row({"experiment_id", "d", "p", "n", "trials", "longest_mean", "longest_sd",
           "longest_max", "power_mean", "power_max", "max_degree"});
  for (const LongestEdgePerN& row : result.per_n)
    csv.row({id, std::to_string(cfg.d), fmt17(cfg.p), std::to_string(row.n),
             std::to_string(cfg.trials), fmt17(row.normalized_longest.mean),
             fmt17(row.normalized_longest.sd), fmt17(row.normalized_longest.max),
             fmt17(row.normalized_max_power.mean), fmt17(row.normalized_max_power.max),
             std::to_string(row.max_degree)});

  json summary;
  summary["command"] = "exp longestedge";
  summary["experiment_id"] = id;
  summary["config"] = config_json(opt, cfg);
  json per_n = json::array();
  for (const LongestEdgePerN& row : result.per_n)
    per_n.push_back({{"n", row.n},
                     {"normalized_longest", aggregate_json(row.normalized_longest)},
                     {"normalized_max_power", aggregate_json(row.normalized_max_power)},
                     {"max_degree", row.max_degree}});
  summary["per_n"] = per_n;
  write_summary(summary, opt.summary, sink.to_file());
  return 0;
}

int run_exp_cone(const ExpOptions& opt, double alpha) {
  if (opt.d < 1) throw InputError("d must be >= 1");
  if (!(opt.p > 0.0)) throw InputError("p must be > 0");
  if (opt.trials < 1) throw InputError("trials must be >= 1");
  const Seed seed{opt.seed_set ? opt.seed : default_seed()};
  const ConeResult result = probe_cone(opt.trials, alpha, opt.d, opt.p, seed);
  const std::string id = "cone-d" + std::to_string(opt.d) + "-p" + fmt17(opt.p) +
                         "-s" + std::to_string(seed.master);

  Sink sink(opt.out);
  CsvWriter csv(sink.stream());
  csv.row({"experiment_id", "d", "p", "alpha", "factor", "samples",
           "violations_reach", "violations_growth"});
  csv.row({id, std::to_string(opt.d), fmt17(opt.p), fmt17(result.alpha),
           fmt17(result.factor), std::to_string(result.samples),
           std::to_string(result.violations_reach),
           std::to_string(result.violations_growth)});

  json summary;
  summary["command"] = "exp cone";
  summary["experiment_id"] = id;
  summary["config"] = {{"d", opt.d},        {"p", opt.p},
                       {"alpha", alpha},    {"samples", opt.trials},
                       {"seed", seed.master}, {"out", opt.out},
                       {"summary", opt.summary}};
  summary["factor"] = result.factor;
  summary["violations_reach"] = result.violations_reach;
  summary["violations_growth"] = result.violations_growth;
  write_summary(summary, opt.summary, sink.to_file());
  return 0;
}

int run_exp_additivity(const ExpOptions& opt, std::size_t max_n) {
  if (opt.d < 1) throw InputError("d must be >= 1");
  if (!(opt.p > 0.0)) throw InputError("p must be > 0");
  if (opt.trials < 1) throw InputError("trials must be >= 1");
  const Seed seed{opt.seed_set ? opt.seed : default_seed()};
  const AdditivityResult result =
      probe_additivity(opt.trials, max_n, opt.d, opt.p, seed, opt.budget, opt.workers);
  const std::string id = "additivity-d" + std::to_string(opt.d) + "-p" +
                         fmt17(opt.p) + "-s" + std::to_string(seed.master);

  Sink sink(opt.out);
  CsvWriter csv(sink.stream());
  csv.row({"experiment_id", "d", "p", "max_n", "trials", "sub_checked",
           "sub_violations", "super_checked", "super_violations"});
  csv.row({id, std::to_string(opt.d), fmt17(opt.p), std::to_string(max_n),
           std::to_string(result.trials), std::to_string(result.sub_checked),
           std::to_string(result.sub_violations), std::to_string(result.super_checked),
           std::to_string(result.super_violations)});

  json summary;
  summary["command"] = "exp additivity";
  summary["experiment_id"] = id;
  summary["config"] = {{"d", opt.d},       {"p", opt.p},
                       {"max_n", max_n},   {"trials", opt.trials},
                       {"seed", seed.master}, {"budget", opt.budget},
                       {"out", opt.out},   {"summary", opt.summary}};
  summary["sub_violations"] = result.sub_violations;
  summary["super_violations"] = result.super_violations;
  write_summary(summary, opt.summary, sink.to_file());
  return 0;
}

// ---------------------------------------------------------------------------
// gen / solve

int run_gen(std::size_t n, int d, double p, std::uint64_t seed, bool seed_set,
            std::uint64_t trial, const std::string& out) {
  const Seed master{seed_set ? seed : default_seed()};
  const Instance inst = gen_uniform(master, trial, n, d, p);
  // The instance format has no room for a config echo; it goes to stderr.
  std::cerr << "config: {\"command\":\"gen\",\"n\":" << n << ",\"d\":" << d
            << ",\"p\":" << fmt17(p) << ",\"seed\":" << master.master
            << ",\"trial\":" << trial << ",\"out\":\"" << out << "\"}\n";
  Sink sink(out);
  sink.stream() << instance_to_json(inst);
  return 0;
}

int run_solve(const std::string& alg, const std::string& in, const std::string& mode,
              int budget, const std::string& out) {
  if (in.empty()) throw InputError("solve requires -i/--in");
  const Instance inst = load_instance(in);
  if (budget > kDefaultExactBudget)
    std::cerr << "warning: exact budget raised to " << budget << " (default "
              << kDefaultExactBudget << "); search cost grows exponentially\n";

  json result;
  result["config"] = {{"alg", alg},       {"in", in},   {"mode", mode},
                      {"budget", budget}, {"out", out}, {"n", inst.size()},
                      {"d", inst.dim()},  {"p", inst.gradient()}};

  if (alg == "mst") {
    const MstSummary mst = build_mst(inst);
    result["functional"] = "MST";
    result["value"] = mst.total;
    result["longest_edge"] = mst.longest_edge;
    result["max_degree"] = mst.max_degree;
    result["heavy"] = mst.heavy;
    result["light"] = mst.light;
  } else if (alg == "pt") {
    const PaSolution sol = pt_heuristic(inst);
    result["functional"] = "PT";
    result["value"] = sol.value;
    result["connected"] = sol.connected;
    result["powers"] = sol.powers;
  } else if (alg == "pa-exact") {
    const PaSolution sol = exact_pa(inst, budget);
    result["functional"] = "PA_exact";
    result["value"] = sol.value;
    result["connected"] = sol.connected;
    result["powers"] = sol.powers;
  } else if (alg == "pab-exact") {
    const BoundarySolution sol =
        exact_pa_boundary(inst, HyperRect::unit_cube(inst.dim()), budget);
    result["functional"] = "PA_B_exact";
    result["value"] = sol.value;
    result["powers"] = sol.powers;
    result["boundary_links"] = sol.boundary_links;
  } else if (alg == "oracle") {
    if (mode == "boundary") {
      const BoundarySolution sol =
          oracle_enumerate_boundary(inst, HyperRect::unit_cube(inst.dim()));
      result["functional"] = "PA_B_oracle";
      result["value"] = sol.value;
      result["powers"] = sol.powers;
      result["boundary_links"] = sol.boundary_links;
    } else {
      const PaSolution sol = oracle_enumerate(inst);
      result["functional"] = "PA_oracle";
      result["value"] = sol.value;
      result["powers"] = sol.powers;
    }
  } else {
    throw InputError("unknown --alg '" + alg +
                     "' (expected mst, pt, pa-exact, pab-exact, oracle)");
  }

  Sink sink(out);
  sink.stream() << result.dump(2) << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"palab — power assignment laboratory"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a uniform random instance");
  std::size_t gen_n = 0;
  int gen_d = 2;
  double gen_p = 2.0;
  std::uint64_t gen_seed = 0, gen_trial = 0;
  bool gen_seed_set = false;
  std::string gen_out;
  gen->add_option("--n", gen_n, "number of points")->required();
  gen->add_option("--d", gen_d, "dimension");
  gen->add_option("--p", gen_p, "distance-power gradient");
  gen->add_option("--seed", gen_seed, "master seed (default: PALAB_SEED or 1)")
      ->each([&gen_seed_set](const std::string&) { gen_seed_set = true; });
  gen->add_option("--trial", gen_trial, "trial index within the seed stream");
  gen->add_option("-o,--out", gen_out, "output path (default: stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "run one solver on an instance file");
  std::string solve_alg, solve_in, solve_out, solve_mode = "interior";
  int solve_budget = kDefaultExactBudget;
  solve->add_option("--alg", solve_alg, "mst, pt, pa-exact, pab-exact, oracle")
      ->required();
  solve->add_option("-i,--in", solve_in, "instance JSON path")->required();
  solve->add_option("--mode", solve_mode, "oracle mode: interior or boundary");
  solve->add_option("--budget", solve_budget, "exact solver node cap");
  solve->add_option("-o,--out", solve_out, "output path (default: stdout)");

  // exp with one nested subcommand per claim family
  auto* exp = app.add_subcommand("exp", "Monte Carlo experiments and probes");
  exp->require_subcommand(1);

  ExpOptions gamma_opt;
  auto* exp_gamma = exp->add_subcommand("gamma", "normalized-value trend per n");
  add_common_exp_options(exp_gamma, gamma_opt);

  ExpOptions ratio_opt;
  auto* exp_ratio = exp->add_subcommand("ratio", "PT over PA (or MST) ratios");
  add_common_exp_options(exp_ratio, ratio_opt);

  ExpOptions d1_opt;
  d1_opt.d = 1;
  double d1_interval = 0.0;
  std::size_t d1_samples = 100000;
  auto* exp_d1 = exp->add_subcommand("d1", "one-dimensional charge decomposition");
  add_common_exp_options(exp_d1, d1_opt, /*needs_n=*/false);
  exp_d1->add_option("--interval", d1_interval,
                     "run the single-interval Monte Carlo at this length");
  exp_d1->add_option("--samples", d1_samples, "samples for --interval mode");

  ExpOptions smooth_opt;
  int smooth_grid = 8;
  auto* exp_smooth = exp->add_subcommand("smooth", "single-point replacement probe");
  add_common_exp_options(exp_smooth, smooth_opt);
  exp_smooth->add_option("--grid", smooth_grid, "replacement grid resolution per axis");

  ExpOptions close_opt;
  auto* exp_close = exp->add_subcommand("close", "PA vs boundary-PA gap (exact)");
  add_common_exp_options(exp_close, close_opt);

  ExpOptions tail_opt;
  std::vector<double> tail_thresholds{0.0, 0.05, 0.1, 0.2};
  auto* exp_tail = exp->add_subcommand("tail", "deviation tail frequencies");
  add_common_exp_options(exp_tail, tail_opt);
  exp_tail->add_option("--thresholds", tail_thresholds,
                       "thresholds as multiples of the per-n mean")
      ->delimiter(',');

  ExpOptions ball_opt;
  double ball_c = 1.0;
  auto* exp_ball = exp->add_subcommand("emptyball", "empty-ball frequency probe");
  add_common_exp_options(exp_ball, ball_opt);
  exp_ball->add_option("--cball", ball_c, "radius constant c in c(log n/n)^(1/d)");

  ExpOptions led_opt;
  auto* exp_led = exp->add_subcommand("longestedge", "longest MST edge and degrees");
  add_common_exp_options(exp_led, led_opt);

  ExpOptions cone_opt;
  double cone_alpha = std::acos(-1.0) / 6.0;
  auto* exp_cone = exp->add_subcommand("cone", "cone lemma violation search");
  add_common_exp_options(exp_cone, cone_opt, /*needs_n=*/false);
  exp_cone->add_option("--alpha", cone_alpha, "cone half-angle (radians, <= pi/3)");

  ExpOptions add_opt;
  auto* exp_add = exp->add_subcommand("additivity", "sub/superadditivity checks");
  add_common_exp_options(exp_add, add_opt, /*needs_n=*/false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*gen) return run_gen(gen_n, gen_d, gen_p, gen_seed, gen_seed_set, gen_trial, gen_out);
    if (*solve) return run_solve(solve_alg, solve_in, solve_mode, solve_budget, solve_out);
    if (*exp_gamma) return run_exp_gamma(gamma_opt);
    if (*exp_ratio) return run_exp_ratio(ratio_opt);
    if (*exp_d1) return run_exp_d1(d1_opt, d1_interval, d1_samples);
    if (*exp_smooth) return run_exp_smooth(smooth_opt, smooth_grid);
    if (*exp_close) return run_exp_close(close_opt);
    if (*exp_tail) return run_exp_tail(tail_opt, tail_thresholds);
    if (*exp_ball) return run_exp_emptyball(ball_opt, ball_c);
    if (*exp_led) return run_exp_longestedge(led_opt);
    if (*exp_cone) return run_exp_cone(cone_opt, cone_alpha);
    if (*exp_add)
      return run_exp_additivity(
          add_opt, add_opt.n_values.empty() ? 8 : add_opt.n_values.front());
    throw InputError("no subcommand selected");
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? argc - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace palab::cli
