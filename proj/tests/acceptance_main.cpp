// Acceptance suite: one criterion per paper-level claim, each printing a
// single [PASS]/[FAIL] line. Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "palab/d1.hpp"
#include "palab/exact.hpp"
#include "palab/experiment.hpp"
#include "palab/generators.hpp"
#include "palab/instance_io.hpp"
#include "palab/mst.hpp"
#include "palab/power.hpp"
#include "palab/probes.hpp"

using namespace palab;
namespace fs = std::filesystem;

namespace {

// Pinned constant for the smoothness criterion: pilot maxima (MST, d=2, p=1,
// grid 8, 2 trials, seed 2026) were 0.62 / 0.56 / 0.49 at n = 256/1024/4096.
// A non-smooth functional would push the normalized maximum up by the inverse
// scale (4x-16x over this n range), which 2.0 still catches.
constexpr double kSmoothnessConstant = 2.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(4);
  out << v;
  return out.str();
}

// --- 1 -----------------------------------------------------------------

Outcome oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_interior = 0.0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 6;  // 2..7
    const int d = 1 + i % 3;
    const double p = 1.0 + (i / 3) % 3;
    const Instance inst = gen_uniform(Seed{101}, i, n, d, p);
    worst_interior = std::max(
        worst_interior, std::abs(exact_pa(inst).value - oracle_enumerate(inst).value));
  }
  double worst_boundary = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + i % 6;
    const int d = 1 + i % 3;
    const double p = 1.0 + (i / 3) % 3;
    const Instance inst = gen_uniform(Seed{102}, i, n, d, p);
    const HyperRect cube = HyperRect::unit_cube(d);
    worst_boundary = std::max(worst_boundary,
                              std::abs(exact_pa_boundary(inst, cube).value -
                                       oracle_enumerate_boundary(inst, cube).value));
  }
  const double elapsed = seconds_since(t0);
  Outcome out;
  out.pass = worst_interior <= 1e-9 && worst_boundary <= 1e-9 && elapsed < 60.0;
  out.detail = "max |dPA| interior " + fmt(worst_interior) + ", boundary " +
               fmt(worst_boundary) + " over 200+100 instances in " + fmt(elapsed) +
               " s";
  return out;
}

// --- 2 -----------------------------------------------------------------

Outcome sandwich_chain() {
  std::size_t violations_small = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + i % 7;  // 2..8
    const int d = 1 + i % 3;
    const double p = 1.0 + (i / 3) % 3;
    const Instance inst = gen_uniform(Seed{201}, i, n, d, p);
    if (!sandwich_check(inst, exact_pa(inst).value)) ++violations_small;
  }
  std::size_t violations_large = 0;
  for (int i = 0; i < 1000; ++i) {
    const int d = 1 + i % 3;
    const double p = 1.0 + (i / 3) % 3;
    const Instance inst = gen_uniform(Seed{202}, i, 1000, d, p);
    // MST is a certified lower bound for PA, so it stands in at n = 1000.
    if (!sandwich_check(inst, build_mst(inst).total)) ++violations_large;
  }
  Outcome out;
  out.pass = violations_small == 0 && violations_large == 0;
  out.detail = std::to_string(violations_small) + " violations at n<=8 (exact PA), " +
               std::to_string(violations_large) + " at n=1000 (MST surrogate)";
  return out;
}

// --- 3 -----------------------------------------------------------------

Outcome d1_ratio() {
  ExperimentConfig cfg;
  cfg.d = 1;
  cfg.n_values = {10000};
  cfg.trials = 50;
  cfg.seed = Seed{301};

  cfg.p = 2.0;
  const double mean_p2 = run_ratio(cfg).ratio_stats[0].mean;
  cfg.p = 1.0;
  const double mean_p1 = run_ratio(cfg).ratio_stats[0].mean;

  Outcome out;
  out.pass = mean_p2 >= 1.70 && mean_p2 <= 1.80 && mean_p1 >= 1.45 && mean_p1 <= 1.55;
  out.detail = "mean PT/MST p=2: " + fmt(mean_p2) + " (target 1.75), p=1: " +
               fmt(mean_p1) + " (target 1.5), n=10^4, 50 trials";
  return out;
}

// --- 4 -----------------------------------------------------------------

Outcome interval_expectations() {
  const std::vector<std::pair<double, double>> cases{{0.4, 1.0}, {0.4, 2.0}, {1.0, 3.0}};
  Outcome out;
  out.pass = true;
  for (const auto& [len, p] : cases) {
    const IntervalChargeStats stats = interval_charge_mc(len, p, 100000, Seed{401});
    const double err_m = std::abs(stats.mean_m - stats.expected_m) / stats.expected_m;
    const double err_p = std::abs(stats.mean_p - stats.expected_p) / stats.expected_p;
    if (err_m > 0.02 || err_p > 0.02) out.pass = false;
    out.detail += "(l=" + fmt(len) + ",p=" + fmt(p) + ") errM " + fmt(err_m) +
                  " errP " + fmt(err_p) + "; ";
  }
  out.detail += "tolerance 2%";
  return out;
}

// --- 5 -----------------------------------------------------------------

Outcome convergence_trend() {
  ExperimentConfig cfg;
  cfg.functional = Functional::Mst;
  cfg.d = 2;
  cfg.p = 1.0;
  cfg.n_values = {250, 2000, 4000};
  cfg.trials = 30;
  cfg.seed = Seed{501};
  const GammaEstimate est = run_gamma(cfg);
  const double mean_2000 = est.normalized_stats[1].mean;
  const double mean_4000 = est.normalized_stats[2].mean;
  const double sd_250 = est.normalized_stats[0].sd;
  const double sd_4000 = est.normalized_stats[2].sd;

  Outcome out;
  const double drift = std::abs(mean_2000 - mean_4000);
  out.pass = drift <= 0.05 * mean_4000 && sd_4000 < sd_250;
  out.detail = "mean(2000)=" + fmt(mean_2000) + " mean(4000)=" + fmt(mean_4000) +
               " drift " + fmt(100.0 * drift / mean_4000) + "% (cap 5%); sd " +
               fmt(sd_4000) + " < " + fmt(sd_250);
  return out;
}

// --- 6 -----------------------------------------------------------------

Outcome unbounded_degree_star() {
  double k = 10.0;
  for (; k <= 10000.0; k *= 2.0) {
    const Instance star = star_instance({3, k, 2.0});
    const PaSolution sol = exact_pa(star);
    const PaSolution oracle = oracle_enumerate(star);
    if (std::abs(sol.value - oracle.value) > 1e-9) continue;

    const auto edges = induced_graph(star, sol.powers);
    std::vector<int> degree(star.size(), 0);
    for (const auto& [u, v] : edges) {
      ++degree[u];
      ++degree[v];
    }
    const auto hub = std::max_element(degree.begin(), degree.end());
    if (*hub == 6 && std::abs(star.coords()[hub - degree.begin()] - 0.5) < 1e-12) {
      Outcome out;
      out.pass = true;
      out.detail = "optimal PA graph is the degree-6 star centred at 0.5 (K=" +
                   fmt(k) + ", oracle-verified)";
      return out;
    }
  }
  return {false, "no K up to 10^4 produced the degree-6 star"};
}

// --- 7 -----------------------------------------------------------------

Outcome cone_lemma() {
  const double alpha = std::acos(-1.0) / 6.0;
  std::size_t reach = 0, growth = 0;
  for (int d : {2, 3})
    for (double p : {1.0, 2.0}) {
      const ConeResult res = probe_cone(100000, alpha, d, p, Seed{701});
      reach += res.violations_reach;
      growth += res.violations_growth;
    }
  Outcome out;
  out.pass = reach == 0 && growth == 0;
  out.detail = std::to_string(reach) + " reach / " + std::to_string(growth) +
               " growth violations over 4x10^5 triples at alpha=pi/6";
  return out;
}

// --- 8 -----------------------------------------------------------------

Outcome additivity() {
  std::size_t sub = 0, super = 0, sub_n = 0, super_n = 0;
  for (int d : {1, 2})
    for (double p : {1.0, 2.0}) {
      const AdditivityResult res = probe_additivity(125, 8, d, p, Seed{801});
      sub += res.sub_violations;
      super += res.super_violations;
      sub_n += res.sub_checked;
      super_n += res.super_checked;
    }
  Outcome out;
  out.pass = sub == 0 && super == 0;
  out.detail = std::to_string(sub) + "/" + std::to_string(sub_n) +
               " subadditivity and " + std::to_string(super) + "/" +
               std::to_string(super_n) + " superadditivity violations";
  return out;
}

// --- 9 -----------------------------------------------------------------

Outcome boundary_dominance() {
  ExperimentConfig cfg;
  cfg.d = 2;
  cfg.p = 1.0;
  cfg.n_values = {4, 6, 8};
  cfg.trials = 200;
  cfg.seed = Seed{901};
  const ClosenessResult res = probe_closeness(cfg);
  bool finite = true;
  for (std::size_t i = 0; i < res.n_values.size(); ++i)
    finite = finite && std::isfinite(res.normalized_stats[i].mean);
  Outcome out;
  out.pass = res.violations == 0 && finite;
  out.detail = std::to_string(res.violations) + " PA_B > PA violations; normalized " +
               "mean gaps " + fmt(res.normalized_stats[0].mean) + ", " +
               fmt(res.normalized_stats[1].mean) + ", " +
               fmt(res.normalized_stats[2].mean) + " at n=4,6,8 (200 trials)";
  return out;
}

// --- 10 ----------------------------------------------------------------

Outcome concentration_direction() {
  Outcome out;
  out.pass = true;
  for (double p : {1.0, 2.0}) {
    ExperimentConfig cfg;
    cfg.functional = Functional::Mst;
    cfg.d = 2;
    cfg.p = p;
    cfg.n_values = {256, 4096};
    cfg.trials = 500;
    cfg.seed = Seed{1001};
    const TailResult res = probe_tail(cfg, {0.1});
    const double f_small = res.cells[0].frequency;
    const double f_large = res.cells[1].frequency;
    if (f_large > f_small) out.pass = false;
    out.detail += "p=" + fmt(p) + ": freq " + fmt(f_large) + " (n=4096) <= " +
                  fmt(f_small) + " (n=256); ";
  }

  ExperimentConfig cfg;
  cfg.functional = Functional::Mst;
  cfg.d = 2;
  cfg.p = 1.0;
  cfg.n_values = {256, 1024, 4096};
  cfg.trials = 2;
  cfg.seed = Seed{2026};
  const SmoothnessResult smooth = probe_smoothness(cfg, 8);
  out.detail += "smoothness maxima ";
  for (const SmoothnessPerN& row : smooth.per_n) {
    if (row.normalized_max >= kSmoothnessConstant) out.pass = false;
    out.detail += fmt(row.normalized_max) + " ";
  }
  out.detail += "< " + fmt(kSmoothnessConstant);
  return out;
}

// --- 11 ----------------------------------------------------------------

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Drops the wall_ms column (index 9) from every row.
std::string strip_wall(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string row;
  while (std::getline(in, row)) {
    std::istringstream cells(row);
    std::string cell;
    std::size_t index = 0;
    bool first = true;
    while (std::getline(cells, cell, ',')) {
      if (index++ != 9) {
        if (!first) out << ',';
        out << cell;
        first = false;
      }
    }
    out << '\n';
  }
  return out.str();
}

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() / "palab_acceptance";
  fs::create_directories(dir);
  const std::string base = std::string(PALAB_CLI_PATH) +
                           " exp gamma --functional mst --d 2 --p 1 --n 128,256"
                           " --trials 6 --seed 7";
  struct Run {
    const char* name;
    std::string args;
  };
  const std::vector<Run> runs{{"w1", " --workers 1"},
                              {"w4", " --workers 4"},
                              {"w4b", " --workers 4"}};
  std::vector<std::string> bodies;
  for (const Run& run : runs) {
    const fs::path csv = dir / (std::string("det_") + run.name + ".csv");
    const fs::path sum = dir / (std::string("det_") + run.name + ".json");
    const std::string cmd = base + run.args + " -o " + csv.string() + " --summary " +
                            sum.string() + " >/dev/null 2>&1";
    if (WEXITSTATUS(std::system(cmd.c_str())) != 0)
      return {false, "CLI run failed: " + cmd};
    bodies.push_back(strip_wall(slurp(csv)));
  }
  Outcome out;
  out.pass = bodies[0] == bodies[1] && bodies[1] == bodies[2] && !bodies[0].empty();
  out.detail = "CSV bodies (wall_ms column aside) byte-identical across --workers "
               "1/4 and a repeat run";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* label;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence (exact_pa vs enumeration)", oracle_equivalence},
      {2, "sandwich chain MST <= PA <= PT <= 2 MST", sandwich_chain},
      {3, "d=1 ratio approaches 2 - 2^-p", d1_ratio},
      {4, "per-interval charge expectations", interval_expectations},
      {5, "normalized MST convergence trend", convergence_trend},
      {6, "unbounded-degree star instance", unbounded_degree_star},
      {7, "cone lemma holds on random triples", cone_lemma},
      {8, "sub/superadditivity of PA and PA_B", additivity},
      {9, "boundary dominance and closeness", boundary_dominance},
      {10, "concentration direction and typical smoothness", concentration_direction},
      {11, "worker-count determinism of CSV output", determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << criterion.number << ". "
              << criterion.label << " — " << outcome.detail << '\n';
    std::cout.flush();
  }
  std::cout << "ACCEPTANCE: " << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed\n";
  return failures;
}
