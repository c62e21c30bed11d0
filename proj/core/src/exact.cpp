#include "palab/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "palab/errors.hpp"
#include "palab/stats.hpp"
#include "palab/union_find.hpp"

namespace palab {

namespace {

bool covers(double psi, double weight) { return psi + kPowerSlack >= weight; }

// Shared solve state: pairwise powered distances, boundary distances, and the
// candidate level grid. Both the branch-and-bound search and the enumeration
// oracle run over this grid; only the search strategies differ.
struct Context {
  const Instance& inst;
  const HyperRect* rect;
  std::size_t n;
  std::vector<double> pairw;  // n*n, powered
  std::vector<double> bpow;   // boundary distance^p per node (boundary mode)
  std::vector<std::vector<double>> levels;

  Context(const Instance& instance, const HyperRect* r) : inst(instance), rect(r) {
    n = inst.size();
    const double p = inst.gradient();
    pairw.assign(n * n, 0.0);
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v) {
        const double w = powered_dist(inst.point(u), inst.point(v), p);
        pairw[u * n + v] = pairw[v * n + u] = w;
      }
    if (rect) {
      bpow.resize(n);
      for (std::uint32_t v = 0; v < n; ++v) {
        if (!rect->contains(inst.point(v)))
          throw InputError("point " + std::to_string(v) +
                           " lies outside the boundary rectangle");
        const double db = dist_to_boundary(inst.point(v), *rect);
        bpow[v] = powered_from_squared(db * db, p);
      }
    }

    levels.resize(n);
    for (std::uint32_t v = 0; v < n; ++v) {
      std::vector<double>& lv = levels[v];
      if (n == 1) lv.push_back(0.0);
      for (std::uint32_t u = 0; u < n; ++u)
        if (u != v) lv.push_back(pairw[v * n + u]);
      if (rect) lv.push_back(bpow[v]);
      std::sort(lv.begin(), lv.end());
      lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
    }
  }

  // Connectivity of the induced graph, with components counted as joined when
  // any member reaches the boundary (boundary mode uses a virtual node n).
  bool feasible(const std::vector<double>& psi) const {
    UnionFind uf(n + (rect ? 1 : 0));
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v) {
        const double w = pairw[u * n + v];
        if (covers(psi[u], w) && covers(psi[v], w)) uf.unite(u, v);
      }
    if (rect)
      for (std::uint32_t v = 0; v < n; ++v)
        if (covers(psi[v], bpow[v])) uf.unite(v, static_cast<std::uint32_t>(n));
    const std::uint32_t root = uf.find(0);
    for (std::uint32_t v = 1; v < n; ++v)
      if (uf.find(v) != root) return false;
    return true;
  }
};

// Keeps the cheapest feasible assignment seen; ties within kValueTol resolve
// to the lexicographically smallest power vector. Candidate values are always
// the compensated sum in node order, so the reported value does not depend on
// the order the search visited leaves in.
struct Best {
  std::vector<double> psi;
  double value = std::numeric_limits<double>::infinity();
  bool any = false;

  void offer(const std::vector<double>& candidate) {
    const double value_c = compensated_sum(candidate);
    if (!any || value_c < value - kValueTol) {
      psi = candidate;
      value = value_c;
      any = true;
    } else if (value_c <= value + kValueTol &&
               std::lexicographical_compare(candidate.begin(), candidate.end(),
                                            psi.begin(), psi.end())) {
      psi = candidate;
      value = std::min(value, value_c);
    }
  }
};

struct BranchAndBound {
  const Context& ctx;
  std::vector<std::uint32_t> order;  // descending nearest-neighbour distance
  std::vector<double> suffix_min;    // sum of min levels over order[k..]
  std::vector<double> psi;
  Best best;

  explicit BranchAndBound(const Context& context) : ctx(context) {
    const std::size_t n = ctx.n;
    order.resize(n);
    for (std::uint32_t v = 0; v < n; ++v) order[v] = v;
    std::vector<double> nn(n, 0.0);
    for (std::uint32_t v = 0; v < n && n > 1; ++v) {
      double m = std::numeric_limits<double>::infinity();
      for (std::uint32_t u = 0; u < n; ++u)
        if (u != v) m = std::min(m, ctx.pairw[v * n + u]);
      nn[v] = m;
    }
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return nn[a] > nn[b] || (nn[a] == nn[b] && a < b);
    });
    suffix_min.assign(n + 1, 0.0);
    for (std::size_t k = n; k-- > 0;)
      suffix_min[k] = suffix_min[k + 1] + ctx.levels[order[k]].front();
    psi.assign(n, 0.0);
  }

  void seed(const std::vector<double>& candidate) {
    if (ctx.feasible(candidate)) best.offer(candidate);
  }

  void run() { dfs(0, 0.0); }

  void dfs(std::size_t k, double partial) {
    if (k == order.size()) {
      if (ctx.feasible(psi)) best.offer(psi);
      return;
    }
    const std::uint32_t v = order[k];
    for (double level : ctx.levels[v]) {
      // Levels ascend, so once the optimistic bound falls past the incumbent
      // every later sibling does too.
      if (best.any && partial + level + suffix_min[k + 1] > best.value + kValueTol)
        break;
      psi[v] = level;
      dfs(k + 1, partial + level);
    }
  }
};

std::vector<std::uint32_t> boundary_links_of(const Context& ctx,
                                             const std::vector<double>& psi) {
  std::vector<std::uint32_t> links;
  for (std::uint32_t v = 0; v < ctx.n; ++v)
    if (covers(psi[v], ctx.bpow[v])) links.push_back(v);
  return links;
}

std::vector<double> all_boundary_powers(const Context& ctx) {
  std::vector<double> psi(ctx.bpow.begin(), ctx.bpow.end());
  return psi;
}

Best solve_branch_and_bound(const Context& ctx, const Instance& inst) {
  BranchAndBound search(ctx);
  search.seed(pt_heuristic(inst).powers);
  if (ctx.rect) search.seed(all_boundary_powers(ctx));
  search.run();
  return std::move(search.best);
}

Best solve_enumerate(const Context& ctx) {
  const std::size_t n = ctx.n;
  Best best;
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> psi(n);
  double sum = 0.0;
  for (std::uint32_t v = 0; v < n; ++v) {
    psi[v] = ctx.levels[v][0];
    sum += psi[v];
  }
  for (;;) {
    // Anything costlier than the incumbent (plus tolerance) cannot be kept.
    if (!(best.any && sum > best.value + kValueTol) && ctx.feasible(psi))
      best.offer(psi);
    std::size_t v = 0;
    while (v < n) {
      sum -= psi[v];
      if (++idx[v] < ctx.levels[v].size()) {
        psi[v] = ctx.levels[v][idx[v]];
        sum += psi[v];
        break;
      }
      idx[v] = 0;
      psi[v] = ctx.levels[v][0];
      sum += psi[v];
      ++v;
    }
    if (v == n) break;
  }
  return best;
}

void check_budget(const char* what, std::size_t n, int cap) {
  if (static_cast<int>(n) > cap)
    throw CapacityError(std::string(what) + ": " + std::to_string(n) +
                        " points exceed the budget " + std::to_string(cap));
}

}  // namespace

CandidateLevels candidate_levels(const Instance& inst, LevelMode mode,
                                 const HyperRect* rect) {
  if (mode == LevelMode::Boundary && rect == nullptr)
    throw InputError("boundary mode requires a rectangle");
  const Context ctx(inst, mode == LevelMode::Boundary ? rect : nullptr);
  return CandidateLevels{ctx.levels};
}

PaSolution exact_pa(const Instance& inst, int budget) {
  check_budget("exact_pa", inst.size(), budget);
  const Context ctx(inst, nullptr);
  Best best = solve_branch_and_bound(ctx, inst);
  return PaSolution{std::move(best.psi), best.value, true};
}

BoundarySolution exact_pa_boundary(const Instance& inst, const HyperRect& rect,
                                   int budget) {
  check_budget("exact_pa_boundary", inst.size(), budget);
  const Context ctx(inst, &rect);
  Best best = solve_branch_and_bound(ctx, inst);
  BoundarySolution sol;
  sol.boundary_links = boundary_links_of(ctx, best.psi);
  sol.powers = std::move(best.psi);
  sol.value = best.value;
  return sol;
}

PaSolution oracle_enumerate(const Instance& inst) {
  check_budget("oracle_enumerate", inst.size(), kOracleCap);
  const Context ctx(inst, nullptr);
  Best best = solve_enumerate(ctx);
  return PaSolution{std::move(best.psi), best.value, true};
}

BoundarySolution oracle_enumerate_boundary(const Instance& inst,
                                           const HyperRect& rect) {
  check_budget("oracle_enumerate", inst.size(), kOracleCap);
  const Context ctx(inst, &rect);
  Best best = solve_enumerate(ctx);
  BoundarySolution sol;
  sol.boundary_links = boundary_links_of(ctx, best.psi);
  sol.powers = std::move(best.psi);
  sol.value = best.value;
  return sol;
}

}  // namespace palab
