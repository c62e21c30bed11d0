#include "palab/mst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "palab/kdtree.hpp"
#include "palab/stats.hpp"
#include "palab/union_find.hpp"

namespace palab {

namespace {

Edge make_edge(std::uint32_t a, std::uint32_t b, double weight) {
  if (a > b) std::swap(a, b);
  return Edge{a, b, weight};
}

// Strict total order on candidate edges: weight, then index pair. Gives every
// construction pass the same deterministic tie-breaking.
bool edge_less(double sq_a, std::uint32_t au, std::uint32_t av, double sq_b,
               std::uint32_t bu, std::uint32_t bv) {
  if (sq_a != sq_b) return sq_a < sq_b;
  if (au != bu) return au < bu;
  return av < bv;
}

MstSummary summarize(const Instance& inst, std::vector<Edge> edges) {
  MstSummary mst;
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u < b.u || (a.u == b.u && a.v < b.v);
  });
  mst.edges = std::move(edges);

  std::vector<double> weights(mst.edges.size());
  std::vector<int> degree(inst.size(), 0);
  double longest_sq = 0.0;
  for (std::size_t i = 0; i < mst.edges.size(); ++i) {
    const Edge& e = mst.edges[i];
    weights[i] = e.weight;
    ++degree[e.u];
    ++degree[e.v];
    longest_sq = std::max(longest_sq, squared_dist(inst.point(e.u), inst.point(e.v)));
  }
  mst.total = compensated_sum(weights);
  mst.longest_edge = std::sqrt(longest_sq);
  mst.max_degree = mst.edges.empty() ? 0 : *std::max_element(degree.begin(), degree.end());

  std::vector<std::uint32_t> order(mst.edges.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return weights[a] > weights[b] || (weights[a] == weights[b] && a < b);
  });
  const std::size_t heavy_count = (mst.edges.size() + 1) / 2;
  std::vector<double> heavy_w, light_w;
  for (std::size_t i = 0; i < order.size(); ++i)
    (i < heavy_count ? heavy_w : light_w).push_back(weights[order[i]]);
  mst.heavy = compensated_sum(heavy_w);
  mst.light = compensated_sum(light_w);
  return mst;
}

}  // namespace

namespace detail {

std::vector<Edge> mst_sorted_path(const Instance& inst) {
  const std::size_t n = inst.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const double ca = inst.coords()[a], cb = inst.coords()[b];
    return ca < cb || (ca == cb && a < b);
  });
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  const double p = inst.gradient();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double gap = inst.coords()[order[i + 1]] - inst.coords()[order[i]];
    edges.push_back(make_edge(order[i], order[i + 1], powered_from_squared(gap * gap, p)));
  }
  return edges;
}

std::vector<Edge> mst_dense_prim(const Instance& inst) {
  const std::size_t n = inst.size();
  const int d = inst.dim();
  const double p = inst.gradient();
  const double* pts = inst.coords().data();

  std::vector<double> best_sq(n, std::numeric_limits<double>::infinity());
  std::vector<std::uint32_t> parent(n, 0);
  std::vector<char> in_tree(n, 0);
  in_tree[0] = 1;
  for (std::size_t v = 1; v < n; ++v) {
    double sq = 0.0;
    for (int a = 0; a < d; ++a) {
      const double diff = pts[v * d + a] - pts[a];
      sq += diff * diff;
    }
    best_sq[v] = sq;
  }

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t round = 1; round < n; ++round) {
    std::uint32_t pick = 0;
    bool have = false;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      if (!have) {
        pick = v;
        have = true;
        continue;
      }
      const auto [pu, pv] = std::minmax(parent[pick], pick);
      const auto [cu, cv] = std::minmax(parent[v], v);
      if (edge_less(best_sq[v], cu, cv, best_sq[pick], pu, pv)) pick = v;
    }
    in_tree[pick] = 1;
    edges.push_back(make_edge(parent[pick], pick, powered_from_squared(best_sq[pick], p)));

    const double* base = pts + pick * static_cast<std::size_t>(d);
    for (std::uint32_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      double sq = 0.0;
      for (int a = 0; a < d; ++a) {
        const double diff = pts[v * d + a] - base[a];
        sq += diff * diff;
      }
      const auto [cu, cv] = std::minmax(parent[v], v);
      const auto [nu, nv] = std::minmax(pick, v);
      if (edge_less(sq, nu, nv, best_sq[v], cu, cv)) {
        best_sq[v] = sq;
        parent[v] = pick;
      }
    }
  }
  return edges;
}

std::vector<Edge> mst_boruvka_kdtree(const Instance& inst) {
  const std::size_t n = inst.size();
  const double p = inst.gradient();
  KdTree tree(inst.coords().data(), n, inst.dim());
  UnionFind uf(n);
  std::vector<std::uint32_t> comp(n);
  std::vector<Edge> edges;
  edges.reserve(n - 1);

  struct Candidate {
    double sq = std::numeric_limits<double>::infinity();
    std::uint32_t u = 0, v = 0;
    bool valid = false;
  };
  std::vector<Candidate> best(n);

  while (edges.size() + 1 < n) {
    for (std::uint32_t i = 0; i < n; ++i) comp[i] = uf.find(i);
    tree.refresh_components(comp);
    for (auto& c : best) c = Candidate{};

    for (std::uint32_t q = 0; q < n; ++q) {
      const KdTree::Hit hit = tree.nearest_foreign(q, comp);
      const auto [u, v] = std::minmax(q, hit.index);
      Candidate& slot = best[comp[q]];
      if (!slot.valid || edge_less(hit.sq_dist, u, v, slot.sq, slot.u, slot.v)) {
        slot = Candidate{hit.sq_dist, u, v, true};
      }
    }
    for (const Candidate& c : best) {
      if (!c.valid) continue;
      if (uf.unite(c.u, c.v))
        edges.push_back(make_edge(c.u, c.v, powered_from_squared(c.sq, p)));
    }
  }
  return edges;
}

}  // namespace detail

MstSummary build_mst(const Instance& inst) {
  const std::size_t n = inst.size();
  if (n == 1) return summarize(inst, {});
  std::vector<Edge> edges;
  if (inst.dim() == 1)
    edges = detail::mst_sorted_path(inst);
  else if (n <= detail::kDensePrimCutoff)
    edges = detail::mst_dense_prim(inst);
  else
    edges = detail::mst_boruvka_kdtree(inst);
  return summarize(inst, std::move(edges));
}

double heavy_sum(const MstSummary& mst, std::size_t k) {
  std::vector<double> weights;
  weights.reserve(mst.edges.size());
  for (const Edge& e : mst.edges) weights.push_back(e.weight);
  std::sort(weights.begin(), weights.end(), std::greater<>());
  weights.resize(std::min(k, weights.size()));
  return compensated_sum(weights);
}

}  // namespace palab
