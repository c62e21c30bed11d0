#include "palab/power.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "palab/errors.hpp"
#include "palab/stats.hpp"
#include "palab/union_find.hpp"

namespace palab {

namespace {

void check_psi(const Instance& inst, const PowerVector& psi) {
  if (psi.size() != inst.size())
    throw InputError("power vector has " + std::to_string(psi.size()) +
                     " entries, expected " + std::to_string(inst.size()));
  for (double v : psi)
    if (!std::isfinite(v) || v < 0.0)
      throw InputError("powers must be finite and non-negative");
}

bool covers(double psi, double weight) { return psi + kPowerSlack >= weight; }

}  // namespace

PowerVector induced_power(const Instance& inst, std::span<const Edge> edges) {
  PowerVector psi(inst.size(), 0.0);
  for (const Edge& e : edges) {
    if (e.u >= inst.size() || e.v >= inst.size())
      throw InputError("edge references a point index out of range");
    psi[e.u] = std::max(psi[e.u], e.weight);
    psi[e.v] = std::max(psi[e.v], e.weight);
  }
  return psi;
}

PowerVector induced_power(
    const Instance& inst,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  std::vector<Edge> weighted;
  weighted.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= inst.size() || v >= inst.size())
      throw InputError("edge references a point index out of range");
    weighted.push_back(
        Edge{u, v, powered_dist(inst.point(u), inst.point(v), inst.gradient())});
  }
  return induced_power(inst, weighted);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> induced_graph(
    const Instance& inst, const PowerVector& psi) {
  check_psi(inst, psi);
  const std::size_t n = inst.size();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      const double w = powered_dist(inst.point(u), inst.point(v), inst.gradient());
      if (covers(psi[u], w) && covers(psi[v], w)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

bool is_connected_pa(const Instance& inst, const PowerVector& psi) {
  check_psi(inst, psi);
  const std::size_t n = inst.size();
  if (n == 1) return true;
  UnionFind uf(n);
  for (std::uint32_t u = 0; u < n && uf.components() > 1; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      const double w = powered_dist(inst.point(u), inst.point(v), inst.gradient());
      if (covers(psi[u], w) && covers(psi[v], w)) uf.unite(u, v);
    }
  }
  return uf.components() == 1;
}

PaSolution pt_heuristic(const Instance& inst) {
  const MstSummary mst = build_mst(inst);
  PaSolution sol;
  sol.powers = induced_power(inst, mst.edges);
  sol.value = compensated_sum(sol.powers);
  sol.connected = true;  // powers cover a spanning tree by construction
  return sol;
}

bool sandwich_check(const Instance& inst, double pa_value) {
  const double mst = build_mst(inst).total;
  const double pt = pt_heuristic(inst).value;
  return mst <= pa_value + kValueTol && pa_value <= pt + kValueTol &&
         pt <= 2.0 * mst + kValueTol;
}

}  // namespace palab
