#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "palab/instance.hpp"
#include "palab/mst.hpp"

namespace palab {

/// Per-node transmit powers, units of distance^p.
using PowerVector = std::vector<double>;

struct PaSolution {
  PowerVector powers;
  double value = 0.0;  // sum of powers
  bool connected = false;
};

/// Powers induced by an edge set: psi(v) = max over incident edges of the
/// p-powered length, 0 for isolated nodes.
PowerVector induced_power(const Instance& inst, std::span<const Edge> edges);
PowerVector induced_power(const Instance& inst,
                          std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

/// Graph induced by powers: edge {u,v} iff both psi(u) and psi(v) cover the
/// p-powered distance (with kPowerSlack). Pairs returned with u < v, ascending.
std::vector<std::pair<std::uint32_t, std::uint32_t>> induced_graph(
    const Instance& inst, const PowerVector& psi);

/// True iff the induced graph is one component spanning all nodes (n = 1: true).
bool is_connected_pa(const Instance& inst, const PowerVector& psi);

/// The MST heuristic: each node gets the p-powered length of its longest
/// incident MST edge. Always yields a connected PA graph.
PaSolution pt_heuristic(const Instance& inst);

/// Checks MST <= pa_value <= PT <= 2*MST within kValueTol. pa_value must be
/// the exact optimum (or a certified lower bound such as the MST total).
bool sandwich_check(const Instance& inst, double pa_value);

}  // namespace palab
