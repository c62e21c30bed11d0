#pragma once

#include <cstdint>
#include <vector>

#include "palab/instance.hpp"

namespace palab {

struct Edge {
  std::uint32_t u, v;  // u < v
  double weight;       // p-powered length
};

/// Minimum spanning tree under p-powered Euclidean weights (the tree is the
/// same as under plain Euclidean weights since x -> x^p is monotone).
struct MstSummary {
  std::vector<Edge> edges;    // canonical order: ascending (u, v)
  double total = 0.0;         // sum of p-powered weights
  double longest_edge = 0.0;  // Euclidean, not powered
  int max_degree = 0;
  // Heavy/light split: the ceil((n-1)/2) heaviest edges (ties by canonical
  // edge index) vs the rest. For odd n this is the paper-style m = (n-1)/2
  // heaviest; for even n the extra middle edge lands on the heavy side.
  double heavy = 0.0;
  double light = 0.0;
};

/// Exact Euclidean MST. Dense Prim up to 2048 points, Boruvka over a kd-tree
/// beyond that, sorted-adjacency path for d = 1. Equal-weight edges are
/// ordered by their (u, v) index pair so every run is bit-reproducible.
MstSummary build_mst(const Instance& inst);

/// Sum of the k heaviest MST edge weights (k clamped to the edge count).
/// PT <= 2 * heavy_sum(ceil(n/2)) is the provable chain form.
double heavy_sum(const MstSummary& mst, std::size_t k);

namespace detail {
// The individual construction strategies, exposed for cross-validation.
std::vector<Edge> mst_sorted_path(const Instance& inst);
std::vector<Edge> mst_dense_prim(const Instance& inst);
std::vector<Edge> mst_boruvka_kdtree(const Instance& inst);
inline constexpr std::size_t kDensePrimCutoff = 2048;
}  // namespace detail

}  // namespace palab
