#include "palab/kdtree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "palab/errors.hpp"

namespace palab {

KdTree::KdTree(const double* coords, std::size_t n, int d)
    : coords_(coords), n_(n), d_(d), perm_(n) {
  if (n == 0 || d < 1) throw InputError("kd-tree needs n >= 1 and d >= 1");
  std::iota(perm_.begin(), perm_.end(), std::uint32_t{0});
  nodes_.reserve(2 * n / kLeafSize + 2);
  root_ = build(0, static_cast<std::uint32_t>(n));
}

std::uint32_t KdTree::build(std::uint32_t begin, std::uint32_t end) {
  const std::uint32_t id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.emplace_back();
  nodes_[id].begin = begin;
  nodes_[id].end = end;
  if (end - begin <= kLeafSize) return id;

  // Split the widest axis of the range's bounding box at the median point.
  std::vector<double> lo(d_, std::numeric_limits<double>::infinity());
  std::vector<double> hi(d_, -std::numeric_limits<double>::infinity());
  for (std::uint32_t i = begin; i < end; ++i) {
    const double* pt = coords_ + perm_[i] * static_cast<std::size_t>(d_);
    for (int a = 0; a < d_; ++a) {
      lo[a] = std::min(lo[a], pt[a]);
      hi[a] = std::max(hi[a], pt[a]);
    }
  }
  int axis = 0;
  for (int a = 1; a < d_; ++a)
    if (hi[a] - lo[a] > hi[axis] - lo[axis]) axis = a;
  if (hi[axis] - lo[axis] == 0.0) return id;  // all points coincide: keep leaf

  const std::uint32_t mid = begin + (end - begin) / 2;
  std::nth_element(perm_.begin() + begin, perm_.begin() + mid, perm_.begin() + end,
                   [&](std::uint32_t a, std::uint32_t b) {
                     const double ca = coords_[a * static_cast<std::size_t>(d_) + axis];
                     const double cb = coords_[b * static_cast<std::size_t>(d_) + axis];
                     return ca < cb || (ca == cb && a < b);
                   });

  nodes_[id].axis = axis;
  nodes_[id].split = coords_[perm_[mid] * static_cast<std::size_t>(d_) + axis];
  const std::uint32_t left = build(begin, mid);
  const std::uint32_t right = build(mid, end);
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

void KdTree::refresh_components(std::span<const std::uint32_t> comp) {
  refresh(root_, comp);
}

std::uint32_t KdTree::refresh(std::uint32_t node_id, std::span<const std::uint32_t> comp) {
  Node& node = nodes_[node_id];
  if (node.axis < 0) {
    std::uint32_t common = comp[perm_[node.begin]];
    for (std::uint32_t i = node.begin + 1; i < node.end && common != kMixed; ++i)
      if (comp[perm_[i]] != common) common = kMixed;
    node.comp = common;
  } else {
    const std::uint32_t l = refresh(node.left, comp);
    const std::uint32_t r = refresh(node.right, comp);
    node.comp = (l == r) ? l : kMixed;
  }
  return node.comp;
}

KdTree::Hit KdTree::nearest_foreign(std::uint32_t query,
                                    std::span<const std::uint32_t> comp) const {
  Hit best{kNone, std::numeric_limits<double>::infinity()};
  const std::span<const double> q{coords_ + query * static_cast<std::size_t>(d_),
                                  static_cast<std::size_t>(d_)};
  // The query point itself shares its component, so the filter skips it.
  search(root_, q, comp[query], comp, best);
  return best;
}

void KdTree::search(std::uint32_t node_id, std::span<const double> q,
                    std::uint32_t query_comp,
                    std::span<const std::uint32_t> comp, Hit& best) const {
  const Node& node = nodes_[node_id];
  if (node.comp == query_comp) return;  // whole subtree is home turf

  if (node.axis < 0) {
    for (std::uint32_t i = node.begin; i < node.end; ++i) {
      const std::uint32_t j = perm_[i];
      if (comp[j] == query_comp) continue;
      const double* pt = coords_ + j * static_cast<std::size_t>(d_);
      double sq = 0.0;
      for (int a = 0; a < d_; ++a) {
        const double diff = q[a] - pt[a];
        sq += diff * diff;
      }
      if (sq < best.sq_dist || (sq == best.sq_dist && j < best.index)) {
        best.sq_dist = sq;
        best.index = j;
      }
    }
    return;
  }

  const double diff = q[node.axis] - node.split;
  const std::uint32_t near = diff < 0.0 ? node.left : node.right;
  const std::uint32_t far = diff < 0.0 ? node.right : node.left;
  search(near, q, query_comp, comp, best);
  // <= keeps equal-distance candidates reachable so index tie-breaks stay exact
  if (diff * diff <= best.sq_dist) search(far, q, query_comp, comp, best);
}

}  // namespace palab
