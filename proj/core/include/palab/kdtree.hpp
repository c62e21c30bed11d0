#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace palab {

/// Static kd-tree over a flat coordinate array (n points, stride d). Built for
/// the Boruvka MST pass: the one query it answers is "nearest point whose
/// component label differs from mine", with whole subtrees pruned once they
/// collapse to a single component.
class KdTree {
 public:
  KdTree(const double* coords, std::size_t n, int d);

  struct Hit {
    std::uint32_t index;
    double sq_dist;
  };

  /// Nearest point to point `query` with comp[hit] != comp[query]; ties by
  /// smaller index. Call refresh_components(comp) whenever labels change.
  /// At least one foreign point must exist.
  Hit nearest_foreign(std::uint32_t query, std::span<const std::uint32_t> comp) const;

  /// Recomputes the per-subtree common-component summaries.
  void refresh_components(std::span<const std::uint32_t> comp);

 private:
  static constexpr std::uint32_t kMixed = 0xffffffffu;
  static constexpr std::uint32_t kNone = 0xffffffffu;
  static constexpr std::size_t kLeafSize = 12;

  struct Node {
    double split = 0.0;
    std::int32_t axis = -1;  // -1: leaf
    std::uint32_t left = kNone, right = kNone;
    std::uint32_t begin = 0, end = 0;
    std::uint32_t comp = kMixed;
  };

  std::uint32_t build(std::uint32_t begin, std::uint32_t end);
  std::uint32_t refresh(std::uint32_t node_id, std::span<const std::uint32_t> comp);
  void search(std::uint32_t node_id, std::span<const double> q,
              std::uint32_t query_comp, std::span<const std::uint32_t> comp,
              Hit& best) const;

  const double* coords_;
  std::size_t n_;
  int d_;
  std::vector<std::uint32_t> perm_;
  std::vector<Node> nodes_;
  std::uint32_t root_;
};

}  // namespace palab
