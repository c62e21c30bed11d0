#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "palab/geometry.hpp"

namespace palab {

/// A point set in [0,1]^d together with its metric parameters. Coordinates
/// are stored flat (n * d, row per point) and validated on construction:
/// n >= 1, every coordinate finite and in [0,1].
class Instance {
 public:
  Instance(Params params, std::vector<double> flat_coords);
  Instance(Params params, const std::vector<Point>& points);

  const Params& params() const { return params_; }
  int dim() const { return params_.d; }
  double gradient() const { return params_.p; }
  std::size_t size() const { return coords_.size() / params_.d; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * params_.d, static_cast<std::size_t>(params_.d)};
  }
  const std::vector<double>& coords() const { return coords_; }

 private:
  Params params_;
  std::vector<double> coords_;
};

/// New instance keeping only the listed point indices (order preserved).
Instance subset(const Instance& inst, std::span<const std::uint32_t> keep);

}  // namespace palab
