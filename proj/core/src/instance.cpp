#include "palab/instance.hpp"

#include <cmath>
#include <string>

#include "palab/errors.hpp"

namespace palab {

namespace {

std::vector<double> flatten(const std::vector<Point>& points, int d) {
  std::vector<double> flat;
  flat.reserve(points.size() * d);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(points[i].size()) != d)
      throw InputError("point " + std::to_string(i) + " has " +
                       std::to_string(points[i].size()) +
                       " coordinates, expected d=" + std::to_string(d));
    flat.insert(flat.end(), points[i].begin(), points[i].end());
  }
  return flat;
}

}  // namespace

Instance::Instance(Params params, std::vector<double> flat_coords)
    : params_(params), coords_(std::move(flat_coords)) {
  if (coords_.empty()) throw InputError("instance needs at least one point");
  if (coords_.size() % params_.d != 0)
    throw InputError("coordinate count is not a multiple of d");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const double c = coords_[i];
    if (!std::isfinite(c) || c < 0.0 || c > 1.0)
      throw InputError("coordinate " + std::to_string(i % params_.d) +
                       " of point " + std::to_string(i / params_.d) +
                       " is outside [0,1]");
  }
}

Instance::Instance(Params params, const std::vector<Point>& points)
    : Instance(params, flatten(points, params.d)) {}

Instance subset(const Instance& inst, std::span<const std::uint32_t> keep) {
  const int d = inst.dim();
  std::vector<double> flat;
  flat.reserve(keep.size() * d);
  for (std::uint32_t i : keep) {
    if (i >= inst.size()) throw InputError("subset index out of range");
    const auto pt = inst.point(i);
    flat.insert(flat.end(), pt.begin(), pt.end());
  }
  return Instance(inst.params(), std::move(flat));
}

}  // namespace palab
