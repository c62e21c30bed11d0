#include "palab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "palab/errors.hpp"

namespace palab {

Params::Params(int d_, double p_) : d(d_), p(p_) {
  if (d < 1) throw InputError("d must be >= 1");
  if (!(p > 0.0) || !std::isfinite(p)) throw InputError("p must be > 0");
}

HyperRect::HyperRect(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty() || lower_.size() != upper_.size())
    throw InputError("hyperrectangle needs matching, non-empty lower/upper");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]) ||
        !(lower_[i] < upper_[i]))
      throw InputError("hyperrectangle requires lower[i] < upper[i] at axis " +
                       std::to_string(i));
  }
}

HyperRect HyperRect::unit_cube(int d) {
  if (d < 1) throw InputError("d must be >= 1");
  return HyperRect(std::vector<double>(d, 0.0), std::vector<double>(d, 1.0));
}

double HyperRect::diameter() const {
  double sq = 0.0;
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    const double side = upper_[i] - lower_[i];
    sq += side * side;
  }
  return std::sqrt(sq);
}

bool HyperRect::contains(std::span<const double> x) const {
  if (x.size() != lower_.size()) return false;
  for (std::size_t i = 0; i < lower_.size(); ++i)
    if (x[i] < lower_[i] || x[i] > upper_[i]) return false;
  return true;
}

std::pair<HyperRect, HyperRect> HyperRect::bisect(int axis, double cut) const {
  if (axis < 0 || axis >= dim()) throw InputError("bisect: axis out of range");
  if (!(cut > lower_[axis]) || !(cut < upper_[axis]))
    throw InputError("bisect: cut must lie strictly inside the rectangle");
  auto lo_hi = upper_;
  lo_hi[axis] = cut;
  auto hi_lo = lower_;
  hi_lo[axis] = cut;
  return {HyperRect(lower_, std::move(lo_hi)), HyperRect(std::move(hi_lo), upper_)};
}

double squared_dist(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty())
    throw InputError("points must share a positive dimension");
  double sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sq += diff * diff;
  }
  return sq;
}

double powered_from_squared(double sq, double p) {
  if (p == 2.0) return sq;
  const double r = std::sqrt(sq);
  if (p == 1.0) return r;
  return std::pow(r, p);
}

double powered_dist(std::span<const double> a, std::span<const double> b, double p) {
  if (!(p > 0.0)) throw InputError("p must be > 0");
  return powered_from_squared(squared_dist(a, b), p);
}

double dist_to_boundary(std::span<const double> x, const HyperRect& r) {
  if (static_cast<int>(x.size()) != r.dim())
    throw InputError("point dimension does not match rectangle");
  if (!r.contains(x)) throw InputError("point lies outside the rectangle");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    best = std::min(best, x[i] - r.lower()[i]);
    best = std::min(best, r.upper()[i] - x[i]);
  }
  return best;
}

double angle_at(std::span<const double> x, std::span<const double> v,
                std::span<const double> y) {
  if (x.size() != v.size() || y.size() != v.size() || v.empty())
    throw InputError("points must share a positive dimension");
  double dot = 0.0, nx = 0.0, ny = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double ux = x[i] - v[i];
    const double uy = y[i] - v[i];
    dot += ux * uy;
    nx += ux * ux;
    ny += uy * uy;
  }
  if (nx == 0.0 || ny == 0.0)
    throw InputError("angle_at: apex coincides with an endpoint");
  const double c = std::clamp(dot / std::sqrt(nx * ny), -1.0, 1.0);
  return std::acos(c);
}

}  // namespace palab
