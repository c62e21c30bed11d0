#pragma once

#include <span>
#include <vector>

namespace palab {

/// Solver value comparisons: totals within this are considered equal.
inline constexpr double kValueTol = 1e-9;
/// Induced-edge coverage slack: an edge is present if psi + slack >= weight.
inline constexpr double kPowerSlack = 1e-12;

using Point = std::vector<double>;

/// Dimension and distance-power gradient shared by a whole instance.
struct Params {
  int d;
  double p;

  Params(int d, double p);
};

/// Axis-aligned box with lower[i] < upper[i]; the domain of the boundary
/// functional.
class HyperRect {
 public:
  HyperRect(std::vector<double> lower, std::vector<double> upper);

  static HyperRect unit_cube(int d);

  int dim() const { return static_cast<int>(lower_.size()); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }

  double diameter() const;
  bool contains(std::span<const double> x) const;

  /// Split along `axis` at `cut` (strictly inside); returns (lower, upper) halves.
  std::pair<HyperRect, HyperRect> bisect(int axis, double cut) const;

 private:
  std::vector<double> lower_, upper_;
};

double squared_dist(std::span<const double> a, std::span<const double> b);

/// (sqrt(sq))^p, with exact shortcuts for p = 1 and p = 2. All modules derive
/// powered weights through this one function so candidate levels, edge
/// weights, and induced-graph tests compare identical doubles.
double powered_from_squared(double sq, double p);

/// Euclidean distance raised to the power p: the transmit power needed to
/// bridge a and b in the power-attenuation model.
double powered_dist(std::span<const double> a, std::span<const double> b, double p);

/// Minimum perpendicular distance from x to the 2d faces of r; x must lie in r.
double dist_to_boundary(std::span<const double> x, const HyperRect& r);

/// Angle at apex v between rays v->x and v->y, in [0, pi]. The cosine is
/// clamped to [-1, 1] before acos (near-collinear triples drift outside).
double angle_at(std::span<const double> x, std::span<const double> v,
                std::span<const double> y);

}  // namespace palab
