#pragma once

#include "hypgeo/geom_core.hpp"

namespace hypgeo {

/// A point of the upper half-space H^n: last coordinate strictly positive.
class HalfSpacePoint {
 public:
  /// Throws DomainError unless p is finite with p[n-1] > 0.
  explicit HalfSpacePoint(Point p);
  HalfSpacePoint(std::initializer_list<double> coords) : HalfSpacePoint(Point(coords)) {}

  const Point& point() const noexcept { return p_; }
  std::size_t dim() const noexcept { return p_.dim(); }
  double height() const { return p_[p_.dim() - 1]; }
  /// x' = x - e_n x_n.
  Point horizontal() const;

 private:
  Point p_;
};

/// Euclidean distance between the boundary projections, |x' - y'|.
double horizontal_distance(const HalfSpacePoint& x, const HalfSpacePoint& y);

/// arcosh(1 + |x-y|^2 / (2 x_n y_n)), evaluated as 2 arsinh(|x-y| / (2 sqrt(x_n y_n))).
double rho_half(const HalfSpacePoint& x, const HalfSpacePoint& y);

/// Geodesic through x, y in H^2: a semicircle centered on the real axis, or a
/// vertical line whose far ideal endpoint is the infinity sentinel.
GeodesicSegment geodesic_half(const HalfSpacePoint& x, const HalfSpacePoint& y);

/// {z : rho(x, z) = rho(y, z)}: a sphere centered on the boundary, or the
/// vertical perpendicular bisector when x_n = y_n.
CircleOrLine bisector_half(const HalfSpacePoint& x, const HalfSpacePoint& y);

/// Hyperbolic midpoint; valid in any dimension and for vertical pairs.
Point midpoint_half(const HalfSpacePoint& x, const HalfSpacePoint& y);

/// Euclidean sphere bounding the hyperbolic ball B(x, r):
/// center x' + x_n cosh(r) e_n, radius x_n sinh(r).
Circle ball_half_to_euclidean(const HalfSpacePoint& x, double r);

}  // namespace hypgeo
