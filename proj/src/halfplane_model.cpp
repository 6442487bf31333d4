#include "hypgeo/halfplane_model.hpp"

#include <algorithm>
#include <cmath>

#include "hypgeo/error.hpp"

namespace hypgeo {

HalfSpacePoint::HalfSpacePoint(Point p) : p_(std::move(p)) {
  require_finite(p_);
  if (!(p_[p_.dim() - 1] > 0.0)) fail(ErrorCode::DomainError, "point is not in the upper half-space");
}

Point HalfSpacePoint::horizontal() const {
  Point h = p_;
  h[h.dim() - 1] = 0.0;
  return h;
}

double horizontal_distance(const HalfSpacePoint& x, const HalfSpacePoint& y) {
  require_same_dim(x.point(), y.point());
  return dist(x.horizontal(), y.horizontal());
}

namespace {

void require_distinct(const HalfSpacePoint& x, const HalfSpacePoint& y) {
  require_same_dim(x.point(), y.point());
  if (dist(x.point(), y.point()) < kDistinctTol) fail(ErrorCode::DegenerateInput, "points coincide");
}

void require_planar(const HalfSpacePoint& x) {
  if (x.dim() != 2) fail(ErrorCode::DimensionMismatch, "operation is defined in the half-plane only");
}

bool vertical_pair(const HalfSpacePoint& x, const HalfSpacePoint& y) {
  const double x1 = x.point()[0];
  const double y1 = y.point()[0];
  return std::abs(x1 - y1) < 1e-12 * std::max({1.0, std::abs(x1), std::abs(y1)});
}

}  // namespace

double rho_half(const HalfSpacePoint& x, const HalfSpacePoint& y) {
  require_same_dim(x.point(), y.point());
  return 2.0 * std::asinh(dist(x.point(), y.point()) / (2.0 * std::sqrt(x.height() * y.height())));
}

GeodesicSegment geodesic_half(const HalfSpacePoint& x, const HalfSpacePoint& y) {
  require_planar(x);
  require_distinct(x, y);
  const Point& p = x.point();
  const Point& q = y.point();

  GeodesicSegment seg;
  seg.x = p;
  seg.y = q;
  if (vertical_pair(x, y)) {
    seg.carrier = make_line(Point{p[0], 0.0}, Point{0.0, 1.0});
    const Point foot{p[0], 0.0};
    const bool upward = p[1] < q[1];
    seg.ideal_x = upward ? foot : Point::infinity(2);
    seg.ideal_y = upward ? Point::infinity(2) : foot;
    return seg;
  }

  const double dx = p[0] - q[0];
  const double c = norm2_difference(p, q) / (2.0 * dx);
  const double offset = (dx * dx + q[1] * q[1] - p[1] * p[1]) / (2.0 * dx);
  const double rc = std::sqrt(p[1] * p[1] + offset * offset);
  seg.carrier = make_circle(Point{c, 0.0}, rc);
  const Point left{c - rc, 0.0};
  const Point right{c + rc, 0.0};
  const bool rightward = p[0] < q[0];
  seg.ideal_x = rightward ? left : right;
  seg.ideal_y = rightward ? right : left;
  return seg;
}

CircleOrLine bisector_half(const HalfSpacePoint& x, const HalfSpacePoint& y) {
  require_distinct(x, y);
  const double xn = x.height();
  const double yn = y.height();
  if (std::abs(xn - yn) < 1e-12 * std::max(xn, yn)) return perpendicular_bisector(x.point(), y.point());
  if (xn > yn) return bisector_half(y, x);
  // With A^2 = x_n / y_n: a = (x - A^2 y) / (1 - A^2) = (y_n x - x_n y) / (y_n - x_n),
  // r = A |x - y| / (1 - A^2) = sqrt(x_n y_n) |x - y| / (y_n - x_n).
  const double gap = yn - xn;
  Point center = (x.point() * yn - y.point() * xn) / gap;
  center[center.dim() - 1] = 0.0;  // y_n x_n - x_n y_n vanishes identically
  return make_circle(std::move(center), std::sqrt(xn * yn) * dist(x.point(), y.point()) / gap);
}

Point midpoint_half(const HalfSpacePoint& x, const HalfSpacePoint& y) {
  require_distinct(x, y);
  const double xn = x.height();
  const double yn = y.height();
  const double sum = xn + yn;
  const double h = horizontal_distance(x, y);
  Point z = (x.horizontal() * yn + y.horizontal() * xn) / sum;
  z[z.dim() - 1] = std::sqrt(xn * yn) * std::hypot(sum, h) / sum;
  return z;
}

Circle ball_half_to_euclidean(const HalfSpacePoint& x, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) fail(ErrorCode::DomainError, "ball radius must be positive");
  Point center = x.horizontal();
  center[center.dim() - 1] = x.height() * std::cosh(r);
  return make_circle(std::move(center), x.height() * std::sinh(r));
}

}  // namespace hypgeo
