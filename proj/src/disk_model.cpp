#include "hypgeo/disk_model.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "hypgeo/error.hpp"

namespace hypgeo {

namespace {

double require_in_ball(const Point& x) {
  require_finite(x);
  const double c = one_minus_norm2(x);
  if (!(c > 0.0)) fail(ErrorCode::DomainError, "point is not inside the unit ball");
  return c;
}

void require_planar(const Point& x) {
  if (x.dim() != 2) fail(ErrorCode::DimensionMismatch, "operation is defined in the unit disk only");
}

void require_distinct(const Point& x, const Point& y) {
  if (dist(x, y) < kDistinctTol) fail(ErrorCode::DegenerateInput, "points coincide");
}

double cross(const Point& x, const Point& y) { return x[0] * y[1] - x[1] * y[0]; }

}  // namespace

double rho_ball(const Point& x, const Point& y) {
  require_same_dim(x, y);
  const double cx = require_in_ball(x);
  const double cy = require_in_ball(y);
  return 2.0 * std::asinh(dist(x, y) / std::sqrt(cx * cy));
}

double ahlfors_bracket(const Point& x, const Point& y) {
  require_same_dim(x, y);
  const double cx = require_in_ball(x);
  const double cy = require_in_ball(y);
  return std::sqrt(dist2(x, y) + cx * cy);
}

ApollonianBall sphere_to_apollonian(const Point& x, double r) {
  require_in_ball(x);
  if (!(r > 0.0)) fail(ErrorCode::DomainError, "sphere radius must be positive");
  const double nx = norm(x);
  if (nx == 0.0) fail(ErrorCode::DegenerateInput, "sphere about the origin has no Apollonian base points");
  return make_apollonian_ball(x, unit_sphere_inversion(x), nx * std::tanh(r / 2.0));
}

EuclideanBallView ball_to_euclidean(const Point& x, double r) {
  const double c = require_in_ball(x);
  if (!(r > 0.0) || !std::isfinite(r)) fail(ErrorCode::DomainError, "ball radius must be positive");
  const double t = std::tanh(r / 2.0);
  const double nx2 = 1.0 - c;
  const double den = 1.0 - nx2 * t * t;
  EuclideanBallView view;
  view.hyperbolic_center = x;
  view.hyperbolic_radius = r;
  view.t = t;
  view.euclidean_center = x * ((1.0 - t * t) / den);
  view.euclidean_radius = c * t / den;
  return view;
}

Circle hyperbolic_sphere_ball(const Point& x, double r) {
  const EuclideanBallView view = ball_to_euclidean(x, r);
  return make_circle(view.euclidean_center, view.euclidean_radius);
}

bool collinear_with_origin(const Point& x, const Point& y) {
  require_same_dim(x, y);
  const double scale = std::max(norm(x) * norm(y), 1e-300);
  double wedge = 0.0;
  if (x.dim() == 2) {
    wedge = std::abs(cross(x, y));
  } else {
    const double d = dot(x, y);
    wedge = std::sqrt(std::max(0.0, norm2(x) * norm2(y) - d * d));
  }
  return wedge < kCollinearTol * scale;
}

GeodesicSegment geodesic_disk(const Point& x, const Point& y) {
  require_planar(x);
  require_same_dim(x, y);
  require_in_ball(x);
  require_in_ball(y);
  require_distinct(x, y);

  GeodesicSegment seg;
  seg.x = x;
  seg.y = y;

  if (collinear_with_origin(x, y)) {
    const Point u = norm(x) >= norm(y) ? x / norm(x) : y / norm(y);
    seg.carrier = make_line(Point{0.0, 0.0}, u);
    const bool forward = dot(x, u) < dot(y, u);
    seg.ideal_x = forward ? -u : u;
    seg.ideal_y = forward ? u : -u;
    return seg;
  }

  // Long double: the carrier of a nearly collinear pair is huge and the
  // determinant below cancels.
  using LComplex = std::complex<long double>;
  const LComplex xc(x[0], x[1]);
  const LComplex yc(y[0], y[1]);
  const long double nx2 = std::norm(xc);
  const long double ny2 = std::norm(yc);
  const long double det = static_cast<long double>(x[0]) * y[1] - static_cast<long double>(x[1]) * y[0];
  const LComplex al = LComplex(0.0L, 1.0L) * (yc * (1.0L + nx2) - xc * (1.0L + ny2)) / (-2.0L * det);
  const long double rl = std::abs(xc - yc) * std::abs(xc * ny2 - yc) / (2.0L * std::sqrt(ny2) * std::abs(det));
  const Complex a(static_cast<double>(al.real()), static_cast<double>(al.imag()));
  const double r = static_cast<double>(rl);
  const Point center = Point::from_complex(a);
  seg.carrier = make_circle(center, r);

  const double theta = std::acos(1.0 / std::abs(a));
  const Complex dir = a / std::abs(a);
  const Point z1 = Point::from_complex(dir * std::polar(1.0, theta));
  const Point z2 = Point::from_complex(dir * std::polar(1.0, -theta));
  const bool z1_near_x = dist(z1, x) - dist(z1, y) < 0.0;
  seg.ideal_x = z1_near_x ? z1 : z2;
  seg.ideal_y = z1_near_x ? z2 : z1;
  return seg;
}

double rho_sup_absratio(const Point& x, const Point& y, std::size_t samples) {
  require_same_dim(x, y);
  require_in_ball(x);
  require_in_ball(y);
  if (x == y) return 0.0;
  if (x.dim() != 2) {
    const PlaneFrame frame = frame_through_origin(x, y);
    return rho_sup_absratio(frame.to_plane(x), frame.to_plane(y), samples);
  }
  const GeodesicSegment seg = geodesic_disk(x, y);
  const double exact = std::log(absolute_ratio(seg.ideal_x, x, y, seg.ideal_y));
  const double sampled = apollonian_distance(x, y, CircleBoundarySampler(samples));
  if (sampled > exact + 1e-12)
    throw std::logic_error("sampled absolute-ratio supremum exceeds the ideal-point value");
  return exact;
}

CircleOrLine bisector_disk(const Point& x, const Point& y) {
  require_same_dim(x, y);
  const double cx = require_in_ball(x);
  const double cy = require_in_ball(y);
  require_distinct(x, y);
  // |x|^2 - |y|^2 = (1 - |y|^2) - (1 - |x|^2)
  const double gap = norm2_difference(x, y);
  if (std::abs(gap) < 1e-12) return perpendicular_bisector(x, y);
  if (gap < 0.0) return bisector_disk(y, x);
  // w = (x - A^2 y) / (1 - A^2), r = A |x - y| / (1 - A^2), A^2 = cx / cy.
  const Point w = (x * cy - y * cx) / gap;
  return make_circle(w, std::sqrt(cx * cy) * dist(x, y) / gap);
}

Point midpoint_by_automorphism(const Point& x, const Point& y) {
  require_planar(x);
  require_same_dim(x, y);
  require_in_ball(x);
  require_in_ball(y);
  // Extended precision: near the boundary 1 - |z|^2 is small and the double
  // evaluation loses up to 3e-10 in rho.
  using LComplex = std::complex<long double>;
  const LComplex xc(x[0], x[1]);
  const LComplex yc(y[0], y[1]);
  const long double cx = one_minus_norm2(x);
  const long double cy = one_minus_norm2(y);
  const LComplex den = 1.0L - std::conj(xc) * yc;
  const LComplex w = (yc - xc) / den;
  // 1 - |w|^2 = (1 - |x|^2)(1 - |y|^2) / |1 - conj(x) y|^2
  const long double s = std::sqrt(cx * cy) / std::abs(den);
  const LComplex m = w / (1.0L + s);
  const LComplex z = (m + xc) / (1.0L + std::conj(xc) * m);
  return Point{static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

Point midpoint_by_circles(const Point& x, const Point& y) {
  require_planar(x);
  require_same_dim(x, y);
  require_in_ball(x);
  require_in_ball(y);
  require_distinct(x, y);
  if (collinear_with_origin(x, y)) fail(ErrorCode::DegenerateInput, "carrier is a diameter");
  if (std::abs(norm2_difference(x, y)) < 1e-12) fail(ErrorCode::DegenerateInput, "bisector is a line");

  const GeodesicSegment seg = geodesic_disk(x, y);
  const auto& carrier = std::get<Circle>(seg.carrier);
  const Circle bisector = std::get<Circle>(bisector_disk(x, y));
  const Point& a1 = carrier.center;
  const Point& a2 = bisector.center;
  const double r1 = dist(a1, x);
  const double r2 = bisector.radius;
  const double modulus = line_distance_to_origin(a1, a2) - r1 * r2 / std::hypot(r1, r2);

  const Complex c1 = a1.to_complex();
  const Complex c2 = a2.to_complex();
  const Point u = Point::from_complex(std::sqrt((c1 - c2) / (std::conj(c2) - std::conj(c1))) * modulus);
  // Of the two roots keep the one on the carrier.
  return distance_to(seg.carrier, u) <= distance_to(seg.carrier, -u) ? u : -u;
}

Point midpoint_disk(const Point& x, const Point& y) {
  require_planar(x);
  return midpoint_ball(x, y);
}

Point midpoint_ball(const Point& x, const Point& y) {
  require_same_dim(x, y);
  require_in_ball(x);
  require_in_ball(y);
  require_distinct(x, y);
  // Normalized sum of the hyperboloid images of x and y, mapped back to the ball:
  // z = 2(cy x + cx y) / ((1+|x|^2) cy + (1+|y|^2) cx + 2 sqrt(cx cy) A[x,y]).
  // Every term is positive; cx, cy and the sums are carried in long double.
  const long double cx = one_minus_norm2(x);
  const long double cy = one_minus_norm2(y);
  long double d2 = 0.0L;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const long double t = static_cast<long double>(x[i]) - y[i];
    d2 += t * t;
  }
  const long double den =
      (2.0L - cx) * cy + (2.0L - cy) * cx + 2.0L * std::sqrt(cx * cy) * std::sqrt(d2 + cx * cy);
  Point z(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    z[i] = static_cast<double>(2.0L * (cy * static_cast<long double>(x[i]) + cx * static_cast<long double>(y[i])) / den);
  return z;
}

BisectConstruction bisect_construction(const Point& x, const Point& y) {
  const GeodesicSegment seg = geodesic_disk(x, y);
  return BisectConstruction{bisector_disk(x, y), seg.carrier, midpoint_disk(x, y)};
}

Point midpoint_origin_special(const Point& x) {
  require_planar(x);
  const double c = require_in_ball(x);
  const double modulus = norm(x);
  if (modulus == 0.0) fail(ErrorCode::DegenerateInput, "midpoint of [0, 0]");
  // Segment from (0, -1) to (|x|, sqrt(1 - |x|^2)) crosses the real axis at t = 1 / (1 + sqrt(1 - |x|^2)).
  const double t = 1.0 / (1.0 + std::sqrt(c));
  return x * t;
}

namespace detail {

ExtendedChord extended_chord(const Point& x, const Point& y) {
  require_planar(x);
  require_same_dim(x, y);
  require_in_ball(x);
  require_in_ball(y);
  require_distinct(x, y);
  if (collinear_with_origin(x, y)) fail(ErrorCode::DegenerateInput, "0, x, y are collinear");
  using LComplex = std::complex<long double>;
  const LComplex xc(x[0], x[1]);
  const LComplex yc(y[0], y[1]);
  const long double nx2 = std::norm(xc);
  const long double ny2 = std::norm(yc);
  const long double det = static_cast<long double>(x[0]) * y[1] - static_cast<long double>(x[1]) * y[0];

  ExtendedChord c;
  c.center = LComplex(0.0L, 1.0L) * (yc * (1.0L + nx2) - xc * (1.0L + ny2)) / (-2.0L * det);
  c.radius = std::abs(xc - c.center);
  c.half_chord = std::abs(xc - yc) / 2.0L;
  // The center is m + t i(y - x) with t = (1 - x.y) / (-2 det), so |center - m| has a
  // product form; 1 - x.y = (c_x + c_y + |x-y|^2) / 2 has no cancellation.
  const long double one_minus_dot =
      (static_cast<long double>(one_minus_norm2(x)) + one_minus_norm2(y) + std::norm(xc - yc)) / 2.0L;
  c.apothem = one_minus_dot * c.half_chord / std::abs(det);
  const long double phi_x = std::arg(xc - c.center);
  const long double sweep = std::remainder(std::arg(yc - c.center) - phi_x, 2.0L * std::numbers::pi_v<long double>);
  c.sweep = sweep;
  c.apex = std::arg(-c.center);
  c.apex_angle = std::abs(sweep) / 2.0L;
  return c;
}

}  // namespace detail

ChordGeometry chord_geometry(const Point& x, const Point& y) {
  const detail::ExtendedChord c = detail::extended_chord(x, y);
  ChordGeometry g;
  g.carrier_center = Point{static_cast<double>(c.center.real()), static_cast<double>(c.center.imag())};
  g.carrier_radius = static_cast<double>(c.radius);
  g.half_chord = static_cast<double>(c.half_chord);
  g.apex_angle = static_cast<double>(c.apex_angle);
  auto on_carrier = [&](long double angle) {
    const std::complex<long double> z = c.center + std::polar(c.radius, angle);
    return Point{static_cast<double>(z.real()), static_cast<double>(z.imag())};
  };
  g.x_sym = on_carrier(c.apex - c.sweep / 2.0L);
  g.y_sym = on_carrier(c.apex + c.sweep / 2.0L);
  return g;
}

}  // namespace hypgeo
