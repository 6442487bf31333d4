#include "hypgeo/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hypgeo/disk_model.hpp"
#include "hypgeo/error.hpp"

namespace hypgeo {

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::SinhHalf: return "sinh-half";
    case BoundKind::TanhQuarter: return "tanh-quarter";
    case BoundKind::TanhHalf: return "tanh-half";
    case BoundKind::Cosh: return "cosh";
    case BoundKind::Rho: return "rho";
  }
  return "unknown";
}

double exact_functional(BoundKind kind, double rho) {
  switch (kind) {
    case BoundKind::SinhHalf: return std::sinh(rho / 2.0);
    case BoundKind::TanhQuarter: return std::tanh(rho / 4.0);
    case BoundKind::TanhHalf: return std::tanh(rho / 2.0);
    case BoundKind::Cosh: return std::cosh(rho);
    case BoundKind::Rho: return rho;
  }
  return rho;
}

const BoundEntry& BoundReport::at(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw std::out_of_range("no bound entry named " + std::string(name));
}

bool BoundReport::valid(double tol) const {
  return std::all_of(entries.begin(), entries.end(),
                     [tol](const BoundEntry& e) { return !e.applicable || e.slack >= -tol; });
}

double BoundReport::worst_slack() const {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& e : entries)
    if (e.applicable) worst = std::min(worst, e.slack);
  return worst;
}

namespace {

// All functionals of rho written through S = sinh(rho / 2), which both models
// give in closed form without cancellation.
double functional_from_sinh_half(BoundKind kind, double s) {
  switch (kind) {
    case BoundKind::SinhHalf: return s;
    case BoundKind::TanhQuarter: return s / (1.0 + std::sqrt(1.0 + s * s));
    case BoundKind::TanhHalf: return s / std::sqrt(1.0 + s * s);
    case BoundKind::Cosh: return 1.0 + 2.0 * s * s;
    case BoundKind::Rho: return 2.0 * std::asinh(s);
  }
  return s;
}

BoundEntry make_entry(std::string name, BoundKind kind, double value, double sinh_half) {
  BoundEntry e;
  e.name = std::move(name);
  e.kind = kind;
  e.bound_value = value;
  e.exact_value = functional_from_sinh_half(kind, sinh_half);
  e.slack = e.exact_value - value;
  return e;
}

BoundEntry inapplicable_entry(std::string name, BoundKind kind, double sinh_half, std::string reason) {
  BoundEntry e = make_entry(std::move(name), kind, functional_from_sinh_half(kind, sinh_half), sinh_half);
  e.applicable = false;
  e.reason = std::move(reason);
  return e;
}

double require_in_ball(const Point& x) {
  require_finite(x);
  const double c = one_minus_norm2(x);
  if (!(c > 0.0)) fail(ErrorCode::DomainError, "point is not inside the unit ball");
  return c;
}

double ball_sinh_half(const Point& x, const Point& y) {
  return dist(x, y) / std::sqrt(require_in_ball(x) * require_in_ball(y));
}

// Noncollinear pair reduced to the disk.
struct PlanarPair {
  Point x;
  Point y;
};

PlanarPair planar_noncollinear(const Point& x, const Point& y) {
  require_same_dim(x, y);
  require_in_ball(x);
  require_in_ball(y);
  if (dist(x, y) < kDistinctTol) fail(ErrorCode::DegenerateInput, "points coincide");
  if (collinear_with_origin(x, y)) fail(ErrorCode::DegenerateInput, "0, x, y are collinear");
  if (x.dim() == 2) return {x, y};
  const PlaneFrame frame = frame_through_origin(x, y);
  return {frame.to_plane(x), frame.to_plane(y)};
}

// sqrt(1+r^2) sqrt(r^2-d^2) - r^2, rationalized: (r^2 (1-d^2) - d^2) / (sqrt(1+r^2) sqrt(r^2-d^2) + r^2).
// sqrt(1+r^2) sqrt(r^2-d^2) - r^2 with r^2 - d^2 taken as the squared apothem,
// which is exact in form where r^2 - d^2 would cancel.
long double chord_denominator(const detail::ExtendedChord& c) {
  const long double d2 = c.half_chord * c.half_chord;
  const long double e2 = c.apothem * c.apothem;
  const long double r2 = e2 + d2;
  const long double root = std::sqrt(1.0L + r2) * c.apothem;
  return (e2 * (1.0L - d2) - d2 * d2) / (root + r2);
}

}  // namespace

ScalarBoundTriple scalar_sqrt_bounds(double r, double s) {
  if (!(r >= 0.0 && r < 1.0 && s >= 0.0 && s < 1.0)) fail(ErrorCode::DomainError, "r and s must lie in [0, 1)");
  ScalarBoundTriple t;
  t.r = r;
  t.s = s;
  t.lhs = std::sqrt((1.0 - r * r) * (1.0 - s * s));
  const double rs = r * s;
  t.rhs1 = 1.0 - rs - 0.5 * (r - s) * (r - s) / (1.0 - rs);
  t.rhs1_weak = 1.0 - ((r + s) / 2.0) * ((r + s) / 2.0);
  const double q = std::sqrt(1.0 + rs * rs);
  t.rhs2 = q - (r * r + s * s) / (2.0 * q);
  t.rhs3 = 1.0 + rs - 0.5 * (r + s) * (r + s) / (1.0 + rs);
  return t;
}

BoundReport ball_lower_bounds(const Point& x, const Point& y) {
  require_same_dim(x, y);
  const double cx = require_in_ball(x);
  const double cy = require_in_ball(y);
  const double d = dist(x, y);
  const double s = d / std::sqrt(cx * cy);
  const double nx = norm(x);
  const double ny = norm(y);
  const double p = nx * ny;
  const double gap = nx - ny;

  BoundReport rep;
  rep.x = x;
  rep.y = y;
  rep.rho = 2.0 * std::asinh(s);
  auto add = [&](const char* name, BoundKind kind, double value) { rep.entries.push_back(make_entry(name, kind, value, s)); };

  // 1 + (|x|^4 + |y|^4)/2 - |x|^2 - |y|^2 = (1-|x|^2)(1-|y|^2) + (|x|^2 - |y|^2)^2 / 2
  const double sq_gap = norm2_difference(x, y);
  add("b1", BoundKind::SinhHalf, d / std::sqrt(cx * cy + 0.5 * sq_gap * sq_gap));
  add("b2", BoundKind::TanhQuarter, d / (1.0 + p + std::sqrt(cx) * std::sqrt(cy)));
  add("b2'", BoundKind::TanhQuarter, d / 2.0);
  add("b3", BoundKind::TanhQuarter, d / (2.0 - (gap / 2.0) * (gap / 2.0)));
  add("b4", BoundKind::TanhQuarter, d / (2.0 - gap * gap / 2.0));
  add("b4'", BoundKind::TanhQuarter, d / (2.0 - 0.5 * gap * gap / (1.0 - p)));
  const double q = std::sqrt(1.0 + p * p);
  add("b5", BoundKind::TanhQuarter, d / (1.0 + p + q - (nx * nx + ny * ny) / (2.0 * q)));
  add("b6", BoundKind::TanhQuarter, d / (2.0 + 2.0 * p - 0.5 * (nx + ny) * (nx + ny) / (1.0 + p)));
  add("b7", BoundKind::TanhQuarter, d / std::sqrt(d * d + 4.0 * std::sqrt(cx) * std::sqrt(cy)));
  return rep;
}

double chord_bound(const Point& x, const Point& y) {
  const PlanarPair pp = planar_noncollinear(x, y);
  const detail::ExtendedChord c = detail::extended_chord(pp.x, pp.y);
  return static_cast<double>(2.0L * std::asinh(c.half_chord / chord_denominator(c)));
}

double chord_bound_angular(const Point& x, const Point& y) {
  const PlanarPair pp = planar_noncollinear(x, y);
  const detail::ExtendedChord c = detail::extended_chord(pp.x, pp.y);
  const long double r = c.radius;
  return static_cast<double>(4.0L * std::atanh((r + std::sqrt(1.0L + r * r)) * std::tan(c.apex_angle / 2.0L)));
}

double circumscribed_bound(const Point& x, const Point& y) {
  const PlanarPair pp = planar_noncollinear(x, y);
  const GeodesicSegment seg = geodesic_disk(pp.x, pp.y);
  const auto& carrier = std::get<Circle>(seg.carrier);
  const double d = dist(pp.x, pp.y);
  const CircleOrLine ball = orthogonal_circle_through(carrier.center, carrier.radius, pp.x, pp.y);
  // A Line here means the chord passes through the carrier center; the ball is then unbounded.
  if (!is_circle(ball)) fail(ErrorCode::NegativeDiscriminant, "circumscribed ball is a half-plane");
  const Point& w = std::get<Circle>(ball).center;
  const double k = 4.0 - 4.0 * norm2(w) + d * d;
  const double disc = k * k - 16.0 * d * d;
  if (!(disc >= 0.0) || !(k > 0.0)) fail(ErrorCode::NegativeDiscriminant, "circumscribed-ball bound has no real value");
  // (k - sqrt(k^2 - 16 d^2)) / (4 d) = 4 d / (k + sqrt(k^2 - 16 d^2))
  return 4.0 * d / (k + std::sqrt(disc));
}

double midpoint_bound(const Point& x, const Point& y) {
  require_same_dim(x, y);
  const Point z = midpoint_ball(x, y);
  const double d = dist(x, y);
  const double u = norm2(z);
  if (std::sqrt(u) < 1e-4) return d / 2.0;
  // (u - 1 + sqrt((1-u)^2 + u d^2)) / (d u) = d / (sqrt((1-u)^2 + u d^2) + 1 - u)
  const double c = 1.0 - u;
  return d / (std::sqrt(c * c + u * d * d) + c);
}

double midpoint_bound_closed_form(const Point& x, const Point& y) {
  const Point z = midpoint_ball(x, y);
  const double d = dist(x, y);
  const double u = norm2(z);
  return (u - 1.0 + std::sqrt(1.0 + u * u - u * (2.0 - d * d))) / (d * u);
}

double symmetric_chord_bound(const Point& x, const Point& y) {
  const PlanarPair pp = planar_noncollinear(x, y);
  const detail::ExtendedChord c = detail::extended_chord(pp.x, pp.y);
  return static_cast<double>(c.half_chord / std::sqrt(chord_denominator(c)));
}

BoundReport ball_bound_report(const Point& x, const Point& y) {
  BoundReport rep = ball_lower_bounds(x, y);
  const double s = ball_sinh_half(x, y);

  const bool coincide = dist(x, y) < kDistinctTol;
  rep.entries.push_back(make_entry("midpoint", BoundKind::TanhHalf, coincide ? 0.0 : midpoint_bound(x, y), s));
  if (coincide || collinear_with_origin(x, y)) {
    const std::string why = coincide ? "points coincide" : "0, x, y are collinear";
    rep.entries.push_back(inapplicable_entry("chord", BoundKind::Rho, s, why));
    rep.entries.push_back(inapplicable_entry("circumscribed", BoundKind::TanhQuarter, s, why));
    rep.entries.push_back(inapplicable_entry("symmetric-chord", BoundKind::SinhHalf, s, why));
    return rep;
  }
  rep.entries.push_back(make_entry("chord", BoundKind::Rho, chord_bound(x, y), s));
  try {
    rep.entries.push_back(make_entry("circumscribed", BoundKind::TanhQuarter, circumscribed_bound(x, y), s));
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::NegativeDiscriminant) throw;
    rep.entries.push_back(inapplicable_entry("circumscribed", BoundKind::TanhQuarter, s, e.what()));
  }
  rep.entries.push_back(make_entry("symmetric-chord", BoundKind::SinhHalf, symmetric_chord_bound(x, y), s));
  return rep;
}

BoundReport half_lower_bounds(const HalfSpacePoint& x, const HalfSpacePoint& y) {
  require_same_dim(x.point(), y.point());
  const double xn = x.height();
  const double yn = y.height();
  const double d = dist(x.point(), y.point());
  const double h = horizontal_distance(x, y);
  const double g = std::sqrt(xn * yn);
  const double s = d / (2.0 * g);
  const double sum = xn + yn;

  BoundReport rep;
  rep.x = x.point();
  rep.y = y.point();
  rep.rho = 2.0 * std::asinh(s);
  // cosh(rho) = 1 + |x-y|^2 / (2 x_n y_n) directly; at x_n = y_n this rounds
  // exactly like h1.
  const double cosh_rho = 1.0 + d * d / (2.0 * xn * yn);
  auto add = [&](const char* name, BoundKind kind, double value) {
    BoundEntry e = make_entry(name, kind, value, s);
    if (kind == BoundKind::Cosh) {
      e.exact_value = cosh_rho;
      e.slack = cosh_rho - value;
    }
    rep.entries.push_back(std::move(e));
  };

  add("h1", BoundKind::Cosh, 1.0 + d * d / (xn * xn + yn * yn));
  add("h2", BoundKind::Cosh, 1.0 + 2.0 * h * h / (sum * sum));
  // sqrt(1 - 4 x_n y_n / ((x_n+y_n)^2 + h^2)) = sqrt((x_n-y_n)^2 + h^2) / sqrt((x_n+y_n)^2 + h^2)
  const double outer = std::hypot(sum, h);
  // Same evaluation order for both, so h3 >= h3' holds exactly in floating point.
  const double lead = sum / (2.0 * g);
  add("h3", BoundKind::SinhHalf, lead * (std::hypot(xn - yn, h) / outer));
  add("h3'", BoundKind::SinhHalf, lead * (h / outer));
  rep.h2_beats_h1 = sum <= h;
  return rep;
}

RemarkOrdering remark_ordering(const Point& x, const Point& y) {
  const BoundReport rep = ball_lower_bounds(x, y);
  RemarkOrdering o;
  o.c2 = rep.at("b2").bound_value;
  o.c3 = rep.at("b3").bound_value;
  o.c5 = rep.at("b5").bound_value;
  o.c6 = rep.at("b6").bound_value;
  return o;
}

}  // namespace hypgeo
