#include "hypgeo/geom_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "hypgeo/error.hpp"

namespace hypgeo {

Circle make_circle(Point center, double radius) {
  require_finite(center);
  if (!(radius > 0.0) || !std::isfinite(radius))
    fail(ErrorCode::DegenerateInput, "circle radius must be positive and finite");
  return Circle{std::move(center), radius};
}

Line make_line(Point point, const Point& direction) {
  require_finite(point);
  require_finite(direction);
  require_same_dim(point, direction);
  const double len = norm(direction);
  if (!(len > 0.0)) fail(ErrorCode::DegenerateInput, "line direction is zero");
  return Line{std::move(point), direction / len};
}

CircleOrLine perpendicular_bisector(const Point& a, const Point& b) {
  require_same_dim(a, b);
  const Point mid = (a + b) * 0.5;
  const Point ab = b - a;
  const double len = norm(ab);
  if (len < kDistinctTol) fail(ErrorCode::DegenerateInput, "bisector of coincident points");
  if (a.dim() == 2) return make_line(mid, Point{-ab[1], ab[0]});
  return Hyperplane{mid, ab / len};
}

bool is_circle(const CircleOrLine& c) { return std::holds_alternative<Circle>(c); }
bool is_line(const CircleOrLine& c) { return std::holds_alternative<Line>(c); }

namespace {

double distance_to_line(const Line& l, const Point& p) {
  const Point v = p - l.point;
  const double t = dot(v, l.direction);
  return norm(v - l.direction * t);
}

}  // namespace

double distance_to(const CircleOrLine& c, const Point& p) {
  return std::visit(
      [&](const auto& obj) -> double {
        using T = std::decay_t<decltype(obj)>;
        if constexpr (std::is_same_v<T, Circle>) {
          return std::abs(dist(p, obj.center) - obj.radius);
        } else if constexpr (std::is_same_v<T, Line>) {
          return distance_to_line(obj, p);
        } else {
          return std::abs(dot(p - obj.point, obj.normal));
        }
      },
      c);
}

Point point_on(const CircleOrLine& c, double t) {
  if (const auto* circ = std::get_if<Circle>(&c)) {
    if (circ->center.dim() != 2) fail(ErrorCode::DimensionMismatch, "point_on needs a planar circle");
    return circ->center + Point{std::cos(t), std::sin(t)} * circ->radius;
  }
  if (const auto* line = std::get_if<Line>(&c)) return line->point + line->direction * t;
  fail(ErrorCode::DimensionMismatch, "point_on is undefined for hyperplanes");
}

double orthogonality_cosine(const CircleOrLine& a, const CircleOrLine& b) {
  const auto* ca = std::get_if<Circle>(&a);
  const auto* cb = std::get_if<Circle>(&b);
  const auto* la = std::get_if<Line>(&a);
  const auto* lb = std::get_if<Line>(&b);
  if (ca && cb) {
    return (dist2(ca->center, cb->center) - ca->radius * ca->radius - cb->radius * cb->radius) /
           (2.0 * ca->radius * cb->radius);
  }
  if (ca && lb) return distance_to_line(*lb, ca->center) / ca->radius;
  if (la && cb) return distance_to_line(*la, cb->center) / cb->radius;
  if (la && lb) return std::abs(dot(la->direction, lb->direction));
  fail(ErrorCode::DimensionMismatch, "orthogonality of hyperplanes is not planar");
}

namespace {

// Parameters of `c` whose points fall in the disk of radius `window` about 0.
std::vector<Point> window_samples(const CircleOrLine& c, double window, int count) {
  std::vector<Point> out;
  if (const auto* circ = std::get_if<Circle>(&c)) {
    const double cn = norm(circ->center);
    double mid = 0.0;
    double half = std::numbers::pi;
    if (cn + circ->radius > window && cn > 0.0) {
      mid = std::atan2(-circ->center[1], -circ->center[0]);
      const double cosw = (cn * cn + circ->radius * circ->radius - window * window) / (2.0 * cn * circ->radius);
      if (cosw >= 1.0) return out;
      half = std::acos(std::max(-1.0, cosw));
    }
    for (int k = 0; k < count; ++k) {
      const double t = mid - half + 2.0 * half * (k + 0.5) / count;
      out.push_back(point_on(c, t));
    }
  } else if (const auto* line = std::get_if<Line>(&c)) {
    const double t0 = -dot(line->point, line->direction);
    for (int k = 0; k < count; ++k) out.push_back(point_on(c, t0 - window + 2.0 * window * (k + 0.5) / count));
  }
  return out;
}

}  // namespace

bool same_point_set(const CircleOrLine& a, const CircleOrLine& b, double tol) {
  const auto* ha = std::get_if<Hyperplane>(&a);
  const auto* hb = std::get_if<Hyperplane>(&b);
  if (ha || hb) {
    if (!ha || !hb) return false;
    return std::abs(std::abs(dot(ha->normal, hb->normal)) - 1.0) <= tol &&
           std::abs(dot(hb->point - ha->point, ha->normal)) <= tol;
  }
  const auto* ca = std::get_if<Circle>(&a);
  if (ca && ca->center.dim() != 2) {
    const auto* cb = std::get_if<Circle>(&b);
    return cb && dist(ca->center, cb->center) <= tol && std::abs(ca->radius - cb->radius) <= tol;
  }
  constexpr double kWindow = 2.0;
  for (const Point& p : window_samples(a, kWindow, 64))
    if (distance_to(b, p) > tol) return false;
  for (const Point& p : window_samples(b, kWindow, 64))
    if (distance_to(a, p) > tol) return false;
  return true;
}

Complex cross_ratio(Complex a, Complex b, Complex c, Complex d) {
  const std::array<Complex, 4> pts{a, b, c, d};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (std::abs(pts[i] - pts[j]) < kDistinctTol) fail(ErrorCode::DegenerateInput, "cross ratio of coincident points");
  return (a - c) * (b - d) / ((a - b) * (c - d));
}

double absolute_ratio(const Point& a, const Point& b, const Point& c, const Point& d) {
  const std::array<const Point*, 4> pts{&a, &b, &c, &d};
  int infinite = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    require_same_dim(*pts[i], a);
    if (pts[i]->is_infinity()) {
      ++infinite;
      continue;
    }
    require_finite(*pts[i]);
  }
  if (infinite > 1) fail(ErrorCode::DegenerateInput, "absolute ratio with two points at infinity");

  // A factor containing the point at infinity is dropped; it cancels against
  // the other factor that contains it.
  auto factor = [](const Point& p, const Point& q) -> std::optional<double> {
    if (p.is_infinity() || q.is_infinity()) return std::nullopt;
    const double v = dist(p, q);
    if (v < kDistinctTol) fail(ErrorCode::DegenerateInput, "absolute ratio of coincident points");
    return v;
  };
  // The remaining two pairs (a,d) and (b,c) must also be distinct.
  factor(a, d);
  factor(b, c);
  double ratio = 1.0;
  if (auto f = factor(a, c)) ratio *= *f;
  if (auto f = factor(b, d)) ratio *= *f;
  if (auto f = factor(a, b)) ratio /= *f;
  if (auto f = factor(c, d)) ratio /= *f;
  return ratio;
}

Point unit_sphere_inversion(const Point& x) {
  require_finite(x);
  const double n2 = norm2(x);
  if (n2 == 0.0) fail(ErrorCode::DegenerateInput, "inversion of the origin");
  return x / n2;
}

double line_distance_to_origin(const Point& a, const Point& b) {
  require_finite(a);
  require_finite(b);
  require_same_dim(a, b);
  const double ab = dist(a, b);
  if (ab < kDistinctTol) fail(ErrorCode::DegenerateInput, "line through coincident points");
  // Equals sqrt((|a-b|^2 - (|a|-|b|)^2)((|a|+|b|)^2 - |a-b|^2)) / (2|a-b|), but the
  // product form cancels to sqrt(eps) for lines through 0; project instead.
  const Point& p = norm2(a) <= norm2(b) ? a : b;
  const Point u = (b - a) / ab;
  return norm(p - u * dot(p, u));
}

CircleOrLine orthogonal_circle_through(const Point& x, double r, const Point& y, const Point& z) {
  require_finite(x);
  require_finite(y);
  require_finite(z);
  require_same_dim(x, y);
  require_same_dim(x, z);
  if (!(r > 0.0)) fail(ErrorCode::DomainError, "sphere radius must be positive");
  const double tol = 1e-8 * std::max(1.0, r);
  if (std::abs(dist(x, y) - r) > tol || std::abs(dist(x, z) - r) > tol)
    fail(ErrorCode::DomainError, "points are not on the sphere");
  if (dist(y, z) < kDistinctTol) fail(ErrorCode::DegenerateInput, "coincident points on the sphere");

  const Point s = (y + z) * 0.5;
  const Point sx = s - x;
  const double sx2 = norm2(sx);
  if (std::sqrt(sx2) < 1e-12) return make_line(y, z - y);
  const Point w = x + sx * (dist2(y, x) / sx2);
  return make_circle(w, dist(y, w));
}

MobiusMap2 make_mobius(Complex a, Complex b, Complex c, Complex d, bool reverses_orientation) {
  if (std::abs(a * d - b * c) <= kDistinctTol) fail(ErrorCode::DegenerateInput, "singular Moebius map");
  return MobiusMap2{a, b, c, d, reverses_orientation};
}

MobiusMap2 identity_map() { return MobiusMap2{}; }

MobiusMap2 disk_automorphism(Complex z0, double theta) {
  if (!(std::abs(z0) < 1.0)) fail(ErrorCode::DomainError, "automorphism base point must lie in the unit disk");
  const Complex rot = std::polar(1.0, theta);
  return make_mobius(rot, -rot * z0, -std::conj(z0), 1.0);
}

MobiusMap2 cayley_disk_to_half() {
  const Complex i{0.0, 1.0};
  return make_mobius(i, i, -1.0, 1.0);
}

MobiusMap2 compose(const MobiusMap2& t2, const MobiusMap2& t1) {
  // t2(t1(z)) = M2 * conj?(M1) applied to conj?(conj?(z)).
  Complex a1 = t1.a, b1 = t1.b, c1 = t1.c, d1 = t1.d;
  if (t2.reverses_orientation) {
    a1 = std::conj(a1);
    b1 = std::conj(b1);
    c1 = std::conj(c1);
    d1 = std::conj(d1);
  }
  return MobiusMap2{t2.a * a1 + t2.b * c1, t2.a * b1 + t2.b * d1, t2.c * a1 + t2.d * c1, t2.c * b1 + t2.d * d1,
                    t1.reverses_orientation != t2.reverses_orientation};
}

MobiusMap2 inverse(const MobiusMap2& t) {
  MobiusMap2 inv{t.d, -t.b, -t.c, t.a, t.reverses_orientation};
  if (t.reverses_orientation) {
    inv.a = std::conj(inv.a);
    inv.b = std::conj(inv.b);
    inv.c = std::conj(inv.c);
    inv.d = std::conj(inv.d);
  }
  return inv;
}

Complex mobius_apply(const MobiusMap2& t, Complex z) {
  const Complex w = t.reverses_orientation ? std::conj(z) : z;
  const Complex den = t.c * w + t.d;
  if (std::abs(den) < kDistinctTol) fail(ErrorCode::PoleAtInput, "Moebius map evaluated at its pole");
  return (t.a * w + t.b) / den;
}

Point mobius_apply(const MobiusMap2& t, const Point& z) {
  if (z.dim() != 2) fail(ErrorCode::DimensionMismatch, "planar Moebius map needs a planar point");
  if (z.is_infinity()) {
    if (std::abs(t.c) < kDistinctTol) return Point::infinity(2);
    return Point::from_complex(t.a / t.c);
  }
  // Long double keeps images near the boundary correctly rounded.
  using LComplex = std::complex<long double>;
  const LComplex zl(z[0], t.reverses_orientation ? -z[1] : z[1]);
  const LComplex den = LComplex(t.c) * zl + LComplex(t.d);
  if (std::abs(den) < kDistinctTol) return Point::infinity(2);
  const LComplex w = (LComplex(t.a) * zl + LComplex(t.b)) / den;
  return Point{static_cast<double>(w.real()), static_cast<double>(w.imag())};
}

Point PlaneFrame::to_plane(const Point& p) const {
  const Point v = p - origin;
  return Point{dot(v, e1), dot(v, e2)};
}

Point PlaneFrame::from_plane(const Point& q) const { return origin + e1 * q[0] + e2 * q[1]; }

namespace {

// Unit vector orthogonal to the unit vector u.
Point any_orthogonal(const Point& u) {
  Point best;
  double best_norm = -1.0;
  for (std::size_t axis = 0; axis < u.dim(); ++axis) {
    const Point e = basis_vector(u.dim(), axis);
    const Point r = e - u * dot(e, u);
    const double n = norm(r);
    if (n > best_norm) {
      best_norm = n;
      best = r / n;
    }
  }
  return best;
}

}  // namespace

PlaneFrame frame_through_origin(const Point& x, const Point& y) {
  require_finite(x);
  require_finite(y);
  require_same_dim(x, y);
  const std::size_t n = x.dim();
  Point e1;
  if (norm(x) > 0.0) {
    e1 = x / norm(x);
  } else if (norm(y) > 0.0) {
    e1 = y / norm(y);
  } else {
    e1 = basis_vector(n, 0);
  }
  Point r = y - e1 * dot(y, e1);
  const double rn = norm(r);
  Point e2 = rn > 1e-300 && rn > 1e-15 * norm(y) ? r / rn : any_orthogonal(e1);
  return PlaneFrame{Point(n), std::move(e1), std::move(e2)};
}

PlaneFrame vertical_frame(const Point& x, const Point& y) {
  require_finite(x);
  require_finite(y);
  require_same_dim(x, y);
  const std::size_t n = x.dim();
  Point xh = x;
  xh[n - 1] = 0.0;
  Point yh = y;
  yh[n - 1] = 0.0;
  const Point h = yh - xh;
  const double hn = norm(h);
  Point e1 = hn > 0.0 ? h / hn : basis_vector(n, 0);
  return PlaneFrame{std::move(xh), std::move(e1), basis_vector(n, n - 1)};
}

}  // namespace hypgeo
