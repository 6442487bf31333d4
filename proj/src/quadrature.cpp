#include "hypgeo/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "hypgeo/error.hpp"

namespace hypgeo {

double weight(WeightFunction w, const Point& z) {
  switch (w) {
    case WeightFunction::HalfSpace: {
      const double h = z[z.dim() - 1];
      if (!(h > 0.0)) fail(ErrorCode::DomainError, "path leaves the upper half-space");
      return 1.0 / h;
    }
    case WeightFunction::Ball: {
      const double c = one_minus_norm2(z);
      if (!(c > 0.0)) fail(ErrorCode::DomainError, "path leaves the unit ball");
      return 2.0 / c;
    }
  }
  return 0.0;
}

Point path_start(const PathPiece& piece) {
  if (const auto* s = std::get_if<SegmentPath>(&piece)) return s->from;
  const auto& arc = std::get<ArcPath>(piece);
  return arc.center + Point{std::cos(arc.start_angle), std::sin(arc.start_angle)} * arc.radius;
}

Point path_end(const PathPiece& piece) {
  if (const auto* s = std::get_if<SegmentPath>(&piece)) return s->to;
  const auto& arc = std::get<ArcPath>(piece);
  return arc.center + Point{std::cos(arc.end_angle), std::sin(arc.end_angle)} * arc.radius;
}

PathPiece geodesic_path(const GeodesicSegment& seg) {
  if (const auto* circ = std::get_if<Circle>(&seg.carrier)) {
    const Point vx = seg.x - circ->center;
    const Point vy = seg.y - circ->center;
    const double ax = std::atan2(vx[1], vx[0]);
    const double sweep = std::remainder(std::atan2(vy[1], vy[0]) - ax, 2.0 * std::numbers::pi);
    return ArcPath{circ->center, circ->radius, ax, ax + sweep};
  }
  return SegmentPath{seg.x, seg.y};
}

namespace {

// Positions and weights are evaluated in long double: near the boundary
// 1 - |z|^2 is a small difference of order-one terms.
struct Parametrized {
  const PathPiece* piece;
  WeightFunction w;

  long double weight_at(double t) const {
    const std::size_t n = path_start(*piece).dim();
    std::vector<long double> z(n);
    if (const auto* s = std::get_if<SegmentPath>(piece)) {
      for (std::size_t i = 0; i < n; ++i)
        z[i] = s->from[i] + (static_cast<long double>(s->to[i]) - s->from[i]) * t;
    } else {
      const auto& arc = std::get<ArcPath>(*piece);
      const long double phi = arc.start_angle + t * (static_cast<long double>(arc.end_angle) - arc.start_angle);
      z[0] = arc.center[0] + arc.radius * std::cos(phi);
      z[1] = arc.center[1] + arc.radius * std::sin(phi);
    }
    if (w == WeightFunction::HalfSpace) {
      if (!(z[n - 1] > 0.0L)) fail(ErrorCode::DomainError, "path leaves the upper half-space");
      return 1.0L / z[n - 1];
    }
    long double c = 1.0L;
    for (long double v : z) c -= v * v;
    if (!(c > 0.0L)) fail(ErrorCode::DomainError, "path leaves the unit ball");
    return 2.0L / c;
  }
  double speed() const {
    if (const auto* s = std::get_if<SegmentPath>(piece)) return dist(s->from, s->to);
    const auto& arc = std::get<ArcPath>(*piece);
    return arc.radius * std::abs(arc.end_angle - arc.start_angle);
  }
};

struct Pending {
  double a, b;
  double fa, fm, fb;
  double whole;
  double tol;
  int depth;
};

double simpson(double a, double b, double fa, double fm, double fb) { return (b - a) / 6.0 * (fa + 4.0 * fm + fb); }

double integrate_piece(const PathPiece& piece, WeightFunction w, double tol, std::size_t& intervals) {
  const Parametrized path{&piece, w};
  const double speed = path.speed();
  if (speed == 0.0) return 0.0;
  auto f = [&](double t) { return static_cast<double>(path.weight_at(t) * speed); };

  constexpr int kInitial = 16;
  constexpr int kMaxDepth = 60;
  std::vector<Pending> stack;
  for (int k = kInitial - 1; k >= 0; --k) {
    const double a = static_cast<double>(k) / kInitial;
    const double b = static_cast<double>(k + 1) / kInitial;
    const double fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
    stack.push_back({a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol / kInitial, 0});
  }

  double total = 0.0;
  while (!stack.empty()) {
    const Pending p = stack.back();
    stack.pop_back();
    const double m = 0.5 * (p.a + p.b);
    const double flm = f(0.5 * (p.a + m));
    const double frm = f(0.5 * (m + p.b));
    const double left = simpson(p.a, m, p.fa, flm, p.fm);
    const double right = simpson(m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    if (std::abs(delta) <= 15.0 * p.tol) {
      total += left + right + delta / 15.0;
      if (++intervals > kMaxQuadratureIntervals)
        fail(ErrorCode::NoConvergence, "adaptive quadrature exceeded its subinterval budget");
      continue;
    }
    if (p.depth >= kMaxDepth) fail(ErrorCode::NoConvergence, "adaptive quadrature reached its depth limit");
    stack.push_back({m, p.b, p.fm, frm, p.fb, right, 0.5 * p.tol, p.depth + 1});
    stack.push_back({p.a, m, p.fa, flm, p.fm, left, 0.5 * p.tol, p.depth + 1});
  }
  return total;
}

}  // namespace

double path_length_quadrature(std::span<const PathPiece> path, WeightFunction w, double tol) {
  if (!(tol > 0.0)) fail(ErrorCode::DomainError, "quadrature tolerance must be positive");
  if (path.empty()) return 0.0;
  const double piece_tol = tol / static_cast<double>(path.size());
  std::size_t intervals = 0;
  double total = 0.0;
  for (const PathPiece& piece : path) total += integrate_piece(piece, w, piece_tol, intervals);
  return total;
}

double path_length_quadrature(const PathPiece& piece, WeightFunction w, double tol) {
  return path_length_quadrature(std::span<const PathPiece>(&piece, 1), w, tol);
}

}  // namespace hypgeo
