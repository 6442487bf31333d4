#include "hypgeo/apollonian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypgeo/error.hpp"

namespace hypgeo {

namespace {

constexpr double kPi = std::numbers::pi;

void require_base_points(const Point& x, const Point& y) {
  require_finite(x);
  require_finite(y);
  require_same_dim(x, y);
  if (dist(x, y) < kDistinctTol) fail(ErrorCode::DegenerateInput, "Apollonian base points coincide");
}

// Keep whichever of the grid sample and its refinement scores higher.
Point better_of(const Point& grid, const Point& refined, const BoundarySampler::Objective& objective) {
  return objective(refined) > objective(grid) ? refined : grid;
}

}  // namespace

bool ApollonianBall::contains(const Point& z) const { return dist(base_x, z) < ratio * dist(base_y, z); }

ApollonianBall make_apollonian_ball(Point x, Point y, double c) {
  require_base_points(x, y);
  if (!(c > 0.0) || !std::isfinite(c)) fail(ErrorCode::DomainError, "Apollonian ratio must be positive");
  return ApollonianBall{std::move(x), std::move(y), c};
}

CircleOrLine apollonian_boundary(const Point& x, const Point& y, double c) {
  require_base_points(x, y);
  if (!(c > 0.0) || !std::isfinite(c)) fail(ErrorCode::DomainError, "Apollonian ratio must be positive");
  if (c == 1.0) return perpendicular_bisector(x, y);
  if (c > 1.0) return apollonian_boundary(y, x, 1.0 / c);
  const double c2 = c * c;
  return make_circle((x - y * c2) / (1.0 - c2), c * dist(x, y) / (1.0 - c2));
}

CircleOrLine apollonian_boundary(const ApollonianBall& ball) {
  return apollonian_boundary(ball.base_x, ball.base_y, ball.ratio);
}

double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, int iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int k = 0; k < iterations && b - a > 0.0; ++k) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? c : d;
}

// --- circle -----------------------------------------------------------------

namespace {

// Rounded boundary points may land strictly inside the sphere, where the
// ratios exceed their boundary supremum by up to ulp / dist(x, boundary).
// Pushing samples onto or just outside the sphere keeps sampled suprema
// lower estimates: outside the ball neither ratio exceeds its supremum.
Point not_inside(Point p, const Point& center, double radius) {
  const long double r2 = static_cast<long double>(radius) * radius;
  for (int k = 0; k < 8; ++k) {
    long double d2 = 0.0L;
    for (std::size_t i = 0; i < p.dim(); ++i) {
      const long double t = static_cast<long double>(p[i]) - center[i];
      d2 += t * t;
    }
    if (d2 >= r2) break;
    for (std::size_t i = 0; i < p.dim(); ++i) {
      const double away = p[i] - center[i];
      if (away != 0.0) p[i] = std::nextafter(p[i], away > 0.0 ? HUGE_VAL : -HUGE_VAL);
    }
  }
  return p;
}

}  // namespace

CircleBoundarySampler::CircleBoundarySampler(Point center, double radius, std::size_t count)
    : center_(std::move(center)), radius_(radius), count_(count) {
  if (center_.dim() != 2) fail(ErrorCode::DimensionMismatch, "circle sampler is planar");
}

CircleBoundarySampler::CircleBoundarySampler(std::size_t count) : CircleBoundarySampler(Point{0.0, 0.0}, 1.0, count) {}

Point CircleBoundarySampler::at(double angle) const {
  return not_inside(center_ + Point{std::cos(angle), std::sin(angle)} * radius_, center_, radius_);
}

Point CircleBoundarySampler::sample(std::size_t i) const { return at(2.0 * kPi * static_cast<double>(i) / count_); }

Point CircleBoundarySampler::refine(std::size_t i, const Objective& objective) const {
  const double step = 2.0 * kPi / count_;
  const double angle = step * static_cast<double>(i);
  const double best = golden_section_maximize([&](double t) { return objective(at(t)); }, angle - step, angle + step);
  return better_of(sample(i), at(best), objective);
}

// --- sphere -----------------------------------------------------------------

SphereBoundarySampler::SphereBoundarySampler(std::size_t count) : count_(count) {}

namespace {

Point spherical(double polar, double azimuth) {
  const double s = std::sin(polar);
  return not_inside(Point{s * std::cos(azimuth), s * std::sin(azimuth), std::cos(polar)}, Point(3), 1.0);
}

}  // namespace

Point SphereBoundarySampler::sample(std::size_t i) const {
  const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count_);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = golden_angle * static_cast<double>(i);
  return not_inside(Point{r * std::cos(phi), r * std::sin(phi), z}, Point(3), 1.0);
}

Point SphereBoundarySampler::refine(std::size_t i, const Objective& objective) const {
  const Point p = sample(i);
  double polar = std::acos(std::clamp(p[2], -1.0, 1.0));
  double azimuth = std::atan2(p[1], p[0]);
  const double step = 2.0 * std::sqrt(4.0 * kPi / static_cast<double>(count_));
  for (int pass = 0; pass < 3; ++pass) {
    azimuth = golden_section_maximize([&](double t) { return objective(spherical(polar, t)); }, azimuth - step,
                                      azimuth + step);
    polar = golden_section_maximize([&](double t) { return objective(spherical(t, azimuth)); },
                                    std::max(0.0, polar - step), std::min(kPi, polar + step));
  }
  return better_of(p, spherical(polar, azimuth), objective);
}

// --- real line ----------------------------------------------------------------

namespace {

constexpr double kHalfPiInside = kPi / 2.0 - 1e-12;

double tangent_grid(std::size_t k, std::size_t count) {
  return -kPi / 2.0 + kPi * static_cast<double>(k) / static_cast<double>(count);
}

}  // namespace

RealLineBoundarySampler::RealLineBoundarySampler(std::size_t count) : count_(count) {}

Point RealLineBoundarySampler::sample(std::size_t i) const {
  if (i + 1 == count_) return Point::infinity(2);
  return Point{std::tan(tangent_grid(i + 1, count_)), 0.0};
}

Point RealLineBoundarySampler::refine(std::size_t i, const Objective& objective) const {
  if (i + 1 == count_) return Point::infinity(2);
  const double step = kPi / static_cast<double>(count_);
  const double phi = tangent_grid(i + 1, count_);
  const double best = golden_section_maximize([&](double t) { return objective(Point{std::tan(t), 0.0}); },
                                              std::max(-kHalfPiInside, phi - step), std::min(kHalfPiInside, phi + step));
  return better_of(sample(i), Point{std::tan(best), 0.0}, objective);
}

// --- plane --------------------------------------------------------------------

PlaneBoundarySampler::PlaneBoundarySampler(std::size_t per_axis) : per_axis_(per_axis) {}

Point PlaneBoundarySampler::sample(std::size_t i) const {
  const std::size_t m = per_axis_ - 1;
  if (i == m * m) return Point::infinity(3);
  return Point{std::tan(tangent_grid(i / m + 1, per_axis_)), std::tan(tangent_grid(i % m + 1, per_axis_)), 0.0};
}

Point PlaneBoundarySampler::refine(std::size_t i, const Objective& objective) const {
  const std::size_t m = per_axis_ - 1;
  if (i == m * m) return Point::infinity(3);
  const double step = kPi / static_cast<double>(per_axis_);
  double u = tangent_grid(i / m + 1, per_axis_);
  double v = tangent_grid(i % m + 1, per_axis_);
  auto at = [](double s, double t) { return Point{std::tan(s), std::tan(t), 0.0}; };
  for (int pass = 0; pass < 3; ++pass) {
    u = golden_section_maximize([&](double s) { return objective(at(s, v)); }, std::max(-kHalfPiInside, u - step),
                                std::min(kHalfPiInside, u + step));
    v = golden_section_maximize([&](double t) { return objective(at(u, t)); }, std::max(-kHalfPiInside, v - step),
                                std::min(kHalfPiInside, v + step));
  }
  return better_of(sample(i), at(u, v), objective);
}

// --- parameters ---------------------------------------------------------------

double ApollonianParameters::distance() const { return std::log(X * Y); }

namespace {

struct Argmax {
  std::size_t index = 0;
  double value = -1.0;
};

Argmax scan(const BoundarySampler& boundary, const BoundarySampler::Objective& objective) {
  Argmax best;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    const double v = objective(boundary.sample(i));
    if (v > best.value) best = {i, v};
  }
  return best;
}

}  // namespace

ApollonianParameters apollonian_parameters(const Point& x, const Point& y, const BoundarySampler& boundary,
                                           bool refine) {
  require_base_points(x, y);
  if (boundary.dim() != x.dim()) fail(ErrorCode::DimensionMismatch, "boundary sampler dimension differs");
  if (boundary.size() < 2) fail(ErrorCode::EmptyBoundary, "boundary sampler yields fewer than two points");

  // Both ratios tend to 1 at infinity.
  const BoundarySampler::Objective ratio_x = [&](const Point& a) {
    return a.is_infinity() ? 1.0 : dist(a, y) / dist(a, x);
  };
  const BoundarySampler::Objective ratio_y = [&](const Point& d) {
    return d.is_infinity() ? 1.0 : dist(x, d) / dist(y, d);
  };

  const Argmax ax = scan(boundary, ratio_x);
  const Argmax ay = scan(boundary, ratio_y);
  ApollonianParameters out;
  out.witness_a = refine ? boundary.refine(ax.index, ratio_x) : boundary.sample(ax.index);
  out.witness_d = refine ? boundary.refine(ay.index, ratio_y) : boundary.sample(ay.index);
  out.X = ratio_x(out.witness_a);
  out.Y = ratio_y(out.witness_d);
  return out;
}

double apollonian_distance(const Point& x, const Point& y, const BoundarySampler& boundary, bool refine) {
  require_finite(x);
  require_finite(y);
  require_same_dim(x, y);
  if (x == y) return 0.0;
  return apollonian_parameters(x, y, boundary, refine).distance();
}

}  // namespace hypgeo
