#include "hypgeo/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "hypgeo/apollonian.hpp"
#include "hypgeo/bounds.hpp"
#include "hypgeo/disk_model.hpp"
#include "hypgeo/error.hpp"
#include "hypgeo/halfplane_model.hpp"
#include "hypgeo/quadrature.hpp"
#include "hypgeo/random.hpp"

namespace hypgeo {

void MetricStats::add(double value, std::size_t index) {
  if (std::isnan(value)) return;
  if (count == 0 || value > max || (value == max && index < argmax)) {
    max = value;
    argmax = index;
  }
  if (count == 0 || value < min || (value == min && index < argmin)) {
    min = value;
    argmin = index;
  }
  ++count;
  if (value > 0.0) ++positive;
}

void MetricStats::merge(const MetricStats& other) {
  if (other.count == 0) return;
  if (count == 0) {
    *this = other;
    return;
  }
  if (other.max > max || (other.max == max && other.argmax < argmax)) {
    max = other.max;
    argmax = other.argmax;
  }
  if (other.min < min || (other.min == min && other.argmin < argmin)) {
    min = other.min;
    argmin = other.argmin;
  }
  count += other.count;
  positive += other.positive;
}

std::vector<MetricStats> sweep(std::size_t n, std::size_t metrics, const SweepKernel& f, Execution exec) {
  std::vector<MetricStats> total(metrics);
  if (exec == Execution::Serial) {
    std::vector<double> out(metrics);
    for (std::size_t i = 0; i < n; ++i) {
      f(i, out);
      for (std::size_t k = 0; k < metrics; ++k) total[k].add(out[k], i);
    }
    return total;
  }

  const auto count = static_cast<std::ptrdiff_t>(n);
  bool failed = false;
  std::exception_ptr error;
#pragma omp parallel
  {
    std::vector<MetricStats> local(metrics);
    std::vector<double> out(metrics);
#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        f(static_cast<std::size_t>(i), out);
        for (std::size_t k = 0; k < metrics; ++k) local[k].add(out[k], static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(hypgeo_sweep_error)
        if (!failed) {
          failed = true;
          error = std::current_exception();
        }
      }
    }
#pragma omp critical(hypgeo_sweep_merge)
    for (std::size_t k = 0; k < metrics; ++k) total[k].merge(local[k]);
  }
  if (error) std::rethrow_exception(error);
  return total;
}

bool Check::passed() const {
  if (!asserted) return true;
  if (stats.count == 0) return false;
  return stats.min >= lower && stats.max <= upper;
}

bool CriterionResult::passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t pairs(const VerifyOptions& o, std::size_t default_count) {
  return o.samples == 0 ? default_count : o.samples;
}

// Oracle sweeps cost a quadrature or 10^4 boundary samples per pair, so an
// override can lower their count but not raise it.
std::size_t oracle_pairs(const VerifyOptions& o, std::size_t default_count) {
  return o.samples == 0 ? default_count : std::min(o.samples, default_count);
}

// Independent streams per sweep: the salt separates sweeps sharing one seed.
SplitMix64 draw(const VerifyOptions& o, std::uint64_t salt, std::size_t i) {
  return stream(o.seed * 0x100000001b3ULL + salt, i);
}

// Asserted sweeps draw uniform points of the disk; the stress variant draws
// half of its points within 1e-1 .. 1e-6 of the boundary and is reported only.
Point ball_draw(SplitMix64& rng, bool stress) { return stress ? random_ball_point(rng, 2) : random_in_ball(rng, 2); }

Check upper_check(std::string label, MetricStats s, double upper) {
  Check c;
  c.label = std::move(label);
  c.stats = s;
  c.upper = upper;
  return c;
}

Check lower_check(std::string label, MetricStats s, double lower) {
  Check c;
  c.label = std::move(label);
  c.stats = s;
  c.lower = lower;
  return c;
}

Check single_value(std::string label, double value, double lower, double upper, bool asserted = true) {
  Check c;
  c.label = std::move(label);
  c.stats.add(value, 0);
  c.lower = lower;
  c.upper = upper;
  c.asserted = asserted;
  return c;
}

Check report_only(std::string label, MetricStats s) {
  Check c;
  c.label = std::move(label);
  c.stats = s;
  c.asserted = false;
  return c;
}

// ---------------------------------------------------------------------------

CriterionResult golden(const VerifyOptions&) {
  CriterionResult r{1, "Golden distances", {}, {}};
  const Point o{0.0, 0.0};
  const Point e{0.5, 0.0};
  struct Case {
    const char* label;
    double got;
    double want;
  };
  const std::array<Case, 5> cases{{
      {"rho_ball(0, 0.5e1) = log 3", rho_ball(o, e), std::log(3.0)},
      {"rho_ball(0.5e1, -0.5e1) = 2 log 3", rho_ball(e, -e), 2.0 * std::log(3.0)},
      {"rho_ball((0.5,0),(0,0.5)) = 1.6806723", rho_ball(e, Point{0.0, 0.5}), 1.6806723},
      {"rho_half((0,1),(0,2)) = log 2", rho_half({0.0, 1.0}, {0.0, 2.0}), std::log(2.0)},
      {"rho_half((-1,1),(1,1)) = arcosh 3", rho_half({-1.0, 1.0}, {1.0, 1.0}), std::acosh(3.0)},
  }};
  for (const auto& c : cases) r.checks.push_back(single_value(c.label, std::abs(c.got - c.want), -kInf, 1e-12));
  return r;
}

CriterionResult quadrature_oracle(const VerifyOptions& o) {
  CriterionResult r{2, "Quadrature oracle", {}, {}};
  const std::size_t n = oracle_pairs(o, 100);
  auto ball_sweep = [&](bool stress) {
    return sweep(n, 1, [&](std::size_t i, std::span<double> out) {
      auto rng = draw(o, stress ? 23 : 21, i);
      const Point x = ball_draw(rng, stress);
      const Point y = ball_draw(rng, stress);
      try {
        const double q = path_length_quadrature(geodesic_path(geodesic_disk(x, y)), WeightFunction::Ball, 1e-11);
        out[0] = std::abs(q - rho_ball(x, y));
      } catch (const GeometryError& e) {
        if (e.code() != ErrorCode::NoConvergence) throw;
        out[0] = kInf;
      }
    }, o.execution);
  };
  auto ball = ball_sweep(false);
  auto stress = ball_sweep(true);
  auto half = sweep(n, 1, [&](std::size_t i, std::span<double> out) {
    auto rng = draw(o, 22, i);
    const HalfSpacePoint x = random_half_point(rng, 2);
    const HalfSpacePoint y = random_half_point(rng, 2);
    const double q = path_length_quadrature(geodesic_path(geodesic_half(x, y)), WeightFunction::HalfSpace, 1e-11);
    out[0] = std::abs(q - rho_half(x, y));
  }, o.execution);
  r.checks.push_back(upper_check("ball |quadrature - rho|", ball[0], 1e-8));
  r.checks.push_back(upper_check("half |quadrature - rho|", half[0], 1e-8));
  r.checks.push_back(report_only("stress: ball |quadrature - rho|", stress[0]));
  return r;
}

CriterionResult midpoints(const VerifyOptions& o) {
  CriterionResult r{3, "Midpoints", {}, {}};
  const std::size_t n = pairs(o, 10000);
  auto ball_sweep = [&](bool stress) {
    return sweep(n, 2, [&](std::size_t i, std::span<double> out) {
      auto rng = draw(o, stress ? 33 : 31, i);
      const Point x = ball_draw(rng, stress);
      const Point y = ball_draw(rng, stress);
      const Point z = midpoint_disk(x, y);
      const double dx = rho_ball(x, z);
      out[0] = std::abs(dx - rho_ball(y, z));
      out[1] = std::abs(dx - rho_ball(x, y) / 2.0);
    }, o.execution);
  };
  auto ball = ball_sweep(false);
  auto stress = ball_sweep(true);
  auto half = sweep(n, 2, [&](std::size_t i, std::span<double> out) {
    auto rng = draw(o, 32, i);
    const HalfSpacePoint x = random_half_point(rng, 2);
    const HalfSpacePoint y = random_half_point(rng, 2);
    const HalfSpacePoint z(midpoint_half(x, y));
    const double dx = rho_half(x, z);
    out[0] = std::abs(dx - rho_half(y, z));
    out[1] = std::abs(dx - rho_half(x, y) / 2.0);
  }, o.execution);
  r.checks.push_back(upper_check("ball |rho(x,z) - rho(y,z)|", ball[0], 1e-10));
  r.checks.push_back(upper_check("ball |rho(x,z) - rho(x,y)/2|", ball[1], 1e-10));
  r.checks.push_back(upper_check("half |rho(x,z) - rho(y,z)|", half[0], 1e-10));
  r.checks.push_back(upper_check("half |rho(x,z) - rho(x,y)/2|", half[1], 1e-10));
  r.checks.push_back(report_only("stress: ball |rho(x,z) - rho(y,z)|", stress[0]));
  r.checks.push_back(report_only("stress: ball |rho(x,z) - rho(x,y)/2|", stress[1]));

  const Point z1 = midpoint_disk(Point{0.0, 0.0}, Point{0.8, 0.0});
  const Point z2 = midpoint_half({0.0, 1.0}, {0.0, 4.0});
  const Point z3 = midpoint_half({-1.0, 1.0}, {1.0, 1.0});
  r.checks.push_back(single_value("midpoint(0, 0.8e1) = 0.5e1", dist(z1, Point{0.5, 0.0}), -kInf, 1e-12));
  r.checks.push_back(single_value("midpoint((0,1),(0,4)) = (0,2)", dist(z2, Point{0.0, 2.0}), -kInf, 1e-12));
  r.checks.push_back(single_value("midpoint((-1,1),(1,1)) = (0,sqrt 2)", dist(z3, Point{0.0, std::sqrt(2.0)}), -kInf, 1e-12));
  return r;
}

CriterionResult orthogonality(const VerifyOptions& o) {
  CriterionResult r{4, "Orthogonality", {}, {}};
  const std::size_t n = pairs(o, 10000);
  const CircleOrLine unit = make_circle(Point{0.0, 0.0}, 1.0);
  auto ball_sweep = [&](bool stress) {
    return sweep(n, 3, [&](std::size_t i, std::span<double> out) {
      auto rng = draw(o, stress ? 43 : 41, i);
      const Point x = ball_draw(rng, stress);
      const Point y = ball_draw(rng, stress);
      const GeodesicSegment seg = geodesic_disk(x, y);
      const CircleOrLine bis = bisector_disk(x, y);
      if (const auto* c = std::get_if<Circle>(&seg.carrier))
        out[0] = std::abs(norm2(c->center) - c->radius * c->radius - 1.0);
      else
        out[0] = kNaN;
      out[1] = std::abs(orthogonality_cosine(bis, unit));
      out[2] = std::abs(orthogonality_cosine(bis, seg.carrier));
    }, o.execution);
  };
  auto ball = ball_sweep(false);
  auto stress = ball_sweep(true);
  const CircleOrLine axis = make_line(Point{0.0, 0.0}, Point{1.0, 0.0});
  auto half = sweep(n, 3, [&](std::size_t i, std::span<double> out) {
    auto rng = draw(o, 42, i);
    const HalfSpacePoint x = random_half_point(rng, 2);
    const HalfSpacePoint y = random_half_point(rng, 2);
    const GeodesicSegment seg = geodesic_half(x, y);
    const CircleOrLine bis = bisector_half(x, y);
    const auto* c = std::get_if<Circle>(&seg.carrier);
    out[0] = c ? std::abs(c->center[1]) : kNaN;
    out[1] = std::abs(orthogonality_cosine(bis, axis));
    out[2] = std::abs(orthogonality_cosine(bis, seg.carrier));
  }, o.execution);
  r.checks.push_back(upper_check("disk carrier |a|^2 - r^2 - 1", ball[0], 1e-10));
  r.checks.push_back(upper_check("disk bisector vs unit circle |cos|", ball[1], 1e-10));
  r.checks.push_back(upper_check("disk bisector vs carrier |cos|", ball[2], 1e-10));
  r.checks.push_back(upper_check("half carrier center height", half[0], 1e-10));
  r.checks.push_back(upper_check("half bisector vs real axis |cos|", half[1], 1e-10));
  r.checks.push_back(upper_check("half bisector vs carrier |cos|", half[2], 1e-10));
  r.checks.push_back(report_only("stress: disk carrier |a|^2 - r^2 - 1", stress[0]));
  r.checks.push_back(report_only("stress: disk bisector vs unit circle |cos|", stress[1]));
  r.checks.push_back(report_only("stress: disk bisector vs carrier |cos|", stress[2]));
  return r;
}

CriterionResult apollonian(const VerifyOptions& o) {
  CriterionResult r{5, "Apollonian identity", {}, {}};
  const std::size_t n = oracle_pairs(o, 100);
  const CircleBoundarySampler circle(10000);
  const RealLineBoundarySampler line(10000);
  auto ball_sweep = [&](bool stress) {
    return sweep(n, 2, [&](std::size_t i, std::span<double> out) {
      auto rng = draw(o, stress ? 53 : 51, i);
      const Point x = ball_draw(rng, stress);
      const Point y = ball_draw(rng, stress);
      const double diff = apollonian_distance(x, y, circle) - rho_ball(x, y);
      out[0] = std::abs(diff);
      out[1] = diff;
    }, o.execution);
  };
  auto ball = ball_sweep(false);
  auto stress = ball_sweep(true);
  auto half = sweep(n, 2, [&](std::size_t i, std::span<double> out) {
    auto rng = draw(o, 52, i);
    const HalfSpacePoint x = random_half_point(rng, 2);
    const HalfSpacePoint y = random_half_point(rng, 2);
    const double diff = apollonian_distance(x.point(), y.point(), line) - rho_half(x, y);
    out[0] = std::abs(diff);
    out[1] = diff;
  }, o.execution);
  r.checks.push_back(upper_check("ball |alpha - rho|", ball[0], 1e-3));
  r.checks.push_back(upper_check("ball alpha - rho", ball[1], 1e-12));
  r.checks.push_back(upper_check("half |alpha - rho|", half[0], 1e-3));
  r.checks.push_back(upper_check("half alpha - rho", half[1], 1e-12));
  r.checks.push_back(report_only("stress: ball |alpha - rho|", stress[0]));
  r.checks.push_back(report_only("stress: ball alpha - rho", stress[1]));
  return r;
}

const std::array<std::string_view, 13> kBallEntries{"b1", "b2", "b2'", "b3", "b4", "b4'", "b5",
                                                    "b6", "b7", "midpoint", "chord", "circumscribed",
                                                    "symmetric-chord"};
const std::array<std::string_view, 4> kHalfEntries{"h1", "h2", "h3", "h3'"};

CriterionResult bound_validity(const VerifyOptions& o) {
  CriterionResult r{6, "Bound validity", {}, {}};
  const std::size_t n = pairs(o, 100000);
  const std::size_t families = std::min<std::size_t>(n, 1000);

  for (std::size_t dim : {2u, 3u}) {
    auto ball = sweep(n, kBallEntries.size(), [&](std::size_t i, std::span<double> out) {
      auto rng = draw(o, 60 + dim, i);
      const Point x = random_ball_point(rng, dim);
      const Point y = random_ball_point(rng, dim);
      const BoundReport rep = ball_bound_report(x, y);
      for (std::size_t k = 0; k < kBallEntries.size(); ++k) {
        const BoundEntry& e = rep.at(kBallEntries[k]);
        out[k] = e.applicable ? e.slack : kNaN;
      }
    }, o.execution);
    for (std::size_t k = 0; k < kBallEntries.size(); ++k)
      r.checks.push_back(lower_check("ball n=" + std::to_string(dim) + " slack " + std::string(kBallEntries[k]), ball[k], -1e-12));

    // Metrics 4 and 5: comparison flag mismatch and h3' - h3.
    auto half = sweep(n, kHalfEntries.size() + 2, [&](std::size_t i, std::span<double> out) {
      auto rng = draw(o, 70 + dim, i);
      const HalfSpacePoint x = random_half_point(rng, dim);
      const HalfSpacePoint y = random_half_point(rng, dim);
      const BoundReport rep = half_lower_bounds(x, y);
      for (std::size_t k = 0; k < kHalfEntries.size(); ++k) out[k] = rep.at(kHalfEntries[k]).slack;
      const double sum = x.height() + y.height();
      const double h = horizontal_distance(x, y);
      const double h1 = rep.at("h1").bound_value;
      const double h2 = rep.at("h2").bound_value;
      const bool tie = std::abs(sum - h) <= 1e-12 * std::max(1.0, sum) || std::abs(h2 - h1) <= 1e-12 * h1;
      out[4] = tie ? kNaN : ((h2 > h1) != (sum < h) ? 1.0 : 0.0);
      out[5] = rep.at("h3'").bound_value - rep.at("h3").bound_value;
    }, o.execution);
    for (std::size_t k = 0; k < kHalfEntries.size(); ++k)
      r.checks.push_back(lower_check("half n=" + std::to_string(dim) + " slack " + std::string(kHalfEntries[k]), half[k], -1e-12));
    r.checks.push_back(upper_check("half n=" + std::to_string(dim) + " (h2>h1) != (xn+yn<|x'-y'|)", half[4], 0.0));
    r.checks.push_back(upper_check("half n=" + std::to_string(dim) + " h3' - h3", half[5], 0.0));
  }

  // Equality certificates on structured families.
  auto cert = sweep(families, 5, [&](std::size_t i, std::span<double> out) {
    auto rng = draw(o, 80, i);
    const Point x = random_ball_point(rng, 2);
    const BoundReport at_zero = ball_lower_bounds(x, Point{0.0, 0.0});
    out[0] = std::abs(at_zero.at("b2").slack);

    const double angle = rng.uniform(0.05, std::numbers::pi - 0.05);
    const Point y = Point::from_complex(x.to_complex() * std::polar(1.0, angle));
    const BoundReport same_norm = ball_bound_report(x, y);
    out[1] = std::abs(same_norm.at("b1").slack);
    const BoundEntry& chord = same_norm.at("chord");
    out[2] = chord.applicable ? std::abs(chord.slack) : kNaN;

    const HalfSpacePoint p = random_half_point(rng, 2);
    const HalfSpacePoint q = random_half_point(rng, 2);
    const HalfSpacePoint level({q.point()[0], p.height()});
    out[3] = std::abs(half_lower_bounds(p, level).at("h1").slack);
    const HalfSpacePoint above({p.point()[0], q.height()});
    out[4] = dist(p.point(), above.point()) < kDistinctTol ? kNaN : std::abs(half_lower_bounds(p, above).at("h3").slack);
  }, o.execution);
  r.checks.push_back(upper_check("equality b2 at y = 0", cert[0], 1e-10));
  r.checks.push_back(upper_check("equality b1 at |x| = |y|", cert[1], 1e-10));
  r.checks.push_back(upper_check("equality chord at |x| = |y|", cert[2], 1e-10));
  r.checks.push_back(upper_check("equality h1 at x_n = y_n", cert[3], 1e-10));
  r.checks.push_back(upper_check("equality h3 at x' = y'", cert[4], 1e-10));
  return r;
}

CriterionResult chord_cross_check(const VerifyOptions& o) {
  CriterionResult r{7, "Chord-bound cross-check", {}, {}};
  const std::size_t n = pairs(o, 10000);
  auto chord_sweep = [&](bool stress) {
    return sweep(n, 3, [&](std::size_t i, std::span<double> out) {
      auto rng = draw(o, stress ? 93 : 91, i);
      const Point x = ball_draw(rng, stress);
      const Point y = ball_draw(rng, stress);
      if (collinear_with_origin(x, y)) {
        out[0] = out[1] = kNaN;
      } else {
        const double bound = chord_bound(x, y);
        out[0] = std::abs(bound - chord_bound_angular(x, y));
        out[1] = bound - rho_ball(x, y);
      }
      const double angle = rng.uniform(0.05, std::numbers::pi - 0.05);
      const Point s = Point::from_complex(x.to_complex() * std::polar(1.0, angle));
      out[2] = std::abs(chord_bound(x, s) - rho_ball(x, s));
    }, o.execution);
  };
  auto forms = chord_sweep(false);
  auto stress = chord_sweep(true);
  r.checks.push_back(upper_check("|arsinh form - 4 artanh form|", forms[0], 1e-9));
  r.checks.push_back(upper_check("chord bound - rho", forms[1], 1e-12));
  r.checks.push_back(upper_check("symmetric pairs |chord bound - rho|", forms[2], 1e-10));
  r.checks.push_back(report_only("stress: |arsinh form - 4 artanh form|", stress[0]));
  r.checks.push_back(report_only("stress: chord bound - rho", stress[1]));
  r.checks.push_back(report_only("stress: symmetric pairs |chord bound - rho|", stress[2]));
  return r;
}

CriterionResult mobius_invariance(const VerifyOptions& o) {
  CriterionResult r{8, "Moebius invariance", {}, {}};
  const std::size_t n = pairs(o, 10000);
  const MobiusMap2 conj = make_mobius(1.0, 0.0, 0.0, 1.0, true);
  const MobiusMap2 cayley = cayley_disk_to_half();
  auto mobius_sweep = [&](bool stress) {
    return sweep(n, 2, [&](std::size_t i, std::span<double> out) {
      auto rng = draw(o, stress ? 103 : 101, i);
      const Point z0 = ball_draw(rng, stress);
      const double theta = rng.uniform(-std::numbers::pi, std::numbers::pi);
      MobiusMap2 t = disk_automorphism(z0.to_complex(), theta);
      if (rng.uniform() < 0.5) t = compose(t, conj);
      const Point x = ball_draw(rng, stress);
      const Point y = ball_draw(rng, stress);
      const double rho = rho_ball(x, y);
      out[0] = std::abs(rho_ball(mobius_apply(t, x), mobius_apply(t, y)) - rho);
      const HalfSpacePoint hx(mobius_apply(cayley, x));
      const HalfSpacePoint hy(mobius_apply(cayley, y));
      out[1] = std::abs(rho_half(hx, hy) - rho);
    }, o.execution);
  };
  auto res = mobius_sweep(false);
  auto stress = mobius_sweep(true);
  r.checks.push_back(upper_check("|rho(Tx,Ty) - rho(x,y)|", res[0], 1e-10));
  r.checks.push_back(upper_check("ball to half |rho_half - rho_ball|", res[1], 1e-10));
  r.checks.push_back(report_only("stress: |rho(Tx,Ty) - rho(x,y)|", stress[0]));
  r.checks.push_back(report_only("stress: ball to half |rho_half - rho_ball|", stress[1]));
  return r;
}

CriterionResult remark(const VerifyOptions& o) {
  CriterionResult r{9, "Bound ordering c6 <= c5 <= c3 <= c2 (reported)", {}, {}};
  const std::size_t n = pairs(o, 100000);
  auto res = sweep(n, 3, [&](std::size_t i, std::span<double> out) {
    auto rng = draw(o, 111, i);
    const Point x = random_ball_point(rng, 2);
    const Point y = random_ball_point(rng, 2);
    const RemarkOrdering c = remark_ordering(x, y);
    out[0] = c.c6 - c.c5;
    out[1] = c.c5 - c.c3;
    out[2] = c.c3 - c.c2;
  }, o.execution);
  r.checks.push_back(report_only("c6 - c5 (positive = violation)", res[0]));
  r.checks.push_back(report_only("c5 - c3 (positive = violation)", res[1]));
  r.checks.push_back(report_only("c3 - c2 (positive = violation)", res[2]));

  const RemarkOrdering c = remark_ordering(Point{0.5, 0.0}, Point{0.0, 0.0});
  r.checks.push_back(single_value("counterexample c5 at (0.5e1, 0)", c.c5, 0.2666667 - 1e-6, 0.2666667 + 1e-6));
  r.checks.push_back(single_value("counterexample c3 at (0.5e1, 0)", c.c3, 0.2580645 - 1e-6, 0.2580645 + 1e-6));
  r.checks.push_back(single_value("counterexample c5 - c3 > 0", c.c5 - c.c3, std::numeric_limits<double>::min(), kInf));
  r.notes.push_back(std::string("c6 <= c5: ") + (res[0].positive == 0 ? "holds" : "violated") + " on all samples");
  r.notes.push_back(std::string("c5 <= c3: ") + (res[1].positive == 0 ? "holds" : "violated") + " on " +
                    std::to_string(res[1].positive) + " of " + std::to_string(res[1].count) + " samples");
  r.notes.push_back(std::string("c3 <= c2: ") + (res[2].positive == 0 ? "holds" : "violated") + " on all samples");
  return r;
}

using SuiteFn = CriterionResult (*)(const VerifyOptions&);
struct Suite {
  std::string_view name;
  SuiteFn fn;
};

constexpr std::array<Suite, 9> kSuites{{
    {"golden", golden},
    {"quadrature", quadrature_oracle},
    {"midpoint", midpoints},
    {"orthogonality", orthogonality},
    {"apollonian", apollonian},
    {"bounds", bound_validity},
    {"chord", chord_cross_check},
    {"mobius", mobius_invariance},
    {"remark", remark},
}};

constexpr std::array<std::string_view, 10> kNames{"golden", "quadrature", "midpoint", "orthogonality", "apollonian",
                                                  "bounds", "chord", "mobius", "remark", "all"};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

}  // namespace

std::span<const std::string_view> suite_names() { return kNames; }

std::vector<CriterionResult> run_suite(std::string_view name, const VerifyOptions& opts) {
  std::vector<CriterionResult> out;
  for (const auto& s : kSuites)
    if (name == "all" || name == s.name) out.push_back(s.fn(opts));
  if (out.empty()) fail(ErrorCode::DomainError, "unknown verify suite: " + std::string(name));
  return out;
}

std::string format_report(const std::vector<CriterionResult>& results) {
  std::string text;
  char line[256];
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "[%d] %s: %s\n", r.id, r.title.c_str(), r.passed() ? "PASS" : "FAIL");
    text += line;
    for (const auto& c : r.checks) {
      const char* status = !c.asserted ? "info" : (c.passed() ? "ok" : "FAIL");
      std::string range;
      if (std::isfinite(c.lower)) range += ">= " + format_double(c.lower);
      if (std::isfinite(c.upper)) range += (range.empty() ? "<= " : ", <= ") + format_double(c.upper);
      if (range.empty()) range = "-";
      std::snprintf(line, sizeof line, "    %-44s n=%-7zu min=%s max=%s (#%zu) want %s  %s\n", c.label.c_str(),
                    c.stats.count, format_double(c.stats.min).c_str(), format_double(c.stats.max).c_str(),
                    c.stats.argmax, range.c_str(), status);
      text += line;
    }
    for (const auto& note : r.notes) text += "    note: " + note + "\n";
  }
  return text;
}

}  // namespace hypgeo
