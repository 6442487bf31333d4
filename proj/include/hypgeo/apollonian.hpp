#pragma once

#include <cstddef>
#include <functional>

#include "hypgeo/geom_core.hpp"

namespace hypgeo {

/// The set {z : |base_x - z| < ratio * |base_y - z|}.
struct ApollonianBall {
  Point base_x;
  Point base_y;
  double ratio = 1.0;

  bool contains(const Point& z) const;
};

ApollonianBall make_apollonian_ball(Point x, Point y, double c);

/// Boundary of the Apollonian ball: a sphere for c != 1, the perpendicular
/// bisector of [x, y] for c == 1. Accepts any c > 0.
CircleOrLine apollonian_boundary(const Point& x, const Point& y, double c);
CircleOrLine apollonian_boundary(const ApollonianBall& ball);

/// A discretized model boundary with local refinement around grid samples.
class BoundarySampler {
 public:
  using Objective = std::function<double(const Point&)>;

  virtual ~BoundarySampler() = default;

  virtual std::size_t dim() const = 0;
  virtual std::size_t size() const = 0;
  /// May return the infinity sentinel.
  virtual Point sample(std::size_t i) const = 0;
  /// A boundary point near sample(i) at which `objective` is (locally) maximal.
  virtual Point refine(std::size_t i, const Objective& objective) const = 0;
};

/// Uniform angular grid on the circle S^1(center, radius).
class CircleBoundarySampler final : public BoundarySampler {
 public:
  CircleBoundarySampler(Point center, double radius, std::size_t count);
  /// Unit circle, the boundary of the disk.
  explicit CircleBoundarySampler(std::size_t count);

  std::size_t dim() const override { return 2; }
  std::size_t size() const override { return count_; }
  Point sample(std::size_t i) const override;
  Point refine(std::size_t i, const Objective& objective) const override;

 private:
  Point at(double angle) const;

  Point center_;
  double radius_;
  std::size_t count_;
};

/// Fibonacci lattice on the unit sphere S^2.
class SphereBoundarySampler final : public BoundarySampler {
 public:
  explicit SphereBoundarySampler(std::size_t count);

  std::size_t dim() const override { return 3; }
  std::size_t size() const override { return count_; }
  Point sample(std::size_t i) const override;
  Point refine(std::size_t i, const Objective& objective) const override;

 private:
  std::size_t count_;
};

/// The real axis through a = tan(phi), phi = -pi/2 + pi k / count for
/// k = 1..count-1, followed by the point at infinity.
class RealLineBoundarySampler final : public BoundarySampler {
 public:
  explicit RealLineBoundarySampler(std::size_t count);

  std::size_t dim() const override { return 2; }
  std::size_t size() const override { return count_; }
  Point sample(std::size_t i) const override;
  Point refine(std::size_t i, const Objective& objective) const override;

 private:
  std::size_t count_;
};

/// The plane x_3 = 0 on a tangent grid in both coordinates, plus infinity.
class PlaneBoundarySampler final : public BoundarySampler {
 public:
  explicit PlaneBoundarySampler(std::size_t per_axis);

  std::size_t dim() const override { return 3; }
  std::size_t size() const override { return (per_axis_ - 1) * (per_axis_ - 1) + 1; }
  Point sample(std::size_t i) const override;
  Point refine(std::size_t i, const Objective& objective) const override;

 private:
  std::size_t per_axis_;
};

struct ApollonianParameters {
  double X = 1.0;
  double Y = 1.0;
  Point witness_a;  // attains X
  Point witness_d;  // attains Y

  double distance() const;
};

/// X = sup |a - y| / |a - x| and Y = sup |x - d| / |y - d| over the sampled
/// boundary, each followed by one local refinement around the discrete argmax.
ApollonianParameters apollonian_parameters(const Point& x, const Point& y, const BoundarySampler& boundary,
                                           bool refine = true);

/// log(X * Y); 0 when x == y.
double apollonian_distance(const Point& x, const Point& y, const BoundarySampler& boundary, bool refine = true);

/// Golden-section search for a maximum of f on [lo, hi].
double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, int iterations = 80);

}  // namespace hypgeo
