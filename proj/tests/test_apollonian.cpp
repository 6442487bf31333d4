#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hypgeo/apollonian.hpp"
#include "hypgeo/disk_model.hpp"
#include "hypgeo/error.hpp"
#include "hypgeo/halfplane_model.hpp"
#include "support.hpp"

namespace hypgeo {
namespace {

TEST(ApollonianBoundary, Examples) {
  const CircleOrLine c = apollonian_boundary({-1.0, 0.0}, {1.0, 0.0}, 0.5);
  ASSERT_TRUE(is_circle(c));
  test::expect_point_near(std::get<Circle>(c).center, {-5.0 / 3.0, 0.0}, 1e-15);
  EXPECT_NEAR(std::get<Circle>(c).radius, 4.0 / 3.0, 1e-15);

  const CircleOrLine line = apollonian_boundary({-1.0, 0.0}, {1.0, 0.0}, 1.0);
  ASSERT_TRUE(is_line(line));
  EXPECT_NEAR(distance_to(line, {0.0, 5.0}), 0.0, 1e-15);
  EXPECT_NEAR(distance_to(line, {1.0, 0.0}), 1.0, 1e-15);

  try {
    (void)apollonian_boundary({0.2, 0.1}, {0.2, 0.1}, 0.5);
    ADD_FAILURE();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
  }
}

TEST(ApollonianBoundary, DefiningRatioOnSampledPoints) {
  test::for_all(300, 21, [](SplitMix64& rng) {
    return std::tuple{random_in_ball(rng, 2) * 3.0, random_in_ball(rng, 2) * 3.0, rng.uniform(0.05, 4.0)};
  }, [](const Point& x, const Point& y, double c) {
    if (dist(x, y) < 1e-3 || std::abs(c - 1.0) < 1e-3) return;
    const CircleOrLine b = apollonian_boundary(x, y, c);
    for (int k = 0; k < 32; ++k) {
      const Point p = point_on(b, 2.0 * std::numbers::pi * k / 32);
      EXPECT_NEAR(dist(x, p) / dist(y, p), c, 1e-10);
    }
    const ApollonianBall ball = make_apollonian_ball(x, y, c);
    EXPECT_TRUE(ball.contains(x));
    EXPECT_FALSE(ball.contains(y));
  });
}

TEST(ApollonianBoundary, SymmetryAndNesting) {
  test::for_all(300, 22, [](SplitMix64& rng) {
    return std::tuple{random_in_ball(rng, 2) * 2.0, random_in_ball(rng, 2) * 2.0, rng.uniform(0.05, 0.9)};
  }, [](const Point& x, const Point& y, double c) {
    if (dist(x, y) < 1e-3) return;
    EXPECT_TRUE(same_point_set(apollonian_boundary(x, y, c), apollonian_boundary(y, x, 1.0 / c), 1e-10));
    const double c2 = c + 0.5 * (1.0 - c);
    const ApollonianBall outer = make_apollonian_ball(x, y, c2);
    const CircleOrLine inner = apollonian_boundary(x, y, c);
    for (int k = 0; k < 16; ++k) EXPECT_TRUE(outer.contains(point_on(inner, 2.0 * std::numbers::pi * k / 16)));
  });
}

TEST(ApollonianParameters, DiskAxisExample) {
  const CircleBoundarySampler circle(10000);
  const ApollonianParameters p = apollonian_parameters({0.0, 0.0}, {0.5, 0.0}, circle);
  EXPECT_NEAR(p.X, 1.5, 1e-9);
  EXPECT_NEAR(p.Y, 2.0, 1e-9);
  test::expect_point_near(p.witness_a, {-1.0, 0.0}, 1e-6);
  test::expect_point_near(p.witness_d, {1.0, 0.0}, 1e-6);
  EXPECT_NEAR(std::abs(norm(p.witness_a) - 1.0), 0.0, 1e-10);
  EXPECT_NEAR(apollonian_distance({0.0, 0.0}, {0.5, 0.0}, circle), std::log(3.0), 1e-3);
  EXPECT_EQ(apollonian_distance({0.3, 0.1}, {0.3, 0.1}, circle), 0.0);
}

TEST(ApollonianParameters, NearbyPointsGiveRatiosNearOne) {
  const CircleBoundarySampler circle(10000);
  const ApollonianParameters p = apollonian_parameters({0.2, 0.1}, {0.2 + 1e-6, 0.1}, circle);
  EXPECT_GE(p.X, 1.0);
  EXPECT_GE(p.Y, 1.0);
  EXPECT_LT(p.X * p.Y, 1.0 + 1e-4);
}

TEST(ApollonianParameters, HalfPlaneExample) {
  const RealLineBoundarySampler line(10000);
  const ApollonianParameters p = apollonian_parameters({0.0, 1.0}, {0.0, 2.0}, line);
  EXPECT_NEAR(p.X * p.Y, 2.0, 1e-9);
  EXPECT_NEAR(apollonian_distance({0.0, 1.0}, {0.0, 2.0}, line), std::log(2.0), 1e-3);
}

TEST(ApollonianParameters, EmptyBoundary) {
  const CircleBoundarySampler one(1);
  try {
    (void)apollonian_parameters({0.0, 0.0}, {0.5, 0.0}, one);
    ADD_FAILURE();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyBoundary);
  }
}

TEST(ApollonianParameters, MonotoneInSampleCount) {
  const Point x{0.3, -0.4}, y{-0.1, 0.55};
  double previous = 0.0;
  for (std::size_t n : {16, 64, 256, 1024}) {
    const double alpha = apollonian_distance(x, y, CircleBoundarySampler(n), false);
    EXPECT_GE(alpha, previous - 1e-15) << n;
    previous = alpha;
  }
}

TEST(ApollonianDistance, LowerEstimateOfRhoInBothModels) {
  const CircleBoundarySampler circle(10000);
  const SphereBoundarySampler sphere(4000);
  const RealLineBoundarySampler line(10000);
  test::for_all(20, 23, test::disk_pair(), [&](const Point& x, const Point& y) {
    const double rho = rho_ball(x, y);
    const double alpha = apollonian_distance(x, y, circle);
    EXPECT_LE(alpha, rho + 1e-12);
    EXPECT_NEAR(alpha, rho, 1e-3);
  });
  test::for_all(10, 24, test::disk_pair(3), [&](const Point& x, const Point& y) {
    EXPECT_LE(apollonian_distance(x, y, sphere), rho_ball(x, y) + 1e-12);
  });
  test::for_all(20, 25, test::half_pair(), [&](const HalfSpacePoint& x, const HalfSpacePoint& y) {
    const double rho = rho_half(x, y);
    const double alpha = apollonian_distance(x.point(), y.point(), line);
    EXPECT_LE(alpha, rho + 1e-12);
    EXPECT_NEAR(alpha, rho, 1e-3);
  });
}

TEST(ApollonianDistance, TriangleInequality) {
  const CircleBoundarySampler circle(4000);
  test::for_all(30, 26, [](SplitMix64& rng) {
    return std::tuple{random_in_ball(rng, 2), random_in_ball(rng, 2), random_in_ball(rng, 2)};
  }, [&](const Point& x, const Point& y, const Point& z) {
    EXPECT_LE(apollonian_distance(x, z, circle),
              apollonian_distance(x, y, circle) + apollonian_distance(y, z, circle) + 1e-9);
  });
}

TEST(GoldenSection, FindsInteriorMaximum) {
  EXPECT_NEAR(golden_section_maximize([](double t) { return -(t - 0.3) * (t - 0.3); }, -1.0, 2.0), 0.3, 1e-8);
}

}  // namespace
}  // namespace hypgeo
