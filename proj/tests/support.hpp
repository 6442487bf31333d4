#pragma once

#include <gtest/gtest.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "hypgeo/halfplane_model.hpp"
#include "hypgeo/random.hpp"

namespace hypgeo::test {

/// Runs prop on `count` generated cases; the first failure reports its index
/// and seed so the case can be replayed with stream(seed, index).
template <class Gen, class Prop>
void for_all(std::size_t count, std::uint64_t seed, Gen gen, Prop prop) {
  for (std::size_t i = 0; i < count; ++i) {
    SplitMix64 rng = stream(seed, i);
    auto sample = gen(rng);
    SCOPED_TRACE("case " + std::to_string(i) + " of seed " + std::to_string(seed));
    std::apply(prop, sample);
    if (::testing::Test::HasFailure()) return;
  }
}

inline auto disk_pair(std::size_t dim = 2) {
  return [dim](SplitMix64& rng) { return std::tuple{random_in_ball(rng, dim), random_in_ball(rng, dim)}; };
}

/// Mix of uniform and near-boundary points.
inline auto stressed_disk_pair(std::size_t dim = 2) {
  return [dim](SplitMix64& rng) { return std::tuple{random_ball_point(rng, dim), random_ball_point(rng, dim)}; };
}

inline auto half_pair(std::size_t dim = 2) {
  return [dim](SplitMix64& rng) { return std::tuple{random_half_point(rng, dim), random_half_point(rng, dim)}; };
}

inline void expect_point_near(const Point& got, const Point& want, double tol) {
  ASSERT_EQ(got.dim(), want.dim());
  for (std::size_t i = 0; i < got.dim(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "coordinate " << i;
}

}  // namespace hypgeo::test
