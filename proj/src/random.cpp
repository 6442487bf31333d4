#include "hypgeo/random.hpp"

#include <cmath>

namespace hypgeo {

SplitMix64 stream(std::uint64_t seed, std::uint64_t index) noexcept {
  SplitMix64 mix(seed);
  const std::uint64_t a = mix();
  SplitMix64 idx(index ^ 0x5851f42d4c957f2dULL);
  return SplitMix64(a ^ idx());
}

Point random_direction(SplitMix64& rng, std::size_t dim) {
  for (;;) {
    Point p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = rng.uniform(-1.0, 1.0);
    const double n2 = norm2(p);
    if (n2 > 1e-4 && n2 <= 1.0) return p / std::sqrt(n2);
  }
}

Point random_in_ball(SplitMix64& rng, std::size_t dim) {
  for (;;) {
    Point p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = rng.uniform(-1.0, 1.0);
    if (norm2(p) < 1.0) return p;
  }
}

Point random_near_boundary(SplitMix64& rng, std::size_t dim) {
  const double gap = std::pow(10.0, -rng.uniform(1.0, 6.0));
  return random_direction(rng, dim) * (1.0 - gap);
}

Point random_ball_point(SplitMix64& rng, std::size_t dim) {
  return rng.uniform() < 0.5 ? random_in_ball(rng, dim) : random_near_boundary(rng, dim);
}

HalfSpacePoint random_half_point(SplitMix64& rng, std::size_t dim) {
  Point p(dim);
  for (std::size_t i = 0; i + 1 < dim; ++i) p[i] = rng.uniform(-4.0, 4.0);
  p[dim - 1] = std::pow(10.0, rng.uniform(-3.0, 1.0));
  return HalfSpacePoint(std::move(p));
}

}  // namespace hypgeo
