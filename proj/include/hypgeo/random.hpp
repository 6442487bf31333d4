#pragma once

#include <cstdint>
#include <limits>

#include "hypgeo/halfplane_model.hpp"
#include "hypgeo/point.hpp"

namespace hypgeo {

/// SplitMix64 generator. One independent stream per (seed, index) keeps sweeps
/// reproducible regardless of how indices are distributed over threads.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

SplitMix64 stream(std::uint64_t seed, std::uint64_t index) noexcept;

/// Uniform direction on S^{n-1}.
Point random_direction(SplitMix64& rng, std::size_t dim);
/// Uniform point of the open unit ball.
Point random_in_ball(SplitMix64& rng, std::size_t dim);
/// Point with 1 - |x| = 10^-k for k uniform in [1, 6].
Point random_near_boundary(SplitMix64& rng, std::size_t dim);
/// Half uniform interior points, half near-boundary points.
Point random_ball_point(SplitMix64& rng, std::size_t dim);

/// Horizontal coordinates uniform in [-4, 4], height 10^u with u uniform in [-3, 1].
HalfSpacePoint random_half_point(SplitMix64& rng, std::size_t dim);

}  // namespace hypgeo
