#pragma once

#include <span>
#include <variant>

#include "hypgeo/geom_core.hpp"

namespace hypgeo {

/// Density of the hyperbolic length element.
enum class WeightFunction {
  HalfSpace,  // w(z) = 1 / z_n
  Ball,       // w(z) = 2 / (1 - |z|^2)
};

/// Throws DomainError when z is outside the domain of w.
double weight(WeightFunction w, const Point& z);

struct SegmentPath {
  Point from;
  Point to;
};

/// Planar circular arc center + radius * e^{i phi}, phi from start_angle to end_angle.
struct ArcPath {
  Point center;
  double radius = 0.0;
  double start_angle = 0.0;
  double end_angle = 0.0;
};

using PathPiece = std::variant<SegmentPath, ArcPath>;

Point path_start(const PathPiece& piece);
Point path_end(const PathPiece& piece);

/// The arc of a geodesic carrier from seg.x to seg.y inside the model.
PathPiece geodesic_path(const GeodesicSegment& seg);

/// Maximum number of accepted subintervals before NoConvergence.
inline constexpr std::size_t kMaxQuadratureIntervals = std::size_t{1} << 16;

/// Weighted length sum_i int w(gamma_i) |gamma_i'| by adaptive Simpson, with
/// absolute error at most `tol` over the whole path.
double path_length_quadrature(std::span<const PathPiece> path, WeightFunction w, double tol);
double path_length_quadrature(const PathPiece& piece, WeightFunction w, double tol);

}  // namespace hypgeo
