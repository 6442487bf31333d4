#pragma once

#include <complex>
#include <cstddef>

#include "hypgeo/apollonian.hpp"
#include "hypgeo/geom_core.hpp"

namespace hypgeo {

/// Collinearity threshold relative to |x||y| for switching to a diameter carrier.
inline constexpr double kCollinearTol = 1e-12;

/// Hyperbolic distance in the unit ball, 2 arsinh(|x-y| / sqrt((1-|x|^2)(1-|y|^2))).
double rho_ball(const Point& x, const Point& y);

/// A[x,y] = sqrt(|x-y|^2 + (1-|x|^2)(1-|y|^2)).
double ahlfors_bracket(const Point& x, const Point& y);

/// The hyperbolic sphere about x of radius r as the Apollonian ball with base
/// points x and x/|x|^2. Throws DegenerateInput for x = 0; use
/// hyperbolic_sphere_ball for a representation valid at the origin.
ApollonianBall sphere_to_apollonian(const Point& x, double r);

/// Euclidean form of the hyperbolic ball B(x, r) in the unit ball.
struct EuclideanBallView {
  Point hyperbolic_center;
  double hyperbolic_radius = 0.0;
  Point euclidean_center;
  double euclidean_radius = 0.0;
  double t = 0.0;  // tanh(hyperbolic_radius / 2)
};

EuclideanBallView ball_to_euclidean(const Point& x, double r);

/// Boundary sphere of the hyperbolic ball B(x, r), any x in the ball.
Circle hyperbolic_sphere_ball(const Point& x, double r);

/// Carrier circle (or diameter) of the geodesic through x and y in the disk,
/// with ideal endpoints ordered x', x, y, y'.
GeodesicSegment geodesic_disk(const Point& x, const Point& y);

/// log |x', x, y, y'| from the ideal endpoints. Cross-checks against a sampled
/// supremum of log |a, x, y, b| over `samples` boundary points.
double rho_sup_absratio(const Point& x, const Point& y, std::size_t samples);

/// {z : rho(x, z) = rho(y, z)} in the disk: an Apollonian circle orthogonal to
/// the unit circle, or the line through 0 when |x| = |y|.
CircleOrLine bisector_disk(const Point& x, const Point& y);

/// Hyperbolic midpoint of x, y in the disk.
Point midpoint_disk(const Point& x, const Point& y);
/// Hyperbolic midpoint in the unit ball of any dimension, from the normalized
/// sum of the hyperboloid images of x and y.
Point midpoint_ball(const Point& x, const Point& y);

/// Midpoint as T_x^{-1}(T_x(y) / (1 + sqrt(1 - |T_x(y)|^2))), T_x the automorphism
/// moving x to 0. Valid for every pair; accurate to a few ulps in rho.
Point midpoint_by_automorphism(const Point& x, const Point& y);

/// Midpoint as the intersection of the carrier and the bisector circle:
/// |z| = d(0, line a1 a2) - r1 r2 / sqrt(r1^2 + r2^2). Throws DegenerateInput when
/// either curve is a line. Loses accuracy for large or tiny circles.
Point midpoint_by_circles(const Point& x, const Point& y);

struct BisectConstruction {
  CircleOrLine bisector;
  CircleOrLine carrier;
  Point midpoint;
};

BisectConstruction bisect_construction(const Point& x, const Point& y);

/// Midpoint of [0, x] as the intersection of [0, x] with the segment from -i
/// to x + i sqrt(1 - |x|^2), after rotating x onto the positive real axis.
Point midpoint_origin_special(const Point& x);

/// The chord of the carrier through x, y slid along the carrier until it is
/// symmetric about the line through 0 and the carrier center.
struct ChordGeometry {
  Point carrier_center;
  double carrier_radius = 0.0;
  double half_chord = 0.0;
  double apex_angle = 0.0;  // angle (0, a, x'_sym)
  Point x_sym;
  Point y_sym;
};

/// Throws DegenerateInput when 0, x, y are collinear.
ChordGeometry chord_geometry(const Point& x, const Point& y);

namespace detail {

/// Carrier and chord data in extended precision; the chord bounds are
/// ill-conditioned in double when the symmetrized chord nears the boundary.
struct ExtendedChord {
  std::complex<long double> center;
  long double radius = 0.0L;
  long double half_chord = 0.0L;
  long double apothem = 0.0L;  // distance from the center to the chord midpoint
  long double sweep = 0.0L;  // signed angle from x to y about the center
  long double apex = 0.0L;   // direction from the center towards 0
  long double apex_angle = 0.0L;
};

ExtendedChord extended_chord(const Point& x, const Point& y);

}  // namespace detail

/// True when 0, x, y are collinear under the carrier threshold.
bool collinear_with_origin(const Point& x, const Point& y);

}  // namespace hypgeo
