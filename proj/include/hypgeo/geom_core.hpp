#pragma once

#include <complex>
#include <variant>

#include "hypgeo/point.hpp"

namespace hypgeo {

/// Pairwise-distinctness threshold used by the ratio functions.
inline constexpr double kDistinctTol = 1e-14;

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Circles, lines and hyperplanes.

/// Euclidean sphere S^{n-1}(center, radius); a circle when n = 2.
struct Circle {
  Point center;
  double radius = 0.0;
};

/// Straight line {point + t * direction}, direction of unit length.
struct Line {
  Point point;
  Point direction;
};

/// Codimension-one flat {z : (z - point) . normal = 0}. Only produced for n >= 3;
/// in the plane the same set is returned as a Line.
struct Hyperplane {
  Point point;
  Point normal;
};

using CircleOrLine = std::variant<Circle, Line, Hyperplane>;

Circle make_circle(Point center, double radius);
Line make_line(Point point, const Point& direction);
/// Perpendicular bisector of [a, b]: a Line in the plane, a Hyperplane otherwise.
CircleOrLine perpendicular_bisector(const Point& a, const Point& b);

bool is_circle(const CircleOrLine& c);
bool is_line(const CircleOrLine& c);

/// Euclidean distance from p to the curve / surface.
double distance_to(const CircleOrLine& c, const Point& p);

/// Point at parameter t on a planar curve: angle for circles, arc length for lines.
Point point_on(const CircleOrLine& c, double t);

/// Cosine of the intersection angle of two planar curves; 0 means orthogonal.
/// For two circles this is (|c1-c2|^2 - r1^2 - r2^2) / (2 r1 r2).
double orthogonality_cosine(const CircleOrLine& a, const CircleOrLine& b);

/// Set equality of two curves, judged on sampled points of each.
bool same_point_set(const CircleOrLine& a, const CircleOrLine& b, double tol);

// ---------------------------------------------------------------------------
// Ratios and inversion.

Complex cross_ratio(Complex a, Complex b, Complex c, Complex d);

/// |a-c||b-d| / (|a-b||c-d|). At most one argument may be the infinity
/// sentinel; the two factors containing it cancel.
double absolute_ratio(const Point& a, const Point& b, const Point& c, const Point& d);

/// x / |x|^2.
Point unit_sphere_inversion(const Point& x);

/// Euclidean distance from the origin to the line through a and b.
double line_distance_to_origin(const Point& a, const Point& b);

/// Sphere through y and z orthogonal to S^{n-1}(x, r). When y and z are
/// antipodal the orthogonal "sphere" is the line through them.
CircleOrLine orthogonal_circle_through(const Point& x, double r, const Point& y, const Point& z);

// ---------------------------------------------------------------------------
// Planar Moebius maps.

/// z -> (a w + b) / (c w + d) with w = z, or w = conj(z) when reverses_orientation.
struct MobiusMap2 {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
  Complex c{0.0, 0.0};
  Complex d{1.0, 0.0};
  bool reverses_orientation = false;
};

MobiusMap2 make_mobius(Complex a, Complex b, Complex c, Complex d, bool reverses_orientation = false);
MobiusMap2 identity_map();
/// z -> e^{i theta} (z - z0) / (1 - conj(z0) z).
MobiusMap2 disk_automorphism(Complex z0, double theta);
/// z -> i (1 + z) / (1 - z), the unit disk onto the upper half-plane.
MobiusMap2 cayley_disk_to_half();
/// compose(t2, t1)(z) == t2(t1(z)).
MobiusMap2 compose(const MobiusMap2& t2, const MobiusMap2& t1);
MobiusMap2 inverse(const MobiusMap2& t);

/// Throws PoleAtInput when |c w + d| < 1e-14.
Complex mobius_apply(const MobiusMap2& t, Complex z);
/// Extended-plane version: poles map to the infinity sentinel and infinity maps to a/c.
Point mobius_apply(const MobiusMap2& t, const Point& z);

// ---------------------------------------------------------------------------
// Geodesic segments, shared by both models.

struct GeodesicSegment {
  CircleOrLine carrier;
  Point x;
  Point y;
  Point ideal_x;  // boundary endpoint on the x side
  Point ideal_y;  // boundary endpoint on the y side
};

// ---------------------------------------------------------------------------
// Planar reduction for n > 2.

/// Orthonormal frame of a 2-plane through `origin`, spanned by e1, e2.
struct PlaneFrame {
  Point origin;
  Point e1;
  Point e2;

  Point to_plane(const Point& p) const;
  Point from_plane(const Point& q) const;
};

/// Frame of a plane through 0 containing x and y.
PlaneFrame frame_through_origin(const Point& x, const Point& y);
/// Vertical frame through x and y for the half-space: e2 is the last axis.
PlaneFrame vertical_frame(const Point& x, const Point& y);

}  // namespace hypgeo
