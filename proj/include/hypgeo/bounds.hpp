#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hypgeo/geom_core.hpp"
#include "hypgeo/halfplane_model.hpp"

namespace hypgeo {

/// The functional of rho that a bound estimates from below.
enum class BoundKind {
  SinhHalf,     // sinh(rho / 2)
  TanhQuarter,  // tanh(rho / 4)
  TanhHalf,     // tanh(rho / 2)
  Cosh,         // cosh(rho)
  Rho,          // rho itself
};

std::string_view to_string(BoundKind kind);
double exact_functional(BoundKind kind, double rho);

struct BoundEntry {
  std::string name;
  BoundKind kind = BoundKind::Rho;
  double bound_value = 0.0;
  double exact_value = 0.0;  // exact_functional(kind, rho)
  double slack = 0.0;        // exact_value - bound_value
  bool applicable = true;
  std::string reason;  // set when not applicable
};

struct BoundReport {
  Point x;
  Point y;
  double rho = 0.0;
  std::vector<BoundEntry> entries;
  /// Half-space reports only: the cosh bound from horizontal separation is
  /// at least as strong as the one from |x - y|, i.e. x_n + y_n <= |x' - y'|.
  bool h2_beats_h1 = false;

  const BoundEntry& at(std::string_view name) const;
  /// Every applicable entry has slack >= -tol.
  bool valid(double tol) const;
  double worst_slack() const;
};

/// Right-hand sides of the scalar inequalities for sqrt((1-r^2)(1-s^2)).
struct ScalarBoundTriple {
  double r = 0.0;
  double s = 0.0;
  double lhs = 0.0;
  double rhs1 = 0.0;        // 1 - rs - (r-s)^2 / (2(1-rs))
  double rhs1_weak = 0.0;   // 1 - ((r+s)/2)^2
  double rhs2 = 0.0;        // sqrt(1+r^2 s^2) - (r^2+s^2) / (2 sqrt(1+r^2 s^2))
  double rhs3 = 0.0;        // 1 + rs - (r+s)^2 / (2(1+rs))
};

ScalarBoundTriple scalar_sqrt_bounds(double r, double s);

/// Entries b1, b2, b2', b3, b4, b4', b5, b6, b7 for x, y in the unit ball.
BoundReport ball_lower_bounds(const Point& x, const Point& y);

/// Lower bound for rho from the symmetrized chord of the carrier (arsinh form).
double chord_bound(const Point& x, const Point& y);
/// The same bound from the apex angle: 4 artanh((r + sqrt(1+r^2)) tan(theta/2)).
double chord_bound_angular(const Point& x, const Point& y);

/// Lower bound for tanh(rho/4) from the smallest Euclidean ball through x, y
/// orthogonal to the carrier. Throws NegativeDiscriminant when the closed form
/// has no real value.
double circumscribed_bound(const Point& x, const Point& y);

/// Lower bound for tanh(rho/2) from the Euclidean radius of the hyperbolic
/// ball about the midpoint.
double midpoint_bound(const Point& x, const Point& y);
/// The same bound in its unrearranged closed form; loses precision as |z| -> 0.
double midpoint_bound_closed_form(const Point& x, const Point& y);

/// Lower bound for sinh(rho/2): |x-y| / (2 sqrt(sqrt(1+r^2) sqrt(r^2-d^2) - r^2)).
double symmetric_chord_bound(const Point& x, const Point& y);

/// ball_lower_bounds plus the chord, circumscribed, midpoint and
/// symmetric-chord entries. Pairs in R^n, n > 2, are reduced to the plane
/// through 0, x, y.
BoundReport ball_bound_report(const Point& x, const Point& y);

/// Entries h1, h2 (cosh), h3, h3' (sinh-half) and the h2_beats_h1 flag.
BoundReport half_lower_bounds(const HalfSpacePoint& x, const HalfSpacePoint& y);

/// The four tanh(rho/4) bounds compared in the ordering c6 <= c5 <= c3 <= c2.
struct RemarkOrdering {
  double c2 = 0.0;
  double c3 = 0.0;
  double c5 = 0.0;
  double c6 = 0.0;

  bool c6_le_c5() const { return c6 <= c5; }
  bool c5_le_c3() const { return c5 <= c3; }
  bool c3_le_c2() const { return c3 <= c2; }
};

RemarkOrdering remark_ordering(const Point& x, const Point& y);

}  // namespace hypgeo
