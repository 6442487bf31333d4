#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>

#include <boost/container/small_vector.hpp>

namespace hypgeo {

/// A point of R^n in model coordinates, or the point at infinity.
///
/// The infinity sentinel carries a dimension but no coordinates; only the
/// ratio functions and half-space boundary code accept it. Arithmetic on it
/// throws DomainError.
class Point {
 public:
  using Storage = boost::container::small_vector<double, 3>;

  Point() = default;
  explicit Point(std::size_t dim);
  Point(std::initializer_list<double> coords);
  explicit Point(std::span<const double> coords);

  static Point infinity(std::size_t dim);
  static Point from_complex(std::complex<double> z);

  std::size_t dim() const noexcept { return dim_; }
  bool is_infinity() const noexcept { return infinite_; }
  bool is_finite() const noexcept;

  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  std::span<const double> coords() const noexcept { return {coords_.data(), coords_.size()}; }

  /// Requires dim() == 2.
  std::complex<double> to_complex() const;

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(double s);
  Point& operator/=(double s);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator-(Point a) { return a *= -1.0; }
  friend Point operator*(Point a, double s) { return a *= s; }
  friend Point operator*(double s, Point a) { return a *= s; }
  friend Point operator/(Point a, double s) { return a /= s; }

  friend bool operator==(const Point& a, const Point& b);

 private:
  Storage coords_;
  std::size_t dim_ = 0;
  bool infinite_ = false;
};

double dot(const Point& a, const Point& b);
double norm2(const Point& a);
double norm(const Point& a);
double dist(const Point& a, const Point& b);
double dist2(const Point& a, const Point& b);

/// 1 - |a|^2 accumulated in extended precision; exact enough near the unit sphere.
double one_minus_norm2(const Point& a);
/// |a|^2 - |b|^2 accumulated in extended precision.
double norm2_difference(const Point& a, const Point& b);

Point basis_vector(std::size_t dim, std::size_t axis);

/// Throws DimensionMismatch unless both points have the same dimension.
void require_same_dim(const Point& a, const Point& b);
/// Throws DomainError for the infinity sentinel or non-finite coordinates.
void require_finite(const Point& a);

}  // namespace hypgeo
