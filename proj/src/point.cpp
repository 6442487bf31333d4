#include "hypgeo/point.hpp"

#include <cmath>

#include "hypgeo/error.hpp"

namespace hypgeo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PoleAtInput: return "PoleAtInput";
    case ErrorCode::EmptyBoundary: return "EmptyBoundary";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) { throw GeometryError(code, what); }

Point::Point(std::size_t dim) : coords_(dim, 0.0), dim_(dim) {}

Point::Point(std::initializer_list<double> coords)
    : coords_(coords.begin(), coords.end()), dim_(coords.size()) {}

Point::Point(std::span<const double> coords)
    : coords_(coords.begin(), coords.end()), dim_(coords.size()) {}

Point Point::infinity(std::size_t dim) {
  Point p;
  p.dim_ = dim;
  p.infinite_ = true;
  return p;
}

Point Point::from_complex(std::complex<double> z) { return Point{z.real(), z.imag()}; }

bool Point::is_finite() const noexcept {
  if (infinite_) return false;
  for (double c : coords_)
    if (!std::isfinite(c)) return false;
  return true;
}

std::complex<double> Point::to_complex() const {
  if (infinite_ || dim_ != 2) fail(ErrorCode::DimensionMismatch, "complex view needs a finite planar point");
  return {coords_[0], coords_[1]};
}

namespace {

void require_arithmetic(const Point& a, const Point& b) {
  if (a.is_infinity() || b.is_infinity()) fail(ErrorCode::DomainError, "arithmetic on the point at infinity");
  require_same_dim(a, b);
}

}  // namespace

Point& Point::operator+=(const Point& other) {
  require_arithmetic(*this, other);
  for (std::size_t i = 0; i < dim_; ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  require_arithmetic(*this, other);
  for (std::size_t i = 0; i < dim_; ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Point& Point::operator*=(double s) {
  if (infinite_) fail(ErrorCode::DomainError, "arithmetic on the point at infinity");
  for (double& c : coords_) c *= s;
  return *this;
}

Point& Point::operator/=(double s) {
  if (infinite_) fail(ErrorCode::DomainError, "arithmetic on the point at infinity");
  for (double& c : coords_) c /= s;
  return *this;
}

bool operator==(const Point& a, const Point& b) {
  if (a.dim_ != b.dim_ || a.infinite_ != b.infinite_) return false;
  return a.coords_ == b.coords_;
}

double dot(const Point& a, const Point& b) {
  require_arithmetic(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Point& a) { return dot(a, a); }

double norm(const Point& a) {
  if (a.is_infinity()) fail(ErrorCode::DomainError, "norm of the point at infinity");
  double s = 0.0;
  for (double c : a.coords()) s = std::hypot(s, c);
  return s;
}

double dist2(const Point& a, const Point& b) {
  require_arithmetic(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double dist(const Point& a, const Point& b) {
  require_arithmetic(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s = std::hypot(s, a[i] - b[i]);
  return s;
}

double one_minus_norm2(const Point& a) {
  if (a.is_infinity()) fail(ErrorCode::DomainError, "norm of the point at infinity");
  long double s = 0.0L;
  for (double c : a.coords()) s += static_cast<long double>(c) * c;
  return static_cast<double>(1.0L - s);
}

double norm2_difference(const Point& a, const Point& b) {
  require_arithmetic(a, b);
  long double s = 0.0L;
  for (std::size_t i = 0; i < a.dim(); ++i)
    s += static_cast<long double>(a[i]) * a[i] - static_cast<long double>(b[i]) * b[i];
  return static_cast<double>(s);
}

Point basis_vector(std::size_t dim, std::size_t axis) {
  Point e(dim);
  e[axis] = 1.0;
  return e;
}

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "points of different dimension");
}

void require_finite(const Point& a) {
  if (!a.is_finite()) fail(ErrorCode::DomainError, "expected a finite point");
  if (a.dim() < 2) fail(ErrorCode::DimensionMismatch, "points need dimension >= 2");
}

}  // namespace hypgeo
