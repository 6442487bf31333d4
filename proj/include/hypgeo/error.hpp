#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypgeo {

enum class ErrorCode {
  DegenerateInput,
  DomainError,
  DimensionMismatch,
  PoleAtInput,
  EmptyBoundary,
  NegativeDiscriminant,
  NoConvergence,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported through this type.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace hypgeo
