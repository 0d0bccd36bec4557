#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hsgeom {

enum class ErrorKind {
  DimensionMismatch,
  NotHermitian,
  NotPositiveDefinite,
  Singular,
  NotSymmetricPair,
  NotInLieAlgebra,
  NotInGroup,
  NotDiagonalUnitary,
  NotOnSphere,
  NotInHalfspace,
  NotInDisk,
  NumericalBreakdown,
  NotReflection,
  ReflectionDrift,
  NotHorizontal,
  InvalidParams,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Raised whenever an input violates a documented invariant. `kind()` names
/// the violated condition so callers (the CLI in particular) can map it to an
/// exit code without parsing the message.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hsgeom
