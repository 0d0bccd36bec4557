#include "hsgeom/errors.hpp"

namespace hsgeom {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotSymmetricPair: return "NotSymmetricPair";
    case ErrorKind::NotInLieAlgebra: return "NotInLieAlgebra";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::NotDiagonalUnitary: return "NotDiagonalUnitary";
    case ErrorKind::NotOnSphere: return "NotOnSphere";
    case ErrorKind::NotInHalfspace: return "NotInHalfspace";
    case ErrorKind::NotInDisk: return "NotInDisk";
    case ErrorKind::NumericalBreakdown: return "NumericalBreakdown";
    case ErrorKind::NotReflection: return "NotReflection";
    case ErrorKind::ReflectionDrift: return "ReflectionDrift";
    case ErrorKind::NotHorizontal: return "NotHorizontal";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hsgeom
