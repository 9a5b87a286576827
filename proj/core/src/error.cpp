#include "permorb/error.hpp"

namespace permorb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotEven: return "NotEven";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::DegenerateLattice: return "DegenerateLattice";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInAmbientGroup: return "NotInAmbientGroup";
    case ErrorKind::NotInDual: return "NotInDual";
    case ErrorKind::NotInLattice: return "NotInLattice";
    case ErrorKind::NonIntegralPairing: return "NonIntegralPairing";
    case ErrorKind::DegeneratePair: return "DegeneratePair";
    case ErrorKind::TableTooLarge: return "TableTooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace permorb
