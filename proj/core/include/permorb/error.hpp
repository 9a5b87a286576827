#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permorb {

enum class ErrorKind {
  NotSymmetric,
  NotEven,
  NotPositiveDefinite,
  DegenerateLattice,
  DimensionMismatch,
  NotInAmbientGroup,
  NotInDual,
  NotInLattice,
  NonIntegralPairing,
  DegeneratePair,
  TableTooLarge,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace permorb
