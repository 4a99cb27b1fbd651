#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rydfermi {

/// Every failure the library reports carries one of these kinds. The CLI
/// maps them onto exit codes (see exit_code()).
enum class ErrorKind {
  // configuration / input contracts
  ConfigInvalid,
  InvalidQuantumNumbers,
  UnsupportedPolarization,
  DimensionMismatch,
  BasisTooLarge,
  PhaseUnreachable,
  // numerical
  GridTooCoarse,
  DivergedIntegration,
  ResonanceSingularity,
  QuadratureNotConverged,
  NoMinimumFound,
  NegativeCurvature,
  CutoffTooSmall,
  IntegratorTolerance,
  NumericalError,
  // environment
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// 2 for configuration errors, 3 for numerical errors, 4 for I/O.
int exit_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace rydfermi
