#include "rydfermi/common/errors.hpp"

namespace rydfermi {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::InvalidQuantumNumbers: return "InvalidQuantumNumbers";
    case ErrorKind::UnsupportedPolarization: return "UnsupportedPolarization";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BasisTooLarge: return "BasisTooLarge";
    case ErrorKind::PhaseUnreachable: return "PhaseUnreachable";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::DivergedIntegration: return "DivergedIntegration";
    case ErrorKind::ResonanceSingularity: return "ResonanceSingularity";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::NoMinimumFound: return "NoMinimumFound";
    case ErrorKind::NegativeCurvature: return "NegativeCurvature";
    case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorKind::IntegratorTolerance: return "IntegratorTolerance";
    case ErrorKind::NumericalError: return "NumericalError";
    case ErrorKind::IoError: return "IoError";
  }
  return "UnknownError";
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ConfigInvalid:
    case ErrorKind::InvalidQuantumNumbers:
    case ErrorKind::UnsupportedPolarization:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::BasisTooLarge:
    case ErrorKind::PhaseUnreachable:
      return 2;
    case ErrorKind::IoError:
      return 4;
    default:
      return 3;
  }
}

}  // namespace rydfermi
