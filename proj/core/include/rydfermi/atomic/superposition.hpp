#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "rydfermi/atomic/quantum_numbers.hpp"

namespace rydfermi::atomic {

struct SuperpositionComponent {
  RydbergLevel level;
  std::complex<double> amplitude;
};

struct PolarizationAngles {
  double theta_R = 0.0;
  double theta_B = 0.0;
};

struct RydbergSuperposition {
  std::vector<SuperpositionComponent> components;
  std::optional<PolarizationAngles> provenance;

  static RydbergSuperposition single(const RydbergLevel& level);
  double norm2() const noexcept;
  /// Throws InvalidQuantumNumbers if any level is invalid or the norm is off by > 1e-12.
  void validate() const;
};

/// Amplitudes of the three two-photon paths when each linearly polarized
/// field is written as (e^{i theta} sigma+ + e^{-i theta} sigma-)/sqrt(2):
/// Delta m = +2, 0 (both mixed orderings summed), -2.
struct TwoPhotonPathways {
  std::complex<double> plus_two;
  std::complex<double> zero;
  std::complex<double> minus_two;
};

TwoPhotonPathways two_photon_pathways(double theta_R, double theta_B);

/// The nD superposition excited from m_j = 1/2 when the Delta m = 0 paths
/// interfere destructively (theta_R - theta_B = pi/2 mod pi):
///   e^{i a}|nD5/2,5/2>/sqrt2 + e^{-i a}(|nD5/2,-3/2> + |nD3/2,-3/2>)/2,  a = theta_R + theta_B.
/// Errors: UnsupportedPolarization away from that condition (tolerance 1e-9).
RydbergSuperposition superposition_from_polarizations(double theta_R, double theta_B, int n,
                                                      Species species = Species::Rb);

}  // namespace rydfermi::atomic
