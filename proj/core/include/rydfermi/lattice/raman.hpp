#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "rydfermi/lattice/franck_condon.hpp"

namespace rydfermi::lattice {

/// All rates in rad/s.
struct RamanDrive {
  double omega0 = 0.0;  // single-photon Rabi frequencies
  double omega1 = 0.0;
  double Delta = 0.0;   // one-photon detuning
  double delta = 0.0;   // two-photon detuning
  int n_levels = 1;

  /// Errors: ConfigInvalid for n_levels < 1 or Delta on an intermediate level (j + 1/2) omega_tr.
  void validate(double omega_tr) const;
};

struct EffectiveTwoLevel {
  double omega_eff = 0.0;
  double delta_eff = 0.0;
  /// false when |Delta| < 10 (n_levels + 1/2) omega_tr
  bool valid = true;
  std::string warning;

  /// The off-diagonal element of the reduced Hamiltonian is omega_eff, so a
  /// full transfer takes pi / (2 omega_eff).
  double pi_time() const noexcept;
  /// P(|0> -> |1>) at time t for the reduced model.
  double transfer_probability(double t) const noexcept;
};

enum class Reduction {
  /// one detuning for every level (Delta >> U_tr):
  ///   omega_eff = (omega0 omega1 / 4 Delta) sum_n f_0n f_1n
  ///   delta_eff = delta - sum_n (f_1n^2 omega1^2 - f_0n^2 omega0^2) / (4 Delta)
  ClosedForm,
  /// adiabatic elimination keeping Delta_n = Delta - (n + 1/2) omega_tr in each term
  LevelResolved,
};

EffectiveTwoLevel effective_two_level(const RamanDrive& drive, const FranckCondonTable& table, double omega_tr,
                                      Reduction reduction = Reduction::ClosedForm);

/// delta for which delta_eff vanishes.
double resonant_two_photon_detuning(const RamanDrive& drive, const FranckCondonTable& table, double omega_tr,
                                    Reduction reduction = Reduction::ClosedForm);

/// (n+2)-dimensional RWA matrix in the basis {|0>, |1>, |p>_0 .. |p>_{n-1}}:
/// diag(0, delta, Delta - (j + 1/2) omega_tr), couplings f_ij omega_i / 2.
Eigen::MatrixXd raman_hamiltonian(const RamanDrive& drive, const FranckCondonTable& table, double omega_tr);

/// Amplitudes at each requested time for dC/dt = i H C (the sign used in the
/// coupled equations). H is time independent, so the propagation is exact
/// spectral exponentiation and the norm is conserved to rounding.
/// Errors: ConfigInvalid for a non-normalized or mis-sized psi0, DimensionMismatch.
std::vector<Eigen::VectorXcd> raman_dynamics(const RamanDrive& drive, const FranckCondonTable& table, double omega_tr,
                                             const Eigen::VectorXcd& psi0, const std::vector<double>& times);

}  // namespace rydfermi::lattice
