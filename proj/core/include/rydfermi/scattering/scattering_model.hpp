#pragma once

#include <string>
#include <vector>

#include "rydfermi/atomic/quantum_numbers.hpp"

namespace rydfermi::scattering {

inline constexpr double kDefaultKMin = 1e-4;

enum class MomentumRegime { Classical, Clamped };

struct ElectronMomentum {
  double k = kDefaultKMin;
  MomentumRegime regime = MomentumRegime::Clamped;
};

/// k^2/2 = E + 1/R with E = -1/(2 n_eff^2); clamped to k_min once
/// E + 1/R <= k_min^2/2 (beyond the classical turning point).
ElectronMomentum local_momentum(double n_eff, double R, double k_min = kDefaultKMin);

/// Triplet electron-atom phase shifts.
///   tan d_s = -k (a_s + sum_i c_i k^{2(i+1)})
///   tan d_p = p_background k^3 + (k/k_res)^3 (gamma/2) / (E_res - E),  E = k^2/2
/// The resonance is off when p_res_k <= 0.
struct ScatteringModel {
  atomic::Species species = atomic::Species::Rb;
  double a_s = 0.0;
  std::vector<double> s_range_coeffs;
  double p_background = 0.0;
  double p_res_k = 0.0;
  double p_res_gamma = 0.0;

  static ScatteringModel zero(atomic::Species species);
  /// Shipped defaults, see README for their sources.
  static ScatteringModel defaults(atomic::Species species);

  bool has_resonance() const noexcept { return p_res_k > 0.0; }
  /// Throws ConfigInvalid on non-finite values or a negative width.
  void validate() const;
};

struct PhaseShifts {
  double tan_s = 0.0;
  double tan_p = 0.0;
  /// |cos d_p| < 1e-3
  bool near_resonance = false;
};

inline constexpr double kResonanceCosThreshold = 1e-3;

/// Errors: ResonanceSingularity when strict and near_resonance. Otherwise
/// tan d_p is capped at the flag window edge so values stay finite.
PhaseShifts phase_shifts(const ScatteringModel& model, const ElectronMomentum& k, bool strict = false);

}  // namespace rydfermi::scattering
