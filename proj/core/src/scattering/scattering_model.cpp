#include "rydfermi/scattering/scattering_model.hpp"

#include <cmath>

#include "rydfermi/common/errors.hpp"

namespace rydfermi::scattering {

ElectronMomentum local_momentum(double n_eff, double R, double k_min) {
  if (!(R > 0.0)) fail(ErrorKind::NumericalError, "local_momentum needs R > 0");
  const double kinetic = -0.5 / (n_eff * n_eff) + 1.0 / R;
  if (kinetic <= 0.5 * k_min * k_min) return {k_min, MomentumRegime::Clamped};
  return {std::sqrt(2.0 * kinetic), MomentumRegime::Classical};
}

ScatteringModel ScatteringModel::zero(atomic::Species species) {
  ScatteringModel m;
  m.species = species;
  return m;
}

ScatteringModel ScatteringModel::defaults(atomic::Species species) {
  // zero-energy triplet scattering lengths and representative 3P shape
  // resonances (position and width in the few-meV / tens-of-meV range)
  constexpr double meV = 1.0 / 27211.386245988;
  ScatteringModel m = zero(species);
  switch (species) {
    case atomic::Species::Rb:
      m.a_s = -16.1;
      m.p_res_k = std::sqrt(2.0 * 23.0 * meV);
      m.p_res_gamma = 15.0 * meV;
      break;
    case atomic::Species::Cs:
      m.a_s = -21.7;
      m.p_res_k = std::sqrt(2.0 * 8.0 * meV);
      m.p_res_gamma = 4.0 * meV;
      break;
    case atomic::Species::H:
      break;
  }
  return m;
}

void ScatteringModel::validate() const {
  const auto finite = [](double x, const char* key) {
    if (!std::isfinite(x)) fail(ErrorKind::ConfigInvalid, std::string(key) + " must be finite");
  };
  finite(a_s, "a_s");
  finite(p_background, "p_background");
  finite(p_res_k, "p_res_k");
  finite(p_res_gamma, "p_res_gamma");
  for (double c : s_range_coeffs) finite(c, "s_range_coeffs");
  if (p_res_k < 0.0) fail(ErrorKind::ConfigInvalid, "p_res_k must be >= 0 (0 disables the resonance)");
  if (p_res_gamma < 0.0) fail(ErrorKind::ConfigInvalid, "p_res_gamma must be >= 0");
}

PhaseShifts phase_shifts(const ScatteringModel& model, const ElectronMomentum& momentum, bool strict) {
  const double k = momentum.k;
  const double k2 = k * k;
  PhaseShifts out;

  double effective_length = model.a_s;
  double power = k2;
  for (double c : model.s_range_coeffs) {
    effective_length += c * power;
    power *= k2;
  }
  out.tan_s = -k * effective_length;

  double tan_p = model.p_background * k2 * k;
  if (model.has_resonance()) {
    const double ratio = k / model.p_res_k;
    const double detuning = 0.5 * model.p_res_k * model.p_res_k - 0.5 * k2;
    const double width = ratio * ratio * ratio * 0.5 * model.p_res_gamma;
    tan_p += detuning != 0.0 ? width / detuning : std::copysign(HUGE_VAL, width);
  }
  const double cap = std::sqrt(1.0 / (kResonanceCosThreshold * kResonanceCosThreshold) - 1.0);
  if (!(std::abs(tan_p) < cap)) {
    out.near_resonance = true;
    if (strict)
      fail(ErrorKind::ResonanceSingularity, "p-wave phase shift within the resonance window at k=" + std::to_string(k));
    tan_p = std::isnan(tan_p) ? cap : std::copysign(cap, tan_p);
  }
  out.tan_p = tan_p;
  return out;
}

}  // namespace rydfermi::scattering
