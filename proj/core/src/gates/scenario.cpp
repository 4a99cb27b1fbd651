#include "rydfermi/gates/scenario.hpp"

#include <cmath>
#include <numbers>

#include "rydfermi/common/errors.hpp"

namespace rydfermi::gates {

double angular(double MHz) noexcept { return 2.0 * std::numbers::pi * MHz; }

void GateScenario::validate() const {
  if (plaquette_size != 3 && plaquette_size != 4 && plaquette_size != 6)
    fail(ErrorKind::ConfigInvalid, "plaquette_size must be 3, 4 or 6");
  for (double x : {V_RF_1, V_RF_0, omega_eff, omega_ry, delta_prime, gamma_ry, delta_r, theta})
    if (!std::isfinite(x)) fail(ErrorKind::ConfigInvalid, "gate scenario values must be finite");
  for (const auto& d : {Delta, delta})
    if (d && !std::isfinite(*d)) fail(ErrorKind::ConfigInvalid, "gate scenario detunings must be finite");
  if (omega_eff < 0 || omega_ry < 0 || gamma_ry < 0 || delta_r < 0)
    fail(ErrorKind::ConfigInvalid, "rates must be >= 0");
}

double GateScenario::raman_detuning() const { return delta.value_or(-(V_RF_1 - V_RF_0)); }

double GateScenario::toffoli_detuning() const { return Delta.value_or(-plaquette_size * V_RF_1); }

}  // namespace rydfermi::gates
