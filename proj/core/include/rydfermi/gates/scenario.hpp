#pragma once

#include <optional>
#include <string>

namespace rydfermi::gates {

/// Gate-level inputs. Frequencies are cyclic (MHz, i.e. value/2pi of the
/// angular rate); Gamma_Ry is a population decay rate in 1/us.
struct GateScenario {
  std::string name;
  int plaquette_size = 4;
  double V_RF_1 = 0.0;       // <1|V_RF|1>, MHz
  double V_RF_0 = 0.0;       // <0|V_RF|0>, MHz
  double omega_eff = 0.0;    // Raman Rabi frequency, MHz
  double omega_ry = 0.0;     // Rydberg Rabi frequency, MHz
  std::optional<double> Delta;        // Rydberg laser detuning, MHz
  std::optional<double> delta;        // Raman two-photon detuning, MHz
  double delta_prime = 0.0;  // Rydberg laser offset from the addressed sector, MHz
  double gamma_ry = 0.0;     // Rydberg depopulation rate, 1/us
  double delta_r = 0.0;      // nearest unwanted Rydberg level, MHz
  double theta = 0.0;        // stabilizer phase, rad

  /// Throws ConfigInvalid on negative rates or non-finite values.
  void validate() const;

  /// Defaults used by the protocols when the optional detunings are unset.
  double raman_detuning() const;    // -(V_RF_1 - V_RF_0)
  double toffoli_detuning() const;  // -k V_RF_1
};

/// rad/us for a cyclic frequency in MHz.
double angular(double MHz) noexcept;

}  // namespace rydfermi::gates
