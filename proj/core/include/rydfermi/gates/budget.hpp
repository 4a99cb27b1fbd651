#pragma once

#include <string>
#include <vector>

#include "rydfermi/gates/scenario.hpp"

namespace rydfermi::gates {

struct ErrorBudget {
  double spontaneous_emission = 0.0;
  double blockade_leakage = 0.0;
  double control_rotation = 0.0;
  double nondeterministic_excitation = 0.0;
  std::vector<std::string> notes;

  double total_error() const noexcept {
    return spontaneous_emission + blockade_leakage + control_rotation + nondeterministic_excitation;
  }
  double fidelity() const noexcept { return 1.0 - total_error(); }
};

/// Parallel-gate budget with k = plaquette_size:
///   spontaneous   1/2 (2pi/(2 Omega_Ry) + 2pi/Omega_eff) Gamma_Ry   (angular Omega)
///   leakage       Omega_eff^2 / (4 delta^2)
///   control       1/2 Omega_Ry^2 / (4 delta_r^2)
///   nondeterm.    2^-(k+1) sum_j C(k,j) (j - k/2)^2 V1^2 / Omega_Ry^2
/// delta is the scenario's Raman detuning (default -(V1 - V0)).
ErrorBudget error_budget_parallel(const GateScenario& s);

/// Toffoli budget:
///   spontaneous   2pi/(4 Omega_Ry) Gamma_Ry
///   leakage       E_r1 = 2^-(k+1) sum_{j=1..k} C(k,j) Omega_Ry^2 / (4 j^2 V1^2)
///   control       1/2 Omega_Ry^2 / (4 delta_r^2), noted as negligible below 1e-6
ErrorBudget error_budget_toffoli(const GateScenario& s);

struct RabiOptimum {
  double omega_eff = 0.0;  // MHz
  ErrorBudget budget;
};

/// Raman Rabi frequency minimizing the parallel budget inside [lo, hi] MHz.
RabiOptimum optimal_raman_rabi(const GateScenario& s, double lo, double hi);

}  // namespace rydfermi::gates
