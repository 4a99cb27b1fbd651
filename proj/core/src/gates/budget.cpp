#include "rydfermi/gates/budget.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/tools/minima.hpp>

#include "rydfermi/common/errors.hpp"

namespace rydfermi::gates {

namespace {

double binom(int n, int k) { return boost::math::binomial_coefficient<double>(static_cast<unsigned>(n), static_cast<unsigned>(k)); }

double control_rotation(const GateScenario& s) {
  if (s.delta_r <= 0) return 0.0;
  return 0.5 * std::pow(s.omega_ry / (2.0 * s.delta_r), 2);
}

}  // namespace

ErrorBudget error_budget_parallel(const GateScenario& s) {
  s.validate();
  if (s.omega_ry <= 0 || s.omega_eff <= 0) fail(ErrorKind::ConfigInvalid, "parallel budget needs omega_ry and omega_eff");
  const int k = s.plaquette_size;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  ErrorBudget b;
  b.spontaneous_emission = 0.5 * (two_pi / (2.0 * angular(s.omega_ry)) + two_pi / angular(s.omega_eff)) * s.gamma_ry;
  const double delta = s.raman_detuning();
  if (delta == 0.0) fail(ErrorKind::ConfigInvalid, "Raman detuning must be nonzero for the leakage term");
  b.blockade_leakage = s.omega_eff * s.omega_eff / (4.0 * delta * delta);
  b.control_rotation = control_rotation(s);
  double sum = 0.0;
  for (int j = 0; j <= k; ++j) sum += binom(k, j) * std::pow(j - 0.5 * k, 2);
  b.nondeterministic_excitation = sum / std::ldexp(1.0, k + 1) * std::pow(s.V_RF_1 / s.omega_ry, 2);
  return b;
}

ErrorBudget error_budget_toffoli(const GateScenario& s) {
  s.validate();
  if (s.omega_ry <= 0 || s.V_RF_1 <= 0) fail(ErrorKind::ConfigInvalid, "Toffoli budget needs omega_ry and V_RF_1");
  const int k = s.plaquette_size;
  ErrorBudget b;
  b.spontaneous_emission = 2.0 * std::numbers::pi / (4.0 * angular(s.omega_ry)) * s.gamma_ry;
  double sum = 0.0;
  for (int j = 1; j <= k; ++j) sum += binom(k, j) / (4.0 * j * j);
  b.blockade_leakage = sum / std::ldexp(1.0, k + 1) * std::pow(s.omega_ry / s.V_RF_1, 2);
  b.control_rotation = control_rotation(s);
  if (b.control_rotation < 1e-6) b.notes.emplace_back("neighbouring Rydberg level term is negligible (< 1e-6)");
  return b;
}

RabiOptimum optimal_raman_rabi(const GateScenario& s, double lo, double hi) {
  if (!(lo > 0 && hi > lo)) fail(ErrorKind::ConfigInvalid, "Rabi search interval must satisfy 0 < lo < hi");
  GateScenario trial = s;
  auto total = [&](double w) {
    trial.omega_eff = w;
    return error_budget_parallel(trial).total_error();
  };
  const auto [w, e] = boost::math::tools::brent_find_minima(total, lo, hi, 40);
  (void)e;
  trial.omega_eff = w;
  return {w, error_budget_parallel(trial)};
}

}  // namespace rydfermi::gates
