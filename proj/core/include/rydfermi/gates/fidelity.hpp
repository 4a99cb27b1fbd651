#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rydfermi/gates/budget.hpp"

namespace rydfermi::gates {

/// Tr|M + M M^dagger| / (2n) with M = U_ideal^dagger U_gate; |X| = sqrt(X^dagger X).
double phase_fidelity(const Eigen::MatrixXcd& U_gate, const Eigen::MatrixXcd& U_ideal);

/// Mean over basis inputs of |<U_ideal b|U_gate b>|^2.
double population_fidelity(const Eigen::MatrixXcd& U_gate, const Eigen::MatrixXcd& U_ideal);

struct FidelityReport {
  std::string scenario;
  double phase_sensitive = 0.0;
  double population = 0.0;
  std::string worst_case_state;
  double worst_case_fidelity = 0.0;
  double max_leakage = 0.0;  // largest 1 - |U_gate b|^2 over basis inputs
  std::optional<ErrorBudget> budget;
};

/// labels[i] names basis state i (used for the worst case).
FidelityReport compare(const Eigen::MatrixXcd& U_gate, const Eigen::MatrixXcd& U_ideal,
                       const std::vector<std::string>& labels);

}  // namespace rydfermi::gates
