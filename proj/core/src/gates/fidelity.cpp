#include "rydfermi/gates/fidelity.hpp"

#include <algorithm>
#include <cmath>

#include "rydfermi/common/errors.hpp"

namespace rydfermi::gates {

namespace {

void check_pair(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows() || a.rows() == 0)
    fail(ErrorKind::DimensionMismatch, "fidelity needs two square matrices of equal size");
}

}  // namespace

double phase_fidelity(const Eigen::MatrixXcd& U_gate, const Eigen::MatrixXcd& U_ideal) {
  check_pair(U_gate, U_ideal);
  const Eigen::MatrixXcd M = U_ideal.adjoint() * U_gate;
  const Eigen::MatrixXcd X = M + M * M.adjoint();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(X);
  const double n = static_cast<double>(U_gate.rows());
  return std::clamp(svd.singularValues().sum() / (2.0 * n), 0.0, 1.0);
}

double population_fidelity(const Eigen::MatrixXcd& U_gate, const Eigen::MatrixXcd& U_ideal) {
  check_pair(U_gate, U_ideal);
  double sum = 0.0;
  for (Eigen::Index b = 0; b < U_gate.cols(); ++b) sum += std::norm(U_ideal.col(b).dot(U_gate.col(b)));
  return std::clamp(sum / static_cast<double>(U_gate.cols()), 0.0, 1.0);
}

FidelityReport compare(const Eigen::MatrixXcd& U_gate, const Eigen::MatrixXcd& U_ideal,
                       const std::vector<std::string>& labels) {
  check_pair(U_gate, U_ideal);
  if (labels.size() != static_cast<std::size_t>(U_gate.cols()))
    fail(ErrorKind::DimensionMismatch, "one label per basis state");
  FidelityReport r;
  r.phase_sensitive = phase_fidelity(U_gate, U_ideal);
  r.population = population_fidelity(U_gate, U_ideal);
  r.worst_case_fidelity = 2.0;
  for (Eigen::Index b = 0; b < U_gate.cols(); ++b) {
    const double f = std::norm(U_ideal.col(b).dot(U_gate.col(b)));
    if (f < r.worst_case_fidelity) {
      r.worst_case_fidelity = f;
      r.worst_case_state = labels[static_cast<std::size_t>(b)];
    }
    r.max_leakage = std::max(r.max_leakage, 1.0 - U_gate.col(b).squaredNorm());
  }
  r.worst_case_fidelity = std::clamp(r.worst_case_fidelity, 0.0, 1.0);
  r.max_leakage = std::max(r.max_leakage, 0.0);
  return r;
}

}  // namespace rydfermi::gates
