#include "rydfermi/common/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "rydfermi/common/errors.hpp"

namespace rydfermi {
namespace {

// Golub-Welsch: the nodes are eigenvalues of the Jacobi matrix, the weights
// mu0 * (first eigenvector component)^2.
QuadratureRule golub_welsch(const Eigen::VectorXd& off_diagonal, double mu0) {
  const auto n = off_diagonal.size() + 1;
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    jacobi(i, i + 1) = off_diagonal(i);
    jacobi(i + 1, i) = off_diagonal(i);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  if (solver.info() != Eigen::Success) fail(ErrorKind::NumericalError, "Golub-Welsch eigensolver failed");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
  }
  return rule;
}

template <typename Builder>
const QuadratureRule& memoised(std::map<std::size_t, QuadratureRule>& table, std::mutex& mutex,
                               std::size_t order, Builder build) {
  if (order == 0) fail(ErrorKind::NumericalError, "quadrature order must be positive");
  std::lock_guard lock(mutex);
  auto it = table.find(order);
  if (it == table.end()) it = table.emplace(order, build(order)).first;
  return it->second;
}

}  // namespace

const QuadratureRule& gauss_hermite(std::size_t order) {
  static std::map<std::size_t, QuadratureRule> table;
  static std::mutex mutex;
  return memoised(table, mutex, order, [](std::size_t n) {
    if (n == 1) return QuadratureRule{{0.0}, {std::sqrt(std::numbers::pi)}};
    Eigen::VectorXd beta(static_cast<Eigen::Index>(n - 1));
    for (std::size_t k = 1; k < n; ++k) beta(static_cast<Eigen::Index>(k - 1)) = std::sqrt(0.5 * static_cast<double>(k));
    return golub_welsch(beta, std::sqrt(std::numbers::pi));
  });
}

const QuadratureRule& gauss_legendre(std::size_t order) {
  static std::map<std::size_t, QuadratureRule> table;
  static std::mutex mutex;
  return memoised(table, mutex, order, [](std::size_t n) {
    if (n == 1) return QuadratureRule{{0.0}, {2.0}};
    Eigen::VectorXd beta(static_cast<Eigen::Index>(n - 1));
    for (std::size_t k = 1; k < n; ++k) {
      const double kk = static_cast<double>(k);
      beta(static_cast<Eigen::Index>(k - 1)) = kk / std::sqrt(4.0 * kk * kk - 1.0);
    }
    return golub_welsch(beta, 2.0);
  });
}

}  // namespace rydfermi
