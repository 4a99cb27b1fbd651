#pragma once

#include <cstddef>
#include <vector>

namespace rydfermi {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule for the weight exp(-x^2) on the real line.
/// Nodes come from the Golub-Welsch eigenproblem; results are memoised.
const QuadratureRule& gauss_hermite(std::size_t order);

/// Gauss-Legendre rule on [-1, 1].
const QuadratureRule& gauss_legendre(std::size_t order);

}  // namespace rydfermi
