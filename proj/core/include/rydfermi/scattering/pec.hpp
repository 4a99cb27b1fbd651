#pragma once

#include <Eigen/Dense>
#include <vector>

#include "rydfermi/atomic/quantum_defects.hpp"
#include "rydfermi/atomic/radial.hpp"
#include "rydfermi/scattering/pseudopotential.hpp"

namespace rydfermi::scattering {

struct PecBasis {
  std::vector<atomic::RydbergLevel> states;  // states[0] is the target
  std::size_t truncation = 64;
};

struct PecBasisOptions {
  atomic::RydbergLevel target;
  /// principal numbers whose high-l (hydrogenic, zero-defect) members join the basis
  std::vector<int> manifold_n;
  int manifold_l_min = 3;
  int manifold_l_max = -1;  // -1: up to n-1
  /// extra (n, l) levels, both j where allowed, e.g. nP and nS neighbours
  std::vector<std::pair<int, int>> neighbours;
  /// m_j values kept for every level (default: the target's m_j)
  std::vector<atomic::HalfInt> mj_values;
  /// drop levels further than this from the target energy (hartree); <= 0 keeps all
  double max_energy_gap = 0.0;
  std::size_t truncation = 64;
};

/// Errors: BasisTooLarge when more states qualify than `truncation`.
PecBasis build_pec_basis(const PecBasisOptions& options, const atomic::QuantumDefectTable& defects);

struct PecOptions {
  PseudopotentialOptions pseudopotential;
  int threads = 1;
};

struct PecResult {
  std::vector<double> separations;   // a.u.
  std::vector<double> unperturbed;   // basis energies, hartree
  Eigen::MatrixXd sorted;            // [separation][k] ascending eigenvalues, hartree
  Eigen::MatrixXd adiabatic;         // same values reordered to follow states by overlap
};

/// Contact-interaction matrix sum_i V_ab(X_i) for ground atoms at absolute
/// positions X_i (a.u.), without the unperturbed energies.
Eigen::MatrixXcd interaction_matrix(const PecBasis& basis, const std::vector<Vec3>& ground_atoms,
                                    const ScatteringModel& model, const atomic::QuantumDefectTable& defects,
                                    PecOptions options = {});

/// Diagonalizes E_a delta_ab + sum_i V_ab(R u_i) at each separation R, where
/// u_i are the ground-atom directions (scaled to unit length) and
///   V_ab(X) = 2 pi tan(d_s)/k psi_a^*(X) psi_b(X) - 6 pi tan(d_p)/k^3 grad psi_a^* . grad psi_b
/// summed over both spin projections, with k taken at the target energy.
PecResult pec(const PecBasis& basis, const std::vector<Vec3>& ground_atom_directions,
              const std::vector<double>& separations, const ScatteringModel& model,
              const atomic::QuantumDefectTable& defects, PecOptions options = {});

}  // namespace rydfermi::scattering
