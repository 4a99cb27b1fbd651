#pragma once

#include <Eigen/Dense>

#include "rydfermi/gates/register.hpp"

namespace rydfermi::gates {

// All rates below are angular (rad/us). The Rabi frequency enters as
// Omega/2 on the off-diagonal, so a resonant pi pulse lasts pi/Omega.

/// Raman drive on the plaquette targets while the central control may sit in
/// its top level (|1> for central_dim 2, |r> for central_dim 3).
struct ParallelDrive {
  double omega_eff = 0.0;
  double delta = 0.0;
  double V1 = 0.0;
  double V0 = 0.0;
};

/// Rydberg laser on the central atom |1> <-> |r>; the Rydberg level is shifted
/// by V1 per plaquette qubit in |1> and V0 per qubit in |0>.
struct RydbergDrive {
  double omega = 0.0;
  double Delta = 0.0;
  double V1 = 0.0;
  double V0 = 0.0;
  double laser_phase = 0.0;
};

/// Throws ConfigInvalid unless the central role is Control.
Eigen::MatrixXcd parallel_hamiltonian(const PlaquetteRegister& reg, const ParallelDrive& drive);

/// Requires central_dim == 3 (DimensionMismatch otherwise).
Eigen::MatrixXcd rydberg_hamiltonian(const PlaquetteRegister& reg, const RydbergDrive& drive);

/// Projector onto a fixed central level.
Eigen::MatrixXcd central_projector(const PlaquetteRegister& reg, int level);
/// Projector onto one plaquette configuration (all central levels).
Eigen::MatrixXcd plaquette_projector(const PlaquetteRegister& reg, std::uint32_t bits);

/// Single-qubit operators embedded in a qubit register of n qubits, qubit 0
/// most significant.
Eigen::MatrixXcd hadamard_all(int n_qubits);
Eigen::MatrixXcd embed_single(const Eigen::Matrix2cd& op, int qubit, int n_qubits);

}  // namespace rydfermi::gates
