#include "rydfermi/gates/hamiltonian.hpp"

#include <cmath>
#include <complex>

#include "rydfermi/common/errors.hpp"

namespace rydfermi::gates {

Eigen::MatrixXcd parallel_hamiltonian(const PlaquetteRegister& reg, const ParallelDrive& drive) {
  reg.validate();
  if (reg.central_role != CentralRole::Control)
    fail(ErrorKind::ConfigInvalid, "parallel Hamiltonian needs a control at the centre");
  const auto n = static_cast<Eigen::Index>(reg.dimension());
  const int k = reg.plaquette_size;
  const int top = reg.central_dim - 1;
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(n, n);
  for (std::uint32_t b = 0; b < reg.plaquette_states(); ++b) {
    const int ones = popcount(b);
    for (int c = 0; c < reg.central_dim; ++c) {
      const auto i = static_cast<Eigen::Index>(reg.index(b, c));
      double diag = drive.delta * ones;
      if (c == top) diag += drive.V1 * ones + drive.V0 * (k - ones);
      H(i, i) = diag;
      for (int l = 0; l < k; ++l) {
        const std::uint32_t flipped = b ^ (1u << (k - 1 - l));
        H(static_cast<Eigen::Index>(reg.index(flipped, c)), i) = 0.5 * drive.omega_eff;
      }
    }
  }
  return H;
}

Eigen::MatrixXcd rydberg_hamiltonian(const PlaquetteRegister& reg, const RydbergDrive& drive) {
  reg.validate();
  if (reg.central_dim != 3) fail(ErrorKind::DimensionMismatch, "Rydberg drive needs an explicit |r> level");
  const auto n = static_cast<Eigen::Index>(reg.dimension());
  const int k = reg.plaquette_size;
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(n, n);
  const std::complex<double> coupling = 0.5 * drive.omega * std::polar(1.0, drive.laser_phase);
  for (std::uint32_t b = 0; b < reg.plaquette_states(); ++b) {
    const int ones = popcount(b);
    const auto one = static_cast<Eigen::Index>(reg.index(b, 1));
    const auto r = static_cast<Eigen::Index>(reg.index(b, 2));
    H(r, r) = drive.Delta + drive.V1 * ones + drive.V0 * (k - ones);
    H(r, one) = coupling;
    H(one, r) = std::conj(coupling);
  }
  return H;
}

Eigen::MatrixXcd central_projector(const PlaquetteRegister& reg, int level) {
  const auto n = static_cast<Eigen::Index>(reg.dimension());
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(n, n);
  for (std::uint32_t b = 0; b < reg.plaquette_states(); ++b) {
    const auto i = static_cast<Eigen::Index>(reg.index(b, level));
    P(i, i) = 1.0;
  }
  return P;
}

Eigen::MatrixXcd plaquette_projector(const PlaquetteRegister& reg, std::uint32_t bits) {
  const auto n = static_cast<Eigen::Index>(reg.dimension());
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(n, n);
  for (int c = 0; c < reg.central_dim; ++c) {
    const auto i = static_cast<Eigen::Index>(reg.index(bits, c));
    P(i, i) = 1.0;
  }
  return P;
}

Eigen::MatrixXcd embed_single(const Eigen::Matrix2cd& op, int qubit, int n_qubits) {
  const Eigen::Index n = Eigen::Index{1} << n_qubits;
  const int shift = n_qubits - 1 - qubit;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    const int b = static_cast<int>((col >> shift) & 1);
    for (int a = 0; a < 2; ++a) {
      const Eigen::Index row = (col & ~(Eigen::Index{1} << shift)) | (Eigen::Index{a} << shift);
      out(row, col) = op(a, b);
    }
  }
  return out;
}

Eigen::MatrixXcd hadamard_all(int n_qubits) {
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(Eigen::Index{1} << n_qubits, Eigen::Index{1} << n_qubits);
  for (int q = 0; q < n_qubits; ++q) out = embed_single(h, q, n_qubits) * out;
  return out;
}

}  // namespace rydfermi::gates
