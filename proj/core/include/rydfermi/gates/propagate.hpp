#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rydfermi::gates {

/// Constant Hamiltonian (rad/us) held for `duration` us.
struct PulseSegment {
  Eigen::MatrixXcd H;
  double duration = 0.0;
  std::string label;
};
using PulseSequence = std::vector<PulseSegment>;

/// exp(-i H t) by hermitian eigendecomposition. DimensionMismatch for a
/// non-square H, ConfigInvalid for a non-hermitian one.
Eigen::MatrixXcd segment_unitary(const Eigen::MatrixXcd& H, double t);
Eigen::MatrixXcd sequence_unitary(const PulseSequence& seq);

/// Exact piecewise propagation. psi0 must be normalized to 1e-9.
Eigen::VectorXcd propagate(const PulseSequence& seq, const Eigen::VectorXcd& psi0);

struct AdaptiveOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  std::size_t max_steps = 2'000'000;
  /// Optional per-state population loss rate (1/us), a -i Gamma/2 term on the
  /// diagonal. Off by default; meant for sensitivity studies only.
  Eigen::VectorXd loss;
};

/// Dormand-Prince integration of i dpsi/dt = H psi through the sequence.
/// Throws IntegratorTolerance when the step budget runs out or, without
/// loss, when the norm drifts by more than 1e-9.
Eigen::VectorXcd propagate_adaptive(const PulseSequence& seq, const Eigen::VectorXcd& psi0,
                                    const AdaptiveOptions& options = {});

}  // namespace rydfermi::gates
