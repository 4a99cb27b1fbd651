#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "rydfermi/gates/fidelity.hpp"
#include "rydfermi/gates/propagate.hpp"
#include "rydfermi/gates/register.hpp"
#include "rydfermi/gates/scenario.hpp"

namespace rydfermi::gates {

// Gate unitaries are returned on the qubit subspace (central in {0, 1}),
// index = plaquette_bits * 2 + c, dimension 2^(k+1). Columns of a leaky gate
// have norm below one.

/// Ideal operators on that subspace.
Eigen::MatrixXcd ideal_parallel(int k);        // |0><0| x 1 + |1><1| x prod sigma_x
Eigen::MatrixXcd ideal_ck_z(int k);            // -1 on |1...1>|1>
Eigen::MatrixXcd ideal_ck_not(int k);          // central flipped on |1...1>
Eigen::MatrixXcd ideal_stabilizer(int k, double theta);  // exp(i theta prod sigma_z), 2^k square
std::vector<std::string> qubit_labels(int k);
std::vector<std::string> plaquette_labels(int k);

struct ParallelOptions {
  /// Rydberg laser detuning for the control pulses, MHz. Default: the middle
  /// of the shifted Rydberg manifold, -k (V1 + V0) / 2.
  std::optional<double> control_detuning;
  /// Absorb the single-qubit Z frames of the Raman step into virtual Z
  /// rotations (targets before and after, control after).
  bool calibrate = true;
  bool adaptive = false;
};

struct ParallelGateResult {
  Eigen::MatrixXcd unitary;
  PulseSequence sequence;
  FidelityReport report;
  double target_frame_before = 0.0;  // rad, Z on every target before the gate
  double target_frame_after = 0.0;
  double control_frame = 0.0;        // rad, Z on the control after the gate
};

/// Control pi pulse to |r>, Raman pi pulse on the targets, control pi pulse
/// back (laser phase flipped). k from the scenario.
ParallelGateResult parallel_gate(const GateScenario& s, const ParallelOptions& options = {});

/// Same, applied to one qubit-subspace input state.
Eigen::VectorXcd parallel_gate(const GateScenario& s, const Eigen::VectorXcd& psi0,
                               const ParallelOptions& options = {});

/// Target spin-flip probability after a Raman pi pulse with the control in
/// |r>, as a function of the effective detuning delta + V1 (MHz); the peak
/// is at delta + V1 - V0 = 0.
double rotation_probability(const GateScenario& s, double delta_MHz);

struct ToffoliOptions {
  bool hadamard_sandwich = false;  // C_k-NOT instead of C_k-Z
};

struct ToffoliGateResult {
  Eigen::MatrixXcd unitary;
  double duration = 0.0;  // us
  FidelityReport report;
};

/// One generalized 2pi rotation of the central target, duration
/// 2pi / sqrt(Omega^2 + delta'^2) with delta' = Delta + k V1.
ToffoliGateResult toffoli_gate(const GateScenario& s, const ToffoliOptions& options = {});
Eigen::VectorXcd toffoli_gate(const GateScenario& s, const Eigen::VectorXcd& psi0,
                              const ToffoliOptions& options = {});

/// Phase picked up by |1> after a generalized 2pi rotation at offset delta'
/// (any unit shared with omega): pi (1 - delta' / sqrt(omega^2 + delta'^2)).
double detuned_two_pi_phase(double delta_prime, double omega);
/// Inverse for phi in (0, 2pi).
double offset_for_phase(double phi, double omega);
/// Stabilizer phase produced by offset delta': theta = pi/2 (1 + delta'/W).
double stabilizer_theta(double delta_prime, double omega);

enum class AddressedSectors { AllOdd, J1, J3 };

struct DirectOptions {
  AddressedSectors sectors = AddressedSectors::AllOdd;
  /// Largest allowed |delta'| in MHz. Default V1/2, which keeps the laser
  /// nearer the addressed sector than to any other.
  std::optional<double> max_offset;
};

struct DirectStabilizerResult {
  Eigen::MatrixXcd unitary;  // 2^k plaquette block with the auxiliary in |1>
  double delta_prime = 0.0;  // MHz
  double pulse_duration = 0.0;  // us, per addressed sector
  int pulses = 0;
  double auxiliary_return = 1.0;  // min over plaquette inputs of P(aux in |1>)
  FidelityReport report;
};

/// Auxiliary central atom in |1>; one generalized 2pi pulse per addressed odd
/// sector followed by an e^{i theta} phase on the auxiliary.
DirectStabilizerResult stabilizer_phase_direct(const GateScenario& s, double theta,
                                               const DirectOptions& options = {});
Eigen::VectorXcd stabilizer_phase_direct(const GateScenario& s, double theta, const Eigen::VectorXcd& psi0,
                                         const DirectOptions& options = {});

struct ViaParallelOptions {
  bool plaquette_hadamards = true;  // false: only the control gets Hadamards (A_p)
  ParallelOptions parallel;
};

struct ViaParallelResult {
  Eigen::MatrixXcd B;        // H U_g H on the qubit subspace
  Eigen::MatrixXcd unitary;  // B e^{i theta sigma_z^c} B on the qubit subspace
  Eigen::MatrixXcd block;    // plaquette block with the control in |0> in and out
  FidelityReport report;     // block vs exp(i theta prod sigma_z) (or sigma_x)
};

ViaParallelResult stabilizer_via_parallel(const GateScenario& s, double theta,
                                          const ViaParallelOptions& options = {});
Eigen::VectorXcd stabilizer_via_parallel(const GateScenario& s, double theta, const Eigen::VectorXcd& psi0,
                                         const ViaParallelOptions& options = {});

}  // namespace rydfermi::gates
