#include "rydfermi/gates/protocols.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "rydfermi/common/errors.hpp"
#include "rydfermi/gates/hamiltonian.hpp"

namespace rydfermi::gates {

namespace {

constexpr double pi = std::numbers::pi;
using cd = std::complex<double>;

Eigen::MatrixXcd qubit_block(const PlaquetteRegister& reg, const Eigen::MatrixXcd& U) {
  const auto idx = reg.qubit_subspace();
  const auto n = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = U(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)]),
                    static_cast<Eigen::Index>(idx[static_cast<std::size_t>(j)]));
  return out;
}

Eigen::MatrixXcd full_unitary(const PlaquetteRegister& reg, const PulseSequence& seq, bool adaptive) {
  if (!adaptive) return sequence_unitary(seq);
  const auto n = static_cast<Eigen::Index>(reg.dimension());
  Eigen::MatrixXcd U(n, n);
  for (Eigen::Index j = 0; j < n; ++j) U.col(j) = propagate_adaptive(seq, Eigen::VectorXcd::Unit(n, j));
  return U;
}

Eigen::Matrix2cd two_level(double d0, double d1, double omega, double t) {
  Eigen::Matrix2cd h;
  h << d0, 0.5 * omega, 0.5 * omega, d1;
  return segment_unitary(h, t);
}

Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

Eigen::MatrixXcd plaquette_parity_x(int k) {
  const Eigen::Index n = Eigen::Index{1} << k;
  Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index b = 0; b < n; ++b) X(b ^ (n - 1), b) = 1.0;
  return X;
}

void check_state(const Eigen::VectorXcd& psi, Eigen::Index n) {
  if (psi.size() != n) fail(ErrorKind::DimensionMismatch, "state does not match the qubit register");
}

}  // namespace

Eigen::MatrixXcd ideal_parallel(int k) {
  const Eigen::Index n = Eigen::Index{2} << k;
  const Eigen::Index all = (Eigen::Index{1} << k) - 1;
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index b = 0; b <= all; ++b) {
    U(2 * b, 2 * b) = 1.0;
    U(2 * (b ^ all) + 1, 2 * b + 1) = 1.0;
  }
  return U;
}

Eigen::MatrixXcd ideal_ck_z(int k) {
  const Eigen::Index n = Eigen::Index{2} << k;
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(n, n);
  U(n - 1, n - 1) = -1.0;
  return U;
}

Eigen::MatrixXcd ideal_ck_not(int k) {
  const Eigen::Index n = Eigen::Index{2} << k;
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(n, n);
  U(n - 1, n - 1) = 0.0;
  U(n - 2, n - 2) = 0.0;
  U(n - 1, n - 2) = 1.0;
  U(n - 2, n - 1) = 1.0;
  return U;
}

Eigen::MatrixXcd ideal_stabilizer(int k, double theta) {
  const Eigen::Index n = Eigen::Index{1} << k;
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index b = 0; b < n; ++b) {
    const double parity = popcount(static_cast<std::uint32_t>(b)) % 2 == 0 ? 1.0 : -1.0;
    U(b, b) = std::polar(1.0, theta * parity);
  }
  return U;
}

std::vector<std::string> qubit_labels(int k) {
  PlaquetteRegister reg{k, CentralRole::Control, 2};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < reg.dimension(); ++i) out.push_back(reg.label(i));
  return out;
}

std::vector<std::string> plaquette_labels(int k) {
  std::vector<std::string> out;
  for (std::uint32_t b = 0; b < (1u << k); ++b) {
    std::string s;
    for (int l = 0; l < k; ++l) s += static_cast<char>('0' + PlaquetteRegister::bit(b, l, k));
    out.push_back(s);
  }
  return out;
}

ParallelGateResult parallel_gate(const GateScenario& s, const ParallelOptions& options) {
  s.validate();
  if (s.omega_ry <= 0 || s.omega_eff <= 0) fail(ErrorKind::ConfigInvalid, "parallel gate needs omega_ry and omega_eff");
  const int k = s.plaquette_size;
  const PlaquetteRegister reg{k, CentralRole::Control, 3};
  const double W_ry = angular(s.omega_ry);
  const double W_eff = angular(s.omega_eff);
  const double delta = angular(s.raman_detuning());
  const double V1 = angular(s.V_RF_1);
  const double V0 = angular(s.V_RF_0);
  const double Dc = angular(options.control_detuning.value_or(-0.5 * k * (s.V_RF_1 + s.V_RF_0)));

  ParallelGateResult out;
  const double t_ry = pi / W_ry;
  const double t_raman = pi / W_eff;
  out.sequence.push_back({rydberg_hamiltonian(reg, {W_ry, Dc, V1, V0, 0.0}), t_ry, "control up"});
  out.sequence.push_back({parallel_hamiltonian(reg, {W_eff, delta, V1, V0}), t_raman, "raman"});
  out.sequence.push_back({rydberg_hamiltonian(reg, {W_ry, Dc, V1, V0, pi}), t_ry, "control down"});
  Eigen::MatrixXcd Q = qubit_block(reg, full_unitary(reg, out.sequence, options.adaptive));

  if (options.calibrate) {
    // single-target propagators in the two control sectors of the Raman step
    const Eigen::Matrix2cd u0 = two_level(0.0, delta, W_eff, t_raman);
    const Eigen::Matrix2cd u1 = two_level(V0, delta + V1, W_eff, t_raman);
    const double sum = std::arg(u0(0, 0) / u0(1, 1));
    const double diff = std::arg(u1(1, 0) / u1(0, 1));
    out.target_frame_before = 0.5 * (sum + diff);
    out.target_frame_after = 0.5 * (sum - diff);
    const double phase0 = k * std::arg(u0(0, 0));
    const double phase1 = k * std::arg(u1(0, 1) * std::polar(1.0, out.target_frame_before));
    out.control_frame = phase0 - phase1;
    Eigen::VectorXcd pre(Q.rows()), post(Q.rows());
    for (Eigen::Index i = 0; i < Q.rows(); ++i) {
      const int ones = popcount(static_cast<std::uint32_t>(i / 2));
      pre(i) = std::polar(1.0, ones * out.target_frame_before);
      post(i) = std::polar(1.0, ones * out.target_frame_after - phase0 + (i % 2 == 1 ? out.control_frame : 0.0));
    }
    Q = post.asDiagonal() * Q * pre.asDiagonal();
  }
  out.unitary = Q;
  out.report = compare(Q, ideal_parallel(k), qubit_labels(k));
  out.report.scenario = s.name;
  return out;
}

Eigen::VectorXcd parallel_gate(const GateScenario& s, const Eigen::VectorXcd& psi0, const ParallelOptions& options) {
  check_state(psi0, Eigen::Index{2} << s.plaquette_size);
  return parallel_gate(s, options).unitary * psi0;
}

double rotation_probability(const GateScenario& s, double delta_MHz) {
  if (s.omega_eff <= 0) fail(ErrorKind::ConfigInvalid, "omega_eff must be positive");
  const double W = angular(s.omega_eff);
  const Eigen::Matrix2cd u = two_level(angular(s.V_RF_0), angular(delta_MHz + s.V_RF_1), W, pi / W);
  return std::norm(u(1, 0));
}

ToffoliGateResult toffoli_gate(const GateScenario& s, const ToffoliOptions& options) {
  s.validate();
  if (s.omega_ry <= 0) fail(ErrorKind::ConfigInvalid, "Toffoli gate needs omega_ry");
  const int k = s.plaquette_size;
  const PlaquetteRegister reg{k, CentralRole::Target, 3};
  const double W = angular(s.omega_ry);
  const double Delta = angular(s.toffoli_detuning());
  const double offset = Delta + k * angular(s.V_RF_1);
  ToffoliGateResult out;
  out.duration = 2.0 * pi / std::hypot(W, offset);
  const Eigen::MatrixXcd H = rydberg_hamiltonian(reg, {W, Delta, angular(s.V_RF_1), angular(s.V_RF_0), 0.0});
  Eigen::MatrixXcd Q = qubit_block(reg, segment_unitary(H, out.duration));
  if (options.hadamard_sandwich) {
    const Eigen::MatrixXcd Hc = embed_single(hadamard(), k, k + 1);
    Q = Hc * Q * Hc;
  }
  out.unitary = Q;
  out.report = compare(Q, options.hadamard_sandwich ? ideal_ck_not(k) : ideal_ck_z(k), qubit_labels(k));
  out.report.scenario = s.name;
  return out;
}

Eigen::VectorXcd toffoli_gate(const GateScenario& s, const Eigen::VectorXcd& psi0, const ToffoliOptions& options) {
  check_state(psi0, Eigen::Index{2} << s.plaquette_size);
  return toffoli_gate(s, options).unitary * psi0;
}

double detuned_two_pi_phase(double delta_prime, double omega) {
  return pi * (1.0 - delta_prime / std::hypot(omega, delta_prime));
}

double offset_for_phase(double phi, double omega) {
  if (!(phi > 0.0 && phi < 2.0 * pi)) fail(ErrorKind::PhaseUnreachable, "a 2pi rotation only reaches phases in (0, 2pi)");
  const double s = 1.0 - phi / pi;
  return omega * s / std::sqrt(1.0 - s * s);
}

double stabilizer_theta(double delta_prime, double omega) {
  return 0.5 * pi * (1.0 + delta_prime / std::hypot(omega, delta_prime));
}

DirectStabilizerResult stabilizer_phase_direct(const GateScenario& s, double theta, const DirectOptions& options) {
  s.validate();
  if (s.omega_ry <= 0 || s.V_RF_1 <= 0) fail(ErrorKind::ConfigInvalid, "direct stabilizer needs omega_ry and V_RF_1");
  if (!std::isfinite(theta)) fail(ErrorKind::ConfigInvalid, "theta must be finite");
  const int k = s.plaquette_size;
  const PlaquetteRegister reg{k, CentralRole::Auxiliary, 3};
  const auto n = static_cast<Eigen::Index>(reg.dimension());
  DirectStabilizerResult out;

  const double reduced = theta - pi * std::floor(theta / pi);
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(n, n);
  if (reduced > 1e-12 && pi - reduced > 1e-12) {
    out.delta_prime = offset_for_phase(2.0 * pi - 2.0 * reduced, s.omega_ry);
    const double limit = options.max_offset.value_or(0.5 * s.V_RF_1);
    if (std::abs(out.delta_prime) > limit)
      fail(ErrorKind::PhaseUnreachable, "theta needs |delta'| beyond the allowed laser offset for this omega_ry");
    std::vector<int> sectors;
    switch (options.sectors) {
      case AddressedSectors::AllOdd:
        for (int j = 1; j <= k; j += 2) sectors.push_back(j);
        break;
      case AddressedSectors::J1: sectors.push_back(1); break;
      case AddressedSectors::J3: sectors.push_back(3); break;
    }
    const double W = angular(s.omega_ry);
    out.pulse_duration = 1.0 / std::hypot(s.omega_ry, out.delta_prime);  // 2pi / (2pi * MHz)
    PulseSequence seq;
    for (int j : sectors) {
      const double Delta = out.delta_prime - j * s.V_RF_1 - (k - j) * s.V_RF_0;
      seq.push_back({rydberg_hamiltonian(reg, {W, angular(Delta), angular(s.V_RF_1), angular(s.V_RF_0), 0.0}),
                     out.pulse_duration, "sector " + std::to_string(j)});
    }
    out.pulses = static_cast<int>(seq.size());
    U = sequence_unitary(seq);
  }

  const Eigen::Index m = Eigen::Index{1} << k;
  const cd stark = std::polar(1.0, theta);
  out.unitary.resize(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      out.unitary(i, j) = stark * U(static_cast<Eigen::Index>(reg.index(static_cast<std::uint32_t>(i), 1)),
                                    static_cast<Eigen::Index>(reg.index(static_cast<std::uint32_t>(j), 1)));
  for (Eigen::Index j = 0; j < m; ++j) out.auxiliary_return = std::min(out.auxiliary_return, out.unitary.col(j).squaredNorm());
  out.report = compare(out.unitary, ideal_stabilizer(k, theta), plaquette_labels(k));
  out.report.scenario = s.name;
  return out;
}

Eigen::VectorXcd stabilizer_phase_direct(const GateScenario& s, double theta, const Eigen::VectorXcd& psi0,
                                         const DirectOptions& options) {
  check_state(psi0, Eigen::Index{1} << s.plaquette_size);
  return stabilizer_phase_direct(s, theta, options).unitary * psi0;
}

ViaParallelResult stabilizer_via_parallel(const GateScenario& s, double theta, const ViaParallelOptions& options) {
  if (!std::isfinite(theta)) fail(ErrorKind::ConfigInvalid, "theta must be finite");
  const int k = s.plaquette_size;
  const Eigen::MatrixXcd Ug = parallel_gate(s, options.parallel).unitary;
  const Eigen::MatrixXcd Had =
      options.plaquette_hadamards ? hadamard_all(k + 1) : embed_single(hadamard(), k, k + 1);
  ViaParallelResult out;
  out.B = Had * Ug * Had;
  Eigen::VectorXcd z(Ug.rows());
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = std::polar(1.0, i % 2 == 0 ? theta : -theta);
  // B is its own inverse, so the same pulse sequence undoes it
  out.unitary = out.B * z.asDiagonal() * out.B;
  const Eigen::Index m = Eigen::Index{1} << k;
  out.block.resize(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) out.block(i, j) = out.unitary(2 * i, 2 * j);
  Eigen::MatrixXcd ideal;
  if (options.plaquette_hadamards) {
    ideal = ideal_stabilizer(k, theta);
  } else {
    ideal = std::cos(theta) * Eigen::MatrixXcd::Identity(m, m) + cd(0, std::sin(theta)) * plaquette_parity_x(k);
  }
  out.report = compare(out.block, ideal, plaquette_labels(k));
  out.report.scenario = s.name;
  return out;
}

Eigen::VectorXcd stabilizer_via_parallel(const GateScenario& s, double theta, const Eigen::VectorXcd& psi0,
                                         const ViaParallelOptions& options) {
  check_state(psi0, Eigen::Index{2} << s.plaquette_size);
  return stabilizer_via_parallel(s, theta, options).unitary * psi0;
}

}  // namespace rydfermi::gates
