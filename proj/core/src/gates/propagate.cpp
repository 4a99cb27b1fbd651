#include "rydfermi/gates/propagate.hpp"

#include <cmath>
#include <complex>

#include <boost/numeric/odeint.hpp>

#include "rydfermi/common/errors.hpp"

namespace rydfermi::gates {

namespace {

void check_square(const Eigen::MatrixXcd& H, Eigen::Index n) {
  if (H.rows() != H.cols() || H.rows() != n) fail(ErrorKind::DimensionMismatch, "Hamiltonian dimension mismatch");
}

void check_normalized(const Eigen::VectorXcd& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-9) fail(ErrorKind::ConfigInvalid, "initial state is not normalized");
}

}  // namespace

Eigen::MatrixXcd segment_unitary(const Eigen::MatrixXcd& H, double t) {
  check_square(H, H.rows());
  const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
  if ((H - H.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    fail(ErrorKind::ConfigInvalid, "Hamiltonian is not hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  if (es.info() != Eigen::Success) fail(ErrorKind::NumericalError, "eigendecomposition failed");
  Eigen::VectorXcd phases(H.rows());
  for (Eigen::Index i = 0; i < H.rows(); ++i) phases(i) = std::polar(1.0, -es.eigenvalues()(i) * t);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::MatrixXcd sequence_unitary(const PulseSequence& seq) {
  if (seq.empty()) fail(ErrorKind::ConfigInvalid, "empty pulse sequence");
  const Eigen::Index n = seq.front().H.rows();
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(n, n);
  for (const auto& s : seq) {
    check_square(s.H, n);
    U = segment_unitary(s.H, s.duration) * U;
  }
  return U;
}

Eigen::VectorXcd propagate(const PulseSequence& seq, const Eigen::VectorXcd& psi0) {
  check_normalized(psi0);
  Eigen::VectorXcd psi = psi0;
  for (const auto& s : seq) {
    check_square(s.H, psi.size());
    psi = segment_unitary(s.H, s.duration) * psi;
  }
  return psi;
}

Eigen::VectorXcd propagate_adaptive(const PulseSequence& seq, const Eigen::VectorXcd& psi0,
                                    const AdaptiveOptions& options) {
  namespace odeint = boost::numeric::odeint;
  using state = std::vector<std::complex<double>>;
  check_normalized(psi0);
  const Eigen::Index n = psi0.size();
  const bool lossy = options.loss.size() > 0;
  if (lossy && options.loss.size() != n) fail(ErrorKind::DimensionMismatch, "loss vector size");

  state x(psi0.data(), psi0.data() + n);
  std::size_t steps = 0;
  for (const auto& s : seq) {
    check_square(s.H, n);
    if (s.duration <= 0) continue;
    Eigen::MatrixXcd A = std::complex<double>(0, -1) * s.H;
    if (lossy) A.diagonal() -= 0.5 * options.loss.cast<std::complex<double>>();
    auto rhs = [&A, n](const state& y, state& dy, double) {
      Eigen::Map<const Eigen::VectorXcd> yv(y.data(), n);
      Eigen::Map<Eigen::VectorXcd> dv(dy.data(), n);
      dv.noalias() = A * yv;
    };
    auto stepper = odeint::make_controlled(options.abs_tol, options.rel_tol, odeint::runge_kutta_dopri5<state>());
    const double rate = std::max(1.0, A.cwiseAbs().rowwise().sum().maxCoeff());
    try {
      odeint::integrate_adaptive(stepper, rhs, x, 0.0, s.duration, 0.1 / rate, [&](const state&, double) {
        if (++steps > options.max_steps)
          throw Error(ErrorKind::IntegratorTolerance, "step budget exhausted in segment " + s.label);
      });
    } catch (const odeint::step_adjustment_error& e) {
      fail(ErrorKind::IntegratorTolerance, e.what());
    }
  }
  Eigen::VectorXcd out = Eigen::Map<const Eigen::VectorXcd>(x.data(), n);
  if (!lossy && std::abs(out.norm() - 1.0) > 1e-9)
    fail(ErrorKind::IntegratorTolerance, "norm drift exceeds 1e-9");
  return out;
}

}  // namespace rydfermi::gates
