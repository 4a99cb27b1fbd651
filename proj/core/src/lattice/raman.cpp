#include "rydfermi/lattice/raman.hpp"

#include <cmath>
#include <numbers>

#include "rydfermi/common/errors.hpp"

namespace rydfermi::lattice {

void RamanDrive::validate(double omega_tr) const {
  if (n_levels < 1) fail(ErrorKind::ConfigInvalid, "n_levels must be >= 1");
  for (double x : {omega0, omega1, Delta, delta, omega_tr})
    if (!std::isfinite(x)) fail(ErrorKind::ConfigInvalid, "Raman drive values must be finite");
  for (int j = 0; j < n_levels; ++j)
    if (std::abs(Delta - (j + 0.5) * omega_tr) <= 1e-12 * std::max(std::abs(Delta), omega_tr))
      fail(ErrorKind::ConfigInvalid, "one-photon detuning sits on intermediate level " + std::to_string(j));
}

double EffectiveTwoLevel::pi_time() const noexcept { return std::numbers::pi / (2.0 * std::abs(omega_eff)); }

double EffectiveTwoLevel::transfer_probability(double t) const noexcept {
  const double w2 = omega_eff * omega_eff + 0.25 * delta_eff * delta_eff;
  if (w2 == 0.0) return 0.0;
  const double s = std::sin(std::sqrt(w2) * t);
  return omega_eff * omega_eff / w2 * s * s;
}

namespace {

void check_table(const RamanDrive& drive, const FranckCondonTable& table) {
  if (table.f0.size() != table.f1.size()) fail(ErrorKind::DimensionMismatch, "Franck-Condon table rows differ");
  if (static_cast<std::size_t>(drive.n_levels) > table.n_levels())
    fail(ErrorKind::DimensionMismatch, "drive uses more intermediate levels than the table holds");
}

}  // namespace

namespace {

// (sum_n f_0n f_1n / Delta_n, sum_n (f_1n^2 omega1^2 - f_0n^2 omega0^2) / Delta_n), times Delta for ClosedForm
std::pair<double, double> reduced_sums(const RamanDrive& drive, const FranckCondonTable& table, double omega_tr,
                                       Reduction reduction) {
  double F = 0.0, shift = 0.0;
  for (int n = 0; n < drive.n_levels; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const double Delta_n = reduction == Reduction::ClosedForm ? drive.Delta : drive.Delta - (n + 0.5) * omega_tr;
    F += table.f0[i] * table.f1[i] / Delta_n;
    shift += (table.f1[i] * table.f1[i] * drive.omega1 * drive.omega1 -
              table.f0[i] * table.f0[i] * drive.omega0 * drive.omega0) /
             Delta_n;
  }
  return {F, shift};
}

}  // namespace

EffectiveTwoLevel effective_two_level(const RamanDrive& drive, const FranckCondonTable& table, double omega_tr,
                                      Reduction reduction) {
  drive.validate(omega_tr);
  check_table(drive, table);
  const auto [F, shift] = reduced_sums(drive, table, omega_tr, reduction);
  EffectiveTwoLevel out;
  out.omega_eff = drive.omega0 * drive.omega1 / 4.0 * F;
  out.delta_eff = drive.delta - shift / 4.0;
  if (std::abs(drive.Delta) < 10.0 * (drive.n_levels + 0.5) * omega_tr) {
    out.valid = false;
    out.warning = "one-photon detuning is not large against the intermediate motional ladder";
  }
  return out;
}

double resonant_two_photon_detuning(const RamanDrive& drive, const FranckCondonTable& table, double omega_tr,
                                    Reduction reduction) {
  check_table(drive, table);
  return reduced_sums(drive, table, omega_tr, reduction).second / 4.0;
}

Eigen::MatrixXd raman_hamiltonian(const RamanDrive& drive, const FranckCondonTable& table, double omega_tr) {
  drive.validate(omega_tr);
  check_table(drive, table);
  const Eigen::Index dim = drive.n_levels + 2;
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
  H(1, 1) = drive.delta;
  for (int j = 0; j < drive.n_levels; ++j) {
    const Eigen::Index p = j + 2;
    const auto i = static_cast<std::size_t>(j);
    H(p, p) = drive.Delta - (j + 0.5) * omega_tr;
    H(0, p) = H(p, 0) = table.f0[i] * drive.omega0 / 2.0;
    H(1, p) = H(p, 1) = table.f1[i] * drive.omega1 / 2.0;
  }
  return H;
}

std::vector<Eigen::VectorXcd> raman_dynamics(const RamanDrive& drive, const FranckCondonTable& table, double omega_tr,
                                             const Eigen::VectorXcd& psi0, const std::vector<double>& times) {
  const Eigen::MatrixXd H = raman_hamiltonian(drive, table, omega_tr);
  if (psi0.size() != H.rows()) fail(ErrorKind::DimensionMismatch, "initial state has the wrong dimension");
  if (std::abs(psi0.squaredNorm() - 1.0) > 1e-12) fail(ErrorKind::ConfigInvalid, "initial state is not normalized");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H);
  if (solver.info() != Eigen::Success) fail(ErrorKind::NumericalError, "Raman eigensolver failed");
  const Eigen::MatrixXd& V = solver.eigenvectors();
  const Eigen::VectorXcd coeffs = V.transpose().cast<std::complex<double>>() * psi0;
  std::vector<Eigen::VectorXcd> out;
  out.reserve(times.size());
  for (double t : times) {
    Eigen::VectorXcd c = coeffs;
    for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::polar(1.0, solver.eigenvalues()(k) * t);
    out.push_back(V.cast<std::complex<double>>() * c);
  }
  return out;
}

}  // namespace rydfermi::lattice
