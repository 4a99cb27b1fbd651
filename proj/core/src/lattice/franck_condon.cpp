#include "rydfermi/lattice/franck_condon.hpp"

#include <cmath>
#include <numbers>

#include "rydfermi/common/errors.hpp"
#include "rydfermi/common/quadrature.hpp"

namespace rydfermi::lattice {

namespace {

// polynomial part of the normalized Hermite function: phi_n(t) = h_n(t) exp(-t^2/2)
double hermite_poly(int n, double t) {
  double h0 = std::pow(std::numbers::pi, -0.25);
  if (n == 0) return h0;
  double h1 = std::sqrt(2.0) * t * h0;
  for (int k = 1; k < n; ++k) {
    const double h2 = std::sqrt(2.0 / (k + 1)) * t * h1 - std::sqrt(static_cast<double>(k) / (k + 1)) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

}  // namespace

double franck_condon(const WannierMode& a, const WannierMode& b) {
  if (!(a.sigma_nm > 0.0) || !(b.sigma_nm > 0.0)) fail(ErrorKind::ConfigInvalid, "mode widths must be > 0");
  const double sa2 = a.sigma_nm * a.sigma_nm, sb2 = b.sigma_nm * b.sigma_nm;
  // exp(-(x-ca)^2/2sa^2 - (x-cb)^2/2sb^2) = exp(offset) exp(-A (x - c)^2)
  const double A = 0.5 / sa2 + 0.5 / sb2;
  const double c = (a.center_nm / sa2 + b.center_nm / sb2) / (2.0 * A);
  const double d = a.center_nm - b.center_nm;
  const double offset = -d * d / (2.0 * (sa2 + sb2));
  const auto& rule = gauss_hermite(static_cast<std::size_t>(std::max(8, (a.n + b.n) / 2 + 4)));
  const double scale = 1.0 / std::sqrt(A);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = c + rule.nodes[i] * scale;
    sum += rule.weights[i] * hermite_poly(a.n, (x - a.center_nm) / a.sigma_nm) *
           hermite_poly(b.n, (x - b.center_nm) / b.sigma_nm);
  }
  return std::exp(offset) * scale * sum / std::sqrt(a.sigma_nm * b.sigma_nm);
}

double FranckCondonTable::sum_rule(int qubit) const noexcept {
  double s = 0.0;
  for (double f : qubit == 0 ? f0 : f1) s += f * f;
  return s;
}

namespace {

FranckCondonTable build_table(const WannierMode& q0, const WannierMode& q1, const IntermediateTrap& trap, int n_levels,
                              OverlapConvention convention) {
  FranckCondonTable table;
  table.convention = convention;
  for (int n = 0; n < n_levels; ++n) {
    const auto p = WannierMode::from_frequency(trap.center_nm, trap.omega, q0.mass_amu, n);
    double f0 = franck_condon(q0, p), f1 = franck_condon(q1, p);
    if (convention == OverlapConvention::Magnitude) {
      f0 = std::abs(f0);
      f1 = std::abs(f1);
    }
    table.f0.push_back(f0);
    table.f1.push_back(f1);
    table.effective_F += f0 * f1;
  }
  return table;
}

}  // namespace

FranckCondonTable effective_franck_condon(const WannierMode& qubit0, const WannierMode& qubit1,
                                          const IntermediateTrap& intermediate, int n_levels,
                                          FranckCondonOptions options) {
  if (n_levels < 1) fail(ErrorKind::ConfigInvalid, "n_levels must be >= 1");
  if (!(intermediate.omega > 0.0)) fail(ErrorKind::ConfigInvalid, "intermediate trap frequency must be > 0");
  if (std::abs(qubit0.mass_amu - qubit1.mass_amu) > 1e-9 * qubit0.mass_amu || !(qubit0.mass_amu > 0.0))
    fail(ErrorKind::ConfigInvalid, "qubit modes must share a positive mass");
  FranckCondonTable table = build_table(qubit0, qubit1, intermediate, n_levels, options.convention);
  if (options.cutoff == CutoffPolicy::Converged) {
    const double extended = build_table(qubit0, qubit1, intermediate, n_levels + 5, options.convention).effective_F;
    if (std::abs(extended - table.effective_F) > 0.01 * std::abs(extended))
      fail(ErrorKind::CutoffTooSmall, "F changes from " + std::to_string(table.effective_F) + " to " +
                                          std::to_string(extended) + " with five more levels");
  }
  return table;
}

int default_level_count(double trap_depth, double trap_omega) {
  if (!(trap_depth > 0.0) || !(trap_omega > 0.0)) fail(ErrorKind::ConfigInvalid, "trap depth and frequency must be > 0");
  return static_cast<int>(std::floor(trap_depth / trap_omega));
}

}  // namespace rydfermi::lattice
