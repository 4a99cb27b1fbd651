#include "rydfermi/scattering/pseudopotential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rydfermi/common/errors.hpp"
#include "rydfermi/common/quadrature.hpp"
#include "rydfermi/common/units.hpp"

namespace rydfermi::scattering {

atomic::Spherical to_spherical(const Vec3& v) noexcept {
  const double rho = std::hypot(v.x, v.y);
  return {std::hypot(rho, v.z), std::atan2(rho, v.z), std::atan2(v.y, v.x)};
}

Vec3 from_cylindrical(double rho, double phi, double z) noexcept {
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

double to_MHz(double hartree) noexcept { return units::hartree_to_MHz(hartree); }

FermiPseudopotential::FermiPseudopotential(const atomic::ElectronCloud& cloud, ScatteringModel model,
                                           PseudopotentialOptions options)
    : cloud_(cloud), model_(std::move(model)), options_(options), n_eff_(cloud.mean_effective_n()) {
  model_.validate();
}

std::pair<double, double> FermiPseudopotential::couplings(double R, bool* near_resonance) const {
  const ElectronMomentum k = local_momentum(n_eff_, R, options_.k_min);
  const PhaseShifts shifts = phase_shifts(model_, k, options_.strict);
  if (near_resonance) *near_resonance = shifts.near_resonance;
  const double pi = std::numbers::pi;
  return {2.0 * pi * shifts.tan_s / k.k, -6.0 * pi * shifts.tan_p / (k.k * k.k * k.k)};
}

InteractionSample FermiPseudopotential::at(const Vec3& R) const {
  const atomic::Spherical p = to_spherical(R);
  InteractionSample out;
  out.position = R;
  if (!(p.r > 0.0)) fail(ErrorKind::NumericalError, "v_rf is undefined at the core");
  out.momentum = local_momentum(n_eff_, p.r, options_.k_min);
  const auto [s_coupling, p_coupling] = couplings(p.r, &out.near_resonance);
  const double density = cloud_.density_at(p);
  out.s_term = s_coupling * density;
  out.p_term = p_coupling != 0.0 ? p_coupling * cloud_.gradient(p).norm2() : 0.0;
  out.total = out.s_term + out.p_term;
  return out;
}

InteractionSample v_rf(const atomic::RydbergSuperposition& state, const Vec3& R, const ScatteringModel& model,
                       const atomic::QuantumDefectTable& defects, std::optional<atomic::RadialGrid> grid,
                       PseudopotentialOptions options) {
  const atomic::ElectronCloud cloud(state, defects, grid);
  return FermiPseudopotential(cloud, model, options).at(R);
}

namespace {

struct QuadratureResult {
  double value;
  double max_abs;
};

QuadratureResult gauss_hermite_average(const FermiPseudopotential& potential, const SiteMode& mode,
                                       std::size_t order) {
  const QuadratureRule& rule = gauss_hermite(order);
  const double norm = 1.0 / std::sqrt(std::numbers::pi);
  double sum = 0.0;
  double max_abs = 0.0;
  for (std::size_t i = 0; i < order; ++i) {
    const double x = mode.center.x + mode.sigma_x * rule.nodes[i];
    for (std::size_t j = 0; j < order; ++j) {
      const double y = mode.center.y + mode.sigma_y * rule.nodes[j];
      const double wij = rule.weights[i] * rule.weights[j];
      for (std::size_t k = 0; k < order; ++k) {
        const double z = mode.center.z + mode.sigma_z * rule.nodes[k];
        const double v = potential.at({x, y, z}).total;
        sum += wij * rule.weights[k] * v;
        max_abs = std::max(max_abs, std::abs(v));
      }
    }
  }
  return {sum * norm * norm * norm, max_abs};
}

}  // namespace

double site_averaged_interaction(const FermiPseudopotential& potential, const SiteMode& mode,
                                 SiteAverageOptions options) {
  if (!(mode.sigma_x > 0.0) || !(mode.sigma_y > 0.0) || !(mode.sigma_z > 0.0))
    fail(ErrorKind::ConfigInvalid, "site mode widths must be positive");
  if (options.order < 1) fail(ErrorKind::ConfigInvalid, "quadrature order must be positive");
  const QuadratureResult coarse = gauss_hermite_average(potential, mode, options.order);
  const QuadratureResult fine = gauss_hermite_average(potential, mode, 2 * options.order);
  const double change = std::abs(fine.value - coarse.value);
  const double floor = 1e-6 * std::max(coarse.max_abs, fine.max_abs);
  if (change > options.tolerance * std::abs(fine.value) + floor)
    fail(ErrorKind::QuadratureNotConverged,
         "site average changed by " + std::to_string(change / std::max(std::abs(fine.value), 1e-300) * 100.0) +
             "% when doubling the Gauss-Hermite order " + std::to_string(options.order));
  return fine.value;
}

}  // namespace rydfermi::scattering
