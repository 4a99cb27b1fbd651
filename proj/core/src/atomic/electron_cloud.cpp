#include "rydfermi/atomic/electron_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "rydfermi/atomic/wavefunction_cache.hpp"
#include "rydfermi/common/errors.hpp"

namespace rydfermi::atomic {
namespace {

// keeps 1/sin(theta) finite on the axis; the limits are finite anyway
constexpr double kPoleGuard = 1e-9;

double guard_theta(double theta) {
  return std::clamp(theta, kPoleGuard, std::numbers::pi - kPoleGuard);
}

}  // namespace

Spherical to_spherical(const Cylindrical& p) noexcept {
  return Spherical{std::hypot(p.rho, p.z), std::atan2(p.rho, p.z), p.phi};
}

Cylindrical to_cylindrical(const Spherical& p) noexcept {
  return Cylindrical{p.r * std::sin(p.theta), p.phi, p.r * std::cos(p.theta)};
}

double SpinorGradient::norm2() const noexcept {
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) sum += std::norm(up[i]) + std::norm(down[i]);
  return sum;
}

ElectronCloud::ElectronCloud(RydbergSuperposition state, const QuantumDefectTable& defects,
                             std::optional<RadialGrid> grid, const WavefunctionCache* cache)
    : state_(std::move(state)) {
  state_.validate();
  std::map<std::tuple<Species, int, int, int>, std::shared_ptr<const RadialWavefunction>> solved;
  for (const auto& c : state_.components) {
    const auto key = std::make_tuple(c.level.species, c.level.n, c.level.l, c.level.j.twice);
    auto it = solved.find(key);
    if (it == solved.end()) {
      const RadialGrid g = grid ? *grid : default_grid(c.level, defects);
      auto wf = cache ? cache->get_or_compute(c.level, defects, g) : radial_wavefunction(c.level, defects, g);
      it = solved.emplace(key, std::make_shared<const RadialWavefunction>(std::move(wf))).first;
    }
    terms_.push_back(Term{c.amplitude, angular_spinor(c.level.l, c.level.j, c.level.mj), it->second});
  }
}

SpinorValue ElectronCloud::amplitude(const Spherical& p) const {
  SpinorValue v{};
  if (!(p.r > 0.0)) return v;
  for (const auto& t : terms_) {
    const double R = t.radial->radial(p.r);
    if (R == 0.0) continue;
    const complex c = t.amplitude * R;
    if (t.spinor.up_coefficient != 0.0)
      v.up += c * t.spinor.up_coefficient * spherical_harmonic(t.spinor.l, t.spinor.up_m, p.theta, p.phi);
    if (t.spinor.down_coefficient != 0.0)
      v.down += c * t.spinor.down_coefficient * spherical_harmonic(t.spinor.l, t.spinor.down_m, p.theta, p.phi);
  }
  return v;
}

SpinorGradient ElectronCloud::gradient(const Spherical& p) const {
  SpinorGradient grad{};
  if (!(p.r > 0.0)) return grad;
  const double theta = guard_theta(p.theta);
  const double sin_theta = std::sin(theta);
  const complex i_unit{0.0, 1.0};
  for (const auto& t : terms_) {
    const double R = t.radial->radial(p.r);
    const double dR = t.radial->radial_derivative(p.r);
    if (R == 0.0 && dR == 0.0) continue;
    const auto add = [&](std::array<complex, 3>& out, double coefficient, int m) {
      if (coefficient == 0.0) return;
      const complex c = t.amplitude * coefficient;
      const complex y = spherical_harmonic(t.spinor.l, m, theta, p.phi);
      const complex dy = spherical_harmonic_dtheta(t.spinor.l, m, theta, p.phi);
      out[0] += c * dR * y;
      out[1] += c * (R / p.r) * dy;
      out[2] += c * (R / (p.r * sin_theta)) * i_unit * static_cast<double>(m) * y;
    };
    add(grad.up, t.spinor.up_coefficient, t.spinor.up_m);
    add(grad.down, t.spinor.down_coefficient, t.spinor.down_m);
  }
  return grad;
}

DensitySample ElectronCloud::density(const Cylindrical& p) const {
  const SpinorValue v = amplitude(to_spherical(p));
  DensitySample d;
  d.spin_up = std::norm(v.up);
  d.spin_down = std::norm(v.down);
  d.total = d.spin_up + d.spin_down;
  return d;
}

double ElectronCloud::density_at(const Spherical& p) const {
  const SpinorValue v = amplitude(p);
  return std::norm(v.up) + std::norm(v.down);
}

double ElectronCloud::gradient_norm2(const Cylindrical& p) const { return gradient(to_spherical(p)).norm2(); }

double ElectronCloud::mean_energy() const noexcept {
  double e = 0.0;
  for (const auto& t : terms_) e += std::norm(t.amplitude) * t.radial->energy();
  return e;
}

double ElectronCloud::mean_effective_n() const noexcept { return std::sqrt(-0.5 / mean_energy()); }

double ElectronCloud::outermost_antinode() const noexcept {
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (std::norm(t.amplitude) > std::norm(best->amplitude)) best = &t;
  return best->radial->outermost_antinode();
}

const RadialWavefunction& ElectronCloud::radial(std::size_t component) const {
  if (component >= terms_.size()) fail(ErrorKind::DimensionMismatch, "component index out of range");
  return *terms_[component].radial;
}

double ElectronCloud::max_radius() const noexcept {
  double r = 0.0;
  for (const auto& t : terms_) r = std::max(r, t.radial->grid().r_max);
  return r;
}

DensitySample density(const RydbergSuperposition& state, const Cylindrical& point, const QuantumDefectTable& defects,
                      std::optional<RadialGrid> grid) {
  return ElectronCloud(state, defects, grid, nullptr).density(point);
}

}  // namespace rydfermi::atomic
