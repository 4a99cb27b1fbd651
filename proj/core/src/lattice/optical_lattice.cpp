#include "rydfermi/lattice/optical_lattice.hpp"

#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <sstream>

#include "rydfermi/common/errors.hpp"
#include "rydfermi/common/format.hpp"
#include "rydfermi/common/units.hpp"

namespace rydfermi::lattice {

using units::pi;

LatticeConfig LatticeConfig::from_hz(double wavelength_nm, double depth_over_2pi_Hz, double theta, double mass_amu,
                                     std::string axis) {
  return {wavelength_nm, units::two_pi * depth_over_2pi_Hz, theta, mass_amu, std::move(axis)};
}

double LatticeConfig::wavenumber() const noexcept { return units::two_pi / wavelength_nm; }

double LatticeConfig::displacement_nm() const noexcept { return 2.0 * theta / wavenumber(); }

void LatticeConfig::validate() const {
  if (!(wavelength_nm > 0.0) || !std::isfinite(wavelength_nm)) fail(ErrorKind::ConfigInvalid, "wavelength must be > 0");
  if (!(depth > 0.0) || !std::isfinite(depth)) fail(ErrorKind::ConfigInvalid, "lattice depth must be > 0");
  if (!(theta >= 0.0 && theta < pi / 2)) fail(ErrorKind::ConfigInvalid, "theta must lie in [0, pi/2)");
  if (!(mass_amu > 0.0)) fail(ErrorKind::ConfigInvalid, "mass must be > 0");
}

double species_mass_amu(atomic::Species species) {
  switch (species) {
    case atomic::Species::Rb: return 86.909180531;  // 87Rb
    case atomic::Species::Cs: return 132.905451961;
    case atomic::Species::H: return 1.00782503223;
  }
  return 0.0;
}

SpinDependentPotential::SpinDependentPotential(LatticeConfig config, std::vector<double> z_nm)
    : config_(std::move(config)), z_(std::move(z_nm)) {
  v_plus_.reserve(z_.size());
  for (double z : z_) {
    v_plus_.push_back(plus(z));
    v_minus_.push_back(minus(z));
    v_qubit0_.push_back((v_plus_.back() + 3.0 * v_minus_.back()) / 4.0);
    v_qubit1_.push_back(v_plus_.back());
  }
}

double SpinDependentPotential::plus(double z) const noexcept {
  const double s = std::sin(config_.wavenumber() * z + config_.theta);
  return config_.depth * s * s;
}

double SpinDependentPotential::minus(double z) const noexcept {
  const double s = std::sin(config_.wavenumber() * z - config_.theta);
  return config_.depth * s * s;
}

double SpinDependentPotential::qubit0(double z) const noexcept { return (plus(z) + 3.0 * minus(z)) / 4.0; }

double SpinDependentPotential::qubit1(double z) const noexcept { return plus(z); }

std::string SpinDependentPotential::to_csv() const {
  std::ostringstream out;
  out << "z_nm,V_plus_MHz,V_minus_MHz,V0_MHz,V1_MHz\n";
  const double to_MHz = 1e-6 / units::two_pi;
  for (std::size_t i = 0; i < z_.size(); ++i)
    out << format_double(z_[i]) << ',' << format_double(v_plus_[i] * to_MHz) << ','
        << format_double(v_minus_[i] * to_MHz) << ',' << format_double(v_qubit0_[i] * to_MHz) << ','
        << format_double(v_qubit1_[i] * to_MHz) << '\n';
  return out.str();
}

SpinDependentPotential spin_potentials(const LatticeConfig& config, std::vector<double> z_nm) {
  config.validate();
  if (z_nm.size() < 2) fail(ErrorKind::ConfigInvalid, "potential grid needs at least two points");
  for (std::size_t i = 1; i < z_nm.size(); ++i)
    if (!(z_nm[i] > z_nm[i - 1])) fail(ErrorKind::ConfigInvalid, "potential grid must be increasing");
  if (z_nm.back() - z_nm.front() < config.wavelength_nm / 2.0)
    fail(ErrorKind::ConfigInvalid, "potential grid must span at least one lattice period");
  return SpinDependentPotential(config, std::move(z_nm));
}

std::vector<double> uniform_grid(double z_min, double z_max, std::size_t points) {
  if (points < 2 || !(z_max > z_min)) fail(ErrorKind::ConfigInvalid, "invalid grid request");
  std::vector<double> z(points);
  const double h = (z_max - z_min) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) z[i] = z_min + h * static_cast<double>(i);
  z.back() = z_max;
  return z;
}

double oscillator_width_nm(double omega, double mass_amu) {
  return std::sqrt(units::hbar_SI / (mass_amu * units::amu_kg * omega)) * 1e9;
}

double oscillator_frequency(double sigma_nm, double mass_amu) {
  const double s = sigma_nm * 1e-9;
  return units::hbar_SI / (mass_amu * units::amu_kg * s * s);
}

WannierMode WannierMode::from_frequency(double center_nm, double omega, double mass_amu, int n) {
  if (!(omega > 0.0)) fail(ErrorKind::ConfigInvalid, "trap frequency must be > 0");
  if (n < 0) fail(ErrorKind::ConfigInvalid, "motional index must be >= 0");
  return {center_nm, omega, oscillator_width_nm(omega, mass_amu), n, mass_amu};
}

WannierMode harmonic_mode(const std::function<double(double)>& potential, double mass_amu, MinimumSearch search,
                          double wavelength_nm) {
  const double half = search.half_window_nm > 0.0 ? search.half_window_nm : 0.3 * wavelength_nm;
  const double lo = search.guess_nm - half, hi = search.guess_nm + half;
  // coarse scan picks the basin, Brent polishes inside it
  constexpr int samples = 128;
  const double step = (hi - lo) / samples;
  int best = 0;
  double best_v = potential(lo);
  for (int i = 1; i <= samples; ++i) {
    const double v = potential(lo + step * i);
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  if (best == 0 || best == samples)
    fail(ErrorKind::NoMinimumFound, "no interior minimum within " + std::to_string(half) + " nm of " +
                                        std::to_string(search.guess_nm) + " nm");
  boost::uintmax_t iterations = 200;
  const auto found = boost::math::tools::brent_find_minima(potential, lo + step * (best - 1), lo + step * (best + 1),
                                                           std::numeric_limits<double>::digits / 2, iterations);
  const double z = found.first;
  if (std::abs(z - (lo + step * (best - 1))) < search.tolerance_nm ||
      std::abs(z - (lo + step * (best + 1))) < search.tolerance_nm)
    fail(ErrorKind::NoMinimumFound, "minimum search did not settle inside its bracket");

  // Richardson extrapolation of the central second difference
  constexpr int levels = 5;
  double table[levels][levels];
  double h = wavelength_nm / 100.0;
  const double v0 = potential(z);
  for (int i = 0; i < levels; ++i, h /= 2.0) {
    table[i][0] = (potential(z + h) - 2.0 * v0 + potential(z - h)) / (h * h);
    double factor = 4.0;
    for (int j = 1; j <= i; ++j, factor *= 4.0)
      table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
  }
  const double curvature = table[levels - 1][levels - 1];  // rad/s per nm^2
  if (!(curvature > 0.0)) fail(ErrorKind::NegativeCurvature, "potential curvature at the minimum is not positive");
  // m omega^2 = hbar V''
  const double omega = std::sqrt(units::hbar_SI * curvature * 1e18 / (mass_amu * units::amu_kg));
  return WannierMode::from_frequency(z, omega, mass_amu, 0);
}

WannierMode qubit_mode(const SpinDependentPotential& potential, int qubit, double guess_nm) {
  if (qubit != 0 && qubit != 1) fail(ErrorKind::ConfigInvalid, "qubit must be 0 or 1");
  const auto f = [&potential, qubit](double z) { return qubit == 1 ? potential.qubit1(z) : potential.qubit0(z); };
  return harmonic_mode(f, potential.config().mass_amu, {guess_nm, 0.0, 1e-4}, potential.config().wavelength_nm);
}

}  // namespace rydfermi::lattice
