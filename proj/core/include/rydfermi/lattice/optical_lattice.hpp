#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rydfermi/atomic/quantum_numbers.hpp"

namespace rydfermi::lattice {

/// Energies in this module are angular frequencies (rad/s, i.e. E/hbar),
/// lengths in nm, masses in amu.
struct LatticeConfig {
  double wavelength_nm = 800.0;
  double depth = 0.0;  // U, rad/s
  double theta = 0.0;  // polarization half-angle, rad
  double mass_amu = 0.0;
  std::string axis = "z";

  static LatticeConfig from_hz(double wavelength_nm, double depth_over_2pi_Hz, double theta, double mass_amu,
                               std::string axis = "z");
  double wavenumber() const noexcept;  // k, 1/nm
  /// D = 2 theta / k
  double displacement_nm() const noexcept;
  /// Throws ConfigInvalid.
  void validate() const;
};

double species_mass_amu(atomic::Species species);

/// V_+(z) = U sin^2(kz + theta), V_-(z) = U sin^2(kz - theta): the intensity
/// lattices of the two circular components. Their minima sit at
/// z = (m pi -+ theta)/k, a relative shift of 2 theta/k.
class SpinDependentPotential {
 public:
  SpinDependentPotential(LatticeConfig config, std::vector<double> z_nm);

  double plus(double z_nm) const noexcept;
  double minus(double z_nm) const noexcept;
  double qubit0(double z_nm) const noexcept;  // (V_+ + 3 V_-)/4
  double qubit1(double z_nm) const noexcept;  // V_+

  const LatticeConfig& config() const noexcept { return config_; }
  const std::vector<double>& z() const noexcept { return z_; }
  const std::vector<double>& v_plus() const noexcept { return v_plus_; }
  const std::vector<double>& v_minus() const noexcept { return v_minus_; }
  const std::vector<double>& v_qubit0() const noexcept { return v_qubit0_; }
  const std::vector<double>& v_qubit1() const noexcept { return v_qubit1_; }
  double displacement_nm() const noexcept { return config_.displacement_nm(); }

  /// CSV header z_nm,V_plus_MHz,V_minus_MHz,V0_MHz,V1_MHz (cyclic MHz)
  std::string to_csv() const;

 private:
  LatticeConfig config_;
  std::vector<double> z_, v_plus_, v_minus_, v_qubit0_, v_qubit1_;
};

/// Errors: ConfigInvalid unless the grid is increasing and spans a full period (lambda/2).
SpinDependentPotential spin_potentials(const LatticeConfig& config, std::vector<double> z_nm);

std::vector<double> uniform_grid(double z_min, double z_max, std::size_t points);

struct WannierMode {
  double center_nm = 0.0;
  double omega = 0.0;     // trap frequency, rad/s
  double sigma_nm = 0.0;  // sqrt(hbar / (m omega))
  int n = 0;
  double mass_amu = 0.0;

  /// Mode with sigma derived from omega.
  static WannierMode from_frequency(double center_nm, double omega, double mass_amu, int n = 0);
};

double oscillator_width_nm(double omega, double mass_amu);
double oscillator_frequency(double sigma_nm, double mass_amu);

struct MinimumSearch {
  double guess_nm = 0.0;
  double half_window_nm = 0.0;  // <= 0: a quarter wavelength
  double tolerance_nm = 1e-4;
};

/// Locates the minimum of V near the guess (Brent), takes V'' by Richardson
/// extrapolated central differences and returns the n = 0 harmonic mode.
/// Errors: NoMinimumFound (minimum on the window edge), NegativeCurvature.
WannierMode harmonic_mode(const std::function<double(double)>& potential, double mass_amu, MinimumSearch search,
                          double wavelength_nm);

/// Convenience: the |1> (V_+) or |0> (composite) mode of the well nearest the guess.
WannierMode qubit_mode(const SpinDependentPotential& potential, int qubit, double guess_nm = 0.0);

}  // namespace rydfermi::lattice
