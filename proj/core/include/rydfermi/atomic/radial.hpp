#pragma once

#include <cstddef>
#include <vector>

#include "rydfermi/atomic/quantum_defects.hpp"
#include "rydfermi/atomic/quantum_numbers.hpp"

namespace rydfermi::atomic {

/// Uniform radial grid, atomic units.
struct RadialGrid {
  double r_min = 0.0;
  double r_max = 0.0;
  double step = 0.0;

  std::size_t size() const noexcept;
  double r(std::size_t i) const noexcept { return r_min + step * static_cast<double>(i); }
  void validate() const;
  bool operator==(const RadialGrid&) const = default;
};

/// A grid that satisfies the solver preconditions for this level.
RadialGrid default_grid(const RydbergLevel& level, const QuantumDefectTable& defects);

/// Smallest grid covering every level in the list (shared-grid overlaps).
RadialGrid common_grid(const std::vector<RydbergLevel>& levels, const QuantumDefectTable& defects);

/// Core potential seen by the valence electron. Parametric l-dependent model
/// potential for the alkalis, bare Coulomb for hydrogen and for levels whose
/// defect is zero (hydrogenic manifolds).
class CorePotential {
 public:
  CorePotential(Species species, int l, bool hydrogenic);
  double operator()(double r) const noexcept;
  bool hydrogenic() const noexcept { return hydrogenic_; }

 private:
  bool hydrogenic_;
  double z_ = 1.0, alpha_c_ = 0.0, a1_ = 0.0, a2_ = 0.0, a3_ = 0.0, a4_ = 0.0, rc_ = 1.0;
};

class RadialWavefunction {
 public:
  RadialWavefunction(RydbergLevel level, RadialGrid grid, double energy, std::vector<double> u);

  const RydbergLevel& level() const noexcept { return level_; }
  const RadialGrid& grid() const noexcept { return grid_; }
  double energy() const noexcept { return energy_; }
  const std::vector<double>& values() const noexcept { return u_; }
  bool norm_checked() const noexcept { return norm_checked_; }

  /// u(r) = r R(r) by 6-point Lagrange interpolation; 0 outside the grid.
  double u(double r) const noexcept;
  /// du/dr from the same interpolant.
  double du(double r) const noexcept;
  /// R(r) and dR/dr.
  double radial(double r) const noexcept;
  double radial_derivative(double r) const noexcept;

  double norm() const noexcept;
  int interior_nodes() const noexcept;
  /// Radius of the last maximum of |u|, atomic units.
  double outermost_antinode() const noexcept;
  /// Radii of the sign changes of u, located on the interpolant.
  std::vector<double> nodes() const;

 private:
  // Returns the stencil start index and fills Lagrange weights for value and derivative.
  std::size_t stencil(double r, double* w, double* dw) const noexcept;

  RydbergLevel level_;
  RadialGrid grid_;
  double energy_;
  std::vector<double> u_;
  bool norm_checked_ = false;
};

/// Inward Numerov integration at the quantum-defect energy.
/// Errors: GridTooCoarse, DivergedIntegration, InvalidQuantumNumbers.
RadialWavefunction radial_wavefunction(const RydbergLevel& level, const QuantumDefectTable& defects,
                                       const RadialGrid& grid);
RadialWavefunction radial_wavefunction(const RydbergLevel& level, const QuantumDefectTable& defects);

/// Throws GridTooCoarse unless the grid reaches 2.5 n^2 and puts >= 20 points
/// on the shortest local wavelength.
void check_sampling(const RydbergLevel& level, const QuantumDefectTable& defects, const RadialGrid& grid);

double overlap(const RadialWavefunction& a, const RadialWavefunction& b);

}  // namespace rydfermi::atomic
