#pragma once

#include <array>
#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "rydfermi/atomic/angular.hpp"
#include "rydfermi/atomic/quantum_defects.hpp"
#include "rydfermi/atomic/radial.hpp"
#include "rydfermi/atomic/superposition.hpp"

namespace rydfermi::atomic {

class WavefunctionCache;

struct Cylindrical {
  double rho = 0.0;
  double phi = 0.0;
  double z = 0.0;
};

struct Spherical {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

Spherical to_spherical(const Cylindrical& p) noexcept;
Cylindrical to_cylindrical(const Spherical& p) noexcept;

struct SpinorValue {
  complex up;
  complex down;
};

/// Gradient components along (e_r, e_theta, e_phi) for each spin projection.
struct SpinorGradient {
  std::array<complex, 3> up{};
  std::array<complex, 3> down{};

  double norm2() const noexcept;
};

struct DensitySample {
  double total = 0.0;
  double spin_up = 0.0;
  double spin_down = 0.0;
};

/// The full two-component wavefunction of a Rydberg superposition: radial
/// functions are solved once per distinct (n, l, j) and kept in memory.
class ElectronCloud {
 public:
  ElectronCloud(RydbergSuperposition state, const QuantumDefectTable& defects,
                std::optional<RadialGrid> grid = std::nullopt, const WavefunctionCache* cache = nullptr);

  SpinorValue amplitude(const Spherical& p) const;
  SpinorGradient gradient(const Spherical& p) const;
  DensitySample density(const Cylindrical& p) const;
  double density_at(const Spherical& p) const;
  double gradient_norm2(const Cylindrical& p) const;

  const RydbergSuperposition& state() const noexcept { return state_; }
  /// sum |c|^2 E_c, atomic units
  double mean_energy() const noexcept;
  /// Effective principal number matching mean_energy().
  double mean_effective_n() const noexcept;
  /// Outermost antinode of the dominant component's radial function.
  double outermost_antinode() const noexcept;
  const RadialWavefunction& radial(std::size_t component) const;
  double max_radius() const noexcept;

 private:
  struct Term {
    complex amplitude;
    SpinorAngularFunction spinor;
    std::shared_ptr<const RadialWavefunction> radial;
  };

  RydbergSuperposition state_;
  std::vector<Term> terms_;
};

DensitySample density(const RydbergSuperposition& state, const Cylindrical& point, const QuantumDefectTable& defects,
                      std::optional<RadialGrid> grid = std::nullopt);

}  // namespace rydfermi::atomic
