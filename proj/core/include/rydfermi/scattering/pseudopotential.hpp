#pragma once

#include <optional>

#include "rydfermi/atomic/electron_cloud.hpp"
#include "rydfermi/scattering/scattering_model.hpp"

namespace rydfermi::scattering {

/// Cartesian position relative to the Rydberg core, atomic units.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

atomic::Spherical to_spherical(const Vec3& v) noexcept;
Vec3 from_cylindrical(double rho, double phi, double z) noexcept;

/// Energies in hartree; total == s_term + p_term.
struct InteractionSample {
  Vec3 position;
  double s_term = 0.0;
  double p_term = 0.0;
  double total = 0.0;
  ElectronMomentum momentum;
  bool near_resonance = false;
};

double to_MHz(double hartree) noexcept;

struct PseudopotentialOptions {
  bool strict = false;
  double k_min = kDefaultKMin;
};

/// Contact interaction of a Rydberg electron cloud with one ground-state atom:
///   V = 2 pi tan(d_s)/k |psi(R)|^2 - 6 pi tan(d_p)/k^3 |grad psi(R)|^2
/// with k from the amplitude-weighted energy of the superposition.
class FermiPseudopotential {
 public:
  FermiPseudopotential(const atomic::ElectronCloud& cloud, ScatteringModel model, PseudopotentialOptions options = {});

  /// Beyond the radial grid the cloud has decayed and both terms are 0.
  /// Errors: ResonanceSingularity (strict).
  InteractionSample at(const Vec3& R) const;

  const atomic::ElectronCloud& cloud() const noexcept { return cloud_; }
  const ScatteringModel& model() const noexcept { return model_; }
  const PseudopotentialOptions& options() const noexcept { return options_; }

  /// (2 pi tan d_s / k, -6 pi tan d_p / k^3) at distance R from the core.
  std::pair<double, double> couplings(double R, bool* near_resonance = nullptr) const;

 private:
  const atomic::ElectronCloud& cloud_;
  ScatteringModel model_;
  PseudopotentialOptions options_;
  double n_eff_;
};

InteractionSample v_rf(const atomic::RydbergSuperposition& state, const Vec3& R, const ScatteringModel& model,
                       const atomic::QuantumDefectTable& defects,
                       std::optional<atomic::RadialGrid> grid = std::nullopt, PseudopotentialOptions options = {});

/// Anisotropic Gaussian ground-mode density of a trapped atom,
/// prod_i exp(-(x_i - c_i)^2 / s_i^2) / (sqrt(pi) s_i), atomic units.
struct SiteMode {
  Vec3 center;
  double sigma_x = 0.0;
  double sigma_y = 0.0;
  double sigma_z = 0.0;
};

struct SiteAverageOptions {
  std::size_t order = 10;
  double tolerance = 0.01;
};

/// Integral of V over the site density by tensor Gauss-Hermite quadrature.
/// The result at order 2N is returned; Errors: QuadratureNotConverged if it
/// differs from order N by more than tolerance (relative, with a floor of
/// 1e-6 of the largest sampled |V|).
double site_averaged_interaction(const FermiPseudopotential& potential, const SiteMode& mode,
                                 SiteAverageOptions options = {});

}  // namespace rydfermi::scattering
