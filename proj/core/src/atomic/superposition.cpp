#include "rydfermi/atomic/superposition.hpp"

#include <cmath>

#include "rydfermi/common/errors.hpp"

namespace rydfermi::atomic {

RydbergSuperposition RydbergSuperposition::single(const RydbergLevel& level) {
  level.validate();
  return RydbergSuperposition{{{level, {1.0, 0.0}}}, std::nullopt};
}

double RydbergSuperposition::norm2() const noexcept {
  double sum = 0.0;
  for (const auto& c : components) sum += std::norm(c.amplitude);
  return sum;
}

void RydbergSuperposition::validate() const {
  if (components.empty()) fail(ErrorKind::InvalidQuantumNumbers, "superposition has no components");
  for (const auto& c : components) c.level.validate();
  if (std::abs(norm2() - 1.0) > 1e-12)
    fail(ErrorKind::InvalidQuantumNumbers, "superposition amplitudes are not normalized");
}

TwoPhotonPathways two_photon_pathways(double theta_R, double theta_B) {
  const double sum = theta_R + theta_B;
  const double diff = theta_R - theta_B;
  return TwoPhotonPathways{0.5 * std::polar(1.0, sum), {std::cos(diff), 0.0}, 0.5 * std::polar(1.0, -sum)};
}

RydbergSuperposition superposition_from_polarizations(double theta_R, double theta_B, int n, Species species) {
  const TwoPhotonPathways paths = two_photon_pathways(theta_R, theta_B);
  if (std::abs(paths.zero) > 1e-9)
    fail(ErrorKind::UnsupportedPolarization,
         "theta_R - theta_B must equal pi/2 (mod pi) so the m_j=1/2 transitions cancel");
  const double alpha = theta_R + theta_B;
  const auto d52 = [&](double mj) { return RydbergLevel::make(species, n, 2, 2.5, mj); };
  const auto d32 = RydbergLevel::make(species, n, 2, 1.5, -1.5);
  RydbergSuperposition state;
  state.components = {
      {d52(2.5), std::polar(1.0 / std::sqrt(2.0), alpha)},
      {d52(-1.5), std::polar(0.5, -alpha)},
      {d32, std::polar(0.5, -alpha)},
  };
  state.provenance = PolarizationAngles{theta_R, theta_B};
  return state;
}

}  // namespace rydfermi::atomic
