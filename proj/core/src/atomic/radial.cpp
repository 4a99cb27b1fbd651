#include "rydfermi/atomic/radial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "rydfermi/common/errors.hpp"

namespace rydfermi::atomic {
namespace {

struct ModelParameters {
  double a1, a2, a3, a4, rc;
};

// l = 0, 1, 2, >=3
constexpr std::array<ModelParameters, 4> kRbModel{{
    {3.69628474, 1.64915255, -9.86069196, 0.19579987, 1.66242117},
    {4.44088978, 1.92828831, -16.79597770, -0.81633314, 1.50195124},
    {3.78717363, 1.57027864, -11.65588970, 0.52942835, 4.86851938},
    {2.39848933, 1.76810544, -12.07106780, 0.77256589, 4.79831327},
}};
constexpr std::array<ModelParameters, 4> kCsModel{{
    {3.49546309, 1.47533800, -9.72143084, 0.02629242, 1.92046930},
    {4.69366096, 1.71398344, -24.65624280, -0.09543125, 2.13383095},
    {4.32466196, 1.61365288, -6.70128850, -0.74095193, 0.93007296},
    {3.01048361, 1.40000001, -3.20036138, 0.00034538, 1.99969677},
}};

constexpr double kRbZ = 37.0, kRbAlpha = 9.0760;
constexpr double kCsZ = 55.0, kCsAlpha = 15.6440;

constexpr double kAlkaliRmin = 0.05;
// deep-penetrating Cs s orbitals keep their innermost node below 0.05
constexpr double kCsSRmin = 0.01;
constexpr double kAlkaliMaxStep = 0.005;
constexpr int kMinPointsPerWavelength = 20;
constexpr double kRescaleLimit = 1e200;

bool uses_coulomb(const RydbergLevel& level, const QuantumDefectTable& defects) {
  return level.species == Species::H || defects.defect(level) == 0.0;
}

double outer_radius(int n) { return 3.0 * n * n + 30.0 * n + 30.0; }

// g(r) in u'' = g u
std::vector<double> numerov_g(const RydbergLevel& level, const CorePotential& potential, double energy,
                              const RadialGrid& grid) {
  const std::size_t count = grid.size();
  std::vector<double> g(count);
  const double ll = static_cast<double>(level.l) * (level.l + 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double r = grid.r(i);
    g[i] = 2.0 * (potential(r) - energy) + ll / (r * r);
  }
  return g;
}

void check_sampling_g(const RydbergLevel& level, const RadialGrid& grid, const std::vector<double>& g) {
  if (grid.r_max < 2.5 * level.n * level.n)
    fail(ErrorKind::GridTooCoarse, "r_max=" + std::to_string(grid.r_max) + " is below 2.5 n^2 for " + to_string(level));
  double k_max = 0.0;
  for (double gi : g)
    if (gi < 0.0) k_max = std::max(k_max, std::sqrt(-gi));
  if (k_max > 0.0) {
    const double wavelength = 2.0 * std::numbers::pi / k_max;
    if (grid.step > wavelength / kMinPointsPerWavelength)
      fail(ErrorKind::GridTooCoarse, "step=" + std::to_string(grid.step) + " exceeds 1/" +
                                         std::to_string(kMinPointsPerWavelength) +
                                         " of the shortest local wavelength " + std::to_string(wavelength));
  }
  if (level.n >= 30 && (grid.r_max - grid.r_min) / grid.step < 1e3)
    fail(ErrorKind::GridTooCoarse, "fewer than 1000 grid intervals");
}

double trapezoid_norm(const std::vector<double>& u, double h) {
  if (u.size() < 2) return 0.0;
  double sum = 0.5 * (u.front() * u.front() + u.back() * u.back());
  for (std::size_t i = 1; i + 1 < u.size(); ++i) sum += u[i] * u[i];
  return sum * h;
}

}  // namespace

std::size_t RadialGrid::size() const noexcept {
  if (!(step > 0.0) || !(r_max > r_min)) return 0;
  return static_cast<std::size_t>(std::floor((r_max - r_min) / step + 1e-9)) + 1;
}

void RadialGrid::validate() const {
  if (!(r_min > 0.0) || !(r_max > r_min) || !(step > 0.0) || !std::isfinite(r_max))
    fail(ErrorKind::GridTooCoarse, "radial grid must satisfy 0 < r_min < r_max and step > 0");
  if (size() < 8) fail(ErrorKind::GridTooCoarse, "radial grid has fewer than 8 points");
}

RadialGrid default_grid(const RydbergLevel& level, const QuantumDefectTable& defects) {
  if (uses_coulomb(level, defects)) {
    const double step = std::min(0.01, 2e-4 * level.n);
    return RadialGrid{step, outer_radius(level.n), step};
  }
  const double r_min = (level.species == Species::Cs && level.l == 0) ? kCsSRmin : kAlkaliRmin;
  // the shortest local wavelength sits in the core, so probe only there
  const CorePotential potential(level.species, level.l, false);
  const double ll = static_cast<double>(level.l) * (level.l + 1);
  const double energy = level_energy(level, defects);
  double k_max = 0.0;
  for (double r = r_min; r < 10.0; r += 1e-3) {
    const double g = 2.0 * (potential(r) - energy) + ll / (r * r);
    if (g < 0.0) k_max = std::max(k_max, std::sqrt(-g));
  }
  double step = kAlkaliMaxStep;
  if (k_max > 0.0) step = std::min(step, 2.0 * std::numbers::pi / k_max / (1.25 * kMinPointsPerWavelength));
  return RadialGrid{r_min, outer_radius(level.n), step};
}

RadialGrid common_grid(const std::vector<RydbergLevel>& levels, const QuantumDefectTable& defects) {
  if (levels.empty()) fail(ErrorKind::InvalidQuantumNumbers, "common_grid needs at least one level");
  RadialGrid grid = default_grid(levels.front(), defects);
  for (const auto& level : levels) {
    const RadialGrid g = default_grid(level, defects);
    grid.r_min = std::min(grid.r_min, g.r_min);
    grid.r_max = std::max(grid.r_max, g.r_max);
    grid.step = std::min(grid.step, g.step);
  }
  return grid;
}

CorePotential::CorePotential(Species species, int l, bool hydrogenic)
    : hydrogenic_(hydrogenic || species == Species::H) {
  if (hydrogenic_) return;
  const auto& table = species == Species::Rb ? kRbModel : kCsModel;
  const auto& p = table[static_cast<std::size_t>(std::min(l, 3))];
  z_ = species == Species::Rb ? kRbZ : kCsZ;
  alpha_c_ = species == Species::Rb ? kRbAlpha : kCsAlpha;
  a1_ = p.a1;
  a2_ = p.a2;
  a3_ = p.a3;
  a4_ = p.a4;
  rc_ = p.rc;
}

double CorePotential::operator()(double r) const noexcept {
  if (hydrogenic_) return -1.0 / r;
  const double z_eff = 1.0 + (z_ - 1.0) * std::exp(-a1_ * r) - r * (a3_ + a4_ * r) * std::exp(-a2_ * r);
  const double x = r / rc_;
  const double x2 = x * x;
  const double r2 = r * r;
  return -z_eff / r - alpha_c_ / (2.0 * r2 * r2) * (1.0 - std::exp(-x2 * x2 * x2));
}

void check_sampling(const RydbergLevel& level, const QuantumDefectTable& defects, const RadialGrid& grid) {
  level.validate();
  grid.validate();
  const CorePotential potential(level.species, level.l, uses_coulomb(level, defects));
  check_sampling_g(level, grid, numerov_g(level, potential, level_energy(level, defects), grid));
}

RadialWavefunction radial_wavefunction(const RydbergLevel& level, const QuantumDefectTable& defects) {
  return radial_wavefunction(level, defects, default_grid(level, defects));
}

RadialWavefunction radial_wavefunction(const RydbergLevel& level, const QuantumDefectTable& defects,
                                       const RadialGrid& grid) {
  level.validate();
  grid.validate();
  const double energy = level_energy(level, defects);
  const CorePotential potential(level.species, level.l, uses_coulomb(level, defects));
  const std::vector<double> g = numerov_g(level, potential, energy, grid);
  check_sampling_g(level, grid, g);

  const std::size_t count = g.size();
  const double h = grid.step;
  const double h12 = h * h / 12.0;
  std::vector<double> u(count, 0.0);

  // WKB-seeded tail
  const std::size_t last = count - 1;
  u[last] = 1e-30;
  if (g[last] > 0.0 && g[last - 1] > 0.0) {
    const double ka = std::sqrt(g[last]);
    const double kb = std::sqrt(g[last - 1]);
    u[last - 1] = u[last] * std::sqrt(std::sqrt(g[last] / g[last - 1])) * std::exp(0.5 * h * (ka + kb));
  } else {
    u[last - 1] = u[last];
  }

  for (std::size_t i = last - 1; i > 0; --i) {
    const double next = (2.0 * (1.0 + 5.0 * h12 * g[i]) * u[i] - (1.0 - h12 * g[i + 1]) * u[i + 1]) /
                        (1.0 - h12 * g[i - 1]);
    u[i - 1] = next;
    if (!std::isfinite(next))
      fail(ErrorKind::DivergedIntegration, "Numerov integration overflowed at r=" + std::to_string(grid.r(i - 1)) +
                                               " for " + to_string(level));
    if (std::abs(next) > kRescaleLimit) {
      for (std::size_t k = i - 1; k < count; ++k) u[k] /= kRescaleLimit;
    }
  }

  // Inside a classically forbidden barrier the physical solution decays
  // toward the origin. An inward-growing piece there is the irregular
  // solution picked up because the defect energy is not an exact eigenvalue
  // of the model potential, so cut it at the minimum of |u|. Barriers are
  // visited from the outer well inward.
  std::size_t i = count;
  while (i > 0 && g[i - 1] > 0.0) --i;  // outer tail
  while (i > 0) {
    while (i > 0 && g[i - 1] <= 0.0) --i;  // allowed region
    if (i == 0) break;
    std::size_t j = i;  // first forbidden point below the well is j - 1
    while (j > 0 && g[j - 1] > 0.0 && std::abs(u[j - 1]) <= std::abs(u[j]) && u[j - 1] * u[j] > 0.0) --j;
    if (j > 0 && g[j - 1] > 0.0) {
      std::fill(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(j), 0.0);
      break;
    }
    i = j;
  }

  const double norm2 = trapezoid_norm(u, h);
  if (!(norm2 > 0.0) || !std::isfinite(norm2))
    fail(ErrorKind::DivergedIntegration, "radial function has zero or non-finite norm for " + to_string(level));
  const double scale = 1.0 / std::sqrt(norm2);
  for (double& x : u) x *= scale;

  // The tail is seeded positive and has no node beyond the outer turning
  // point, so the outermost lobe is positive by construction.

  return RadialWavefunction(level, grid, energy, std::move(u));
}

RadialWavefunction::RadialWavefunction(RydbergLevel level, RadialGrid grid, double energy, std::vector<double> u)
    : level_(level), grid_(grid), energy_(energy), u_(std::move(u)) {
  if (u_.size() != grid_.size())
    fail(ErrorKind::DimensionMismatch, "radial values do not match the grid size");
  norm_checked_ = std::abs(norm() - 1.0) < 1e-6;
}

double RadialWavefunction::norm() const noexcept { return trapezoid_norm(u_, grid_.step); }

std::size_t RadialWavefunction::stencil(double r, double* w, double* dw) const noexcept {
  constexpr int kPoints = 6;
  const std::size_t count = u_.size();
  const double x = (r - grid_.r_min) / grid_.step;
  auto start = static_cast<std::ptrdiff_t>(std::floor(x)) - 2;
  start = std::clamp<std::ptrdiff_t>(start, 0, static_cast<std::ptrdiff_t>(count) - kPoints);
  const double t = x - static_cast<double>(start);
  for (int k = 0; k < kPoints; ++k) {
    double denom = 1.0;
    double prod = 1.0;
    for (int m = 0; m < kPoints; ++m) {
      if (m == k) continue;
      denom *= (k - m);
      prod *= (t - m);
    }
    w[k] = prod / denom;
    if (dw) {
      double dsum = 0.0;
      for (int p = 0; p < kPoints; ++p) {
        if (p == k) continue;
        double term = 1.0;
        for (int m = 0; m < kPoints; ++m)
          if (m != k && m != p) term *= (t - m);
        dsum += term;
      }
      dw[k] = dsum / denom / grid_.step;
    }
  }
  return static_cast<std::size_t>(start);
}

double RadialWavefunction::u(double r) const noexcept {
  if (r > grid_.r_max || r <= 0.0) return 0.0;
  if (r < grid_.r_min) return u_.front() * r / grid_.r_min;
  double w[6];
  const std::size_t s = stencil(r, w, nullptr);
  double sum = 0.0;
  for (int k = 0; k < 6; ++k) sum += w[k] * u_[s + static_cast<std::size_t>(k)];
  return sum;
}

double RadialWavefunction::du(double r) const noexcept {
  if (r > grid_.r_max || r <= 0.0) return 0.0;
  if (r < grid_.r_min) return u_.front() / grid_.r_min;
  double w[6], dw[6];
  const std::size_t s = stencil(r, w, dw);
  double sum = 0.0;
  for (int k = 0; k < 6; ++k) sum += dw[k] * u_[s + static_cast<std::size_t>(k)];
  return sum;
}

double RadialWavefunction::radial(double r) const noexcept { return r > 0.0 ? u(r) / r : 0.0; }

double RadialWavefunction::radial_derivative(double r) const noexcept {
  if (r <= 0.0) return 0.0;
  return du(r) / r - u(r) / (r * r);
}

int RadialWavefunction::interior_nodes() const noexcept {
  int nodes = 0;
  int last_sign = 0;
  for (double x : u_) {
    const int sign = (x > 0.0) - (x < 0.0);
    if (sign == 0) continue;
    if (last_sign != 0 && sign != last_sign) ++nodes;
    last_sign = sign;
  }
  return nodes;
}

std::vector<double> RadialWavefunction::nodes() const {
  std::vector<double> out;
  std::size_t prev = u_.size();
  for (std::size_t i = 0; i < u_.size(); ++i) {
    if (u_[i] == 0.0) continue;
    if (prev != u_.size() && (u_[i] > 0.0) != (u_[prev] > 0.0)) {
      double a = grid_.r(prev), b = grid_.r(i);
      double fa = u_[prev];
      for (int it = 0; it < 200 && b - a > 1e-14 * b; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = u(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if ((fm > 0.0) == (fa > 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      out.push_back(0.5 * (a + b));
    }
    prev = i;
  }
  return out;
}

double RadialWavefunction::outermost_antinode() const noexcept {
  std::size_t i = u_.size();
  std::size_t peak = 0;
  double best = 0.0;
  int sign = 0;
  while (i-- > 0) {
    const double x = u_[i];
    const int s = (x > 0.0) - (x < 0.0);
    if (s == 0) continue;
    if (sign == 0) sign = s;
    if (s != sign) break;
    if (std::abs(x) > best) {
      best = std::abs(x);
      peak = i;
    }
  }
  return grid_.r(peak);
}

double overlap(const RadialWavefunction& a, const RadialWavefunction& b) {
  const auto& ua = a.values();
  const double h = a.grid().step;
  double sum = 0.0;
  if (a.grid() == b.grid()) {
    const auto& ub = b.values();
    for (std::size_t i = 0; i < ua.size(); ++i) {
      const double w = (i == 0 || i + 1 == ua.size()) ? 0.5 : 1.0;
      sum += w * ua[i] * ub[i];
    }
  } else {
    for (std::size_t i = 0; i < ua.size(); ++i) {
      const double w = (i == 0 || i + 1 == ua.size()) ? 0.5 : 1.0;
      sum += w * ua[i] * b.u(a.grid().r(i));
    }
  }
  return sum * h;
}

}  // namespace rydfermi::atomic
