#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "expect_error.hpp"
#include "rydfermi/atomic/electron_cloud.hpp"
#include "rydfermi/common/units.hpp"
#include "rydfermi/scattering/pseudopotential.hpp"

using namespace rydfermi;
using namespace rydfermi::atomic;
using namespace rydfermi::scattering;
using rydfermi::units::nm_to_bohr;
using rydfermi::units::bohr_nm;
using rydfermi::units::MHz_to_hartree;

namespace {

const QuantumDefectTable& defects() { return QuantumDefectTable::builtin(); }
constexpr double pi = std::numbers::pi;

RydbergLevel rb46d() { return RydbergLevel::make(Species::Rb, 46, 2, 2.5, 2.5); }

}  // namespace

TEST(Pseudopotential, LiteralTermsMatchCloud) {
  const ElectronCloud cloud(RydbergSuperposition::single(rb46d()), defects());
  const auto model = ScatteringModel::defaults(Species::Rb);
  const FermiPseudopotential V(cloud, model);
  for (const Vec3 x : {Vec3{3000.0, 500.0, 200.0}, Vec3{-1000.0, 2500.0, -800.0}, Vec3{400.0, 0.0, 3500.0}}) {
    const auto s = V.at(x);
    const auto sph = to_spherical(x);
    const auto k = local_momentum(cloud.mean_effective_n(), sph.r);
    const auto shifts = phase_shifts(model, k);
    const double s_expected = 2 * pi * shifts.tan_s / k.k * cloud.density_at(sph);
    const double p_expected = -6 * pi * shifts.tan_p / std::pow(k.k, 3) * cloud.gradient(sph).norm2();
    EXPECT_NEAR(s.s_term, s_expected, 1e-14 * std::abs(s_expected));
    EXPECT_NEAR(s.p_term, p_expected, 1e-14 * std::abs(p_expected) + 1e-300);
    EXPECT_EQ(s.total, s.s_term + s.p_term);
  }
}

TEST(Pseudopotential, RadialNodeGivesZeroSTerm) {
  const ElectronCloud cloud(RydbergSuperposition::single(rb46d()), defects());
  const FermiPseudopotential V(cloud, ScatteringModel::defaults(Species::Rb));
  const auto nodes = cloud.radial(0).nodes();
  ASSERT_GT(nodes.size(), 10u);
  // scale: the largest s-term along the same ray
  double scale = 0.0;
  for (double r = 100.0; r < 4500.0; r += 7.0) scale = std::max(scale, std::abs(V.at({r, 0.0, 0.0}).s_term));
  for (std::size_t i : {nodes.size() - 1, nodes.size() - 3, nodes.size() / 2}) {
    const auto s = V.at({nodes[i], 0.0, 0.0});
    EXPECT_LT(std::abs(s.s_term), 1e-12 * scale) << "node " << nodes[i];
  }
}

TEST(Pseudopotential, DensityDoublingDoublesSTerm) {
  const auto model = ScatteringModel::defaults(Species::Rb);
  RydbergSuperposition twice;
  twice.components = {{rb46d(), 1 / std::sqrt(2.0)}, {rb46d(), 1 / std::sqrt(2.0)}};
  for (const Vec3 x : {Vec3{3000.0, 500.0, 200.0}, Vec3{1500.0, -700.0, 100.0}}) {
    const auto one = v_rf(RydbergSuperposition::single(rb46d()), x, model, defects());
    const auto two = v_rf(twice, x, model, defects());
    EXPECT_NEAR(two.s_term, 2.0 * one.s_term, 1e-13 * std::abs(one.s_term));
    EXPECT_NEAR(two.p_term, 2.0 * one.p_term, 1e-13 * std::abs(one.p_term) + 1e-300);
  }
}

TEST(Pseudopotential, NegativeTanDeltaIsAttractive) {
  ScatteringModel model = ScatteringModel::zero(Species::Rb);
  model.a_s = 12.0;  // tan d_s = -k a_s < 0
  const ElectronCloud cloud(RydbergSuperposition::single(rb46d()), defects());
  const FermiPseudopotential V(cloud, model);
  int nonzero = 0;
  for (double r = 200.0; r < 4200.0; r += 37.0) {
    const auto s = V.at(from_cylindrical(r, 0.3, 0.1 * r));
    EXPECT_LE(s.total, 0.0);
    EXPECT_EQ(s.p_term, 0.0);
    if (s.total < 0.0) ++nonzero;
  }
  EXPECT_GT(nonzero, 50);
}

TEST(Pseudopotential, BeyondGridIsZeroAndCoreThrows) {
  const ElectronCloud cloud(RydbergSuperposition::single(rb46d()), defects());
  const FermiPseudopotential V(cloud, ScatteringModel::defaults(Species::Rb));
  const auto s = V.at({2.0 * cloud.max_radius(), 0.0, 0.0});
  EXPECT_EQ(s.total, 0.0);
  EXPECT_EQ(thrown_kind([&] { V.at({0.0, 0.0, 0.0}); }), ErrorKind::NumericalError);
}

TEST(SiteAverage, DeltaWidthModeMatchesPointValue) {
  const ElectronCloud cloud(RydbergSuperposition::single(rb46d()), defects());
  const FermiPseudopotential V(cloud, ScatteringModel::defaults(Species::Rb));
  const double width = nm_to_bohr(1e-3);
  for (const Vec3 c : {Vec3{cloud.outermost_antinode(), 0.0, 0.0}, Vec3{2500.0, 1200.0, 300.0}}) {
    const double point = V.at(c).total;
    const double avg = site_averaged_interaction(V, {c, width, width, width});
    EXPECT_NEAR(avg, point, 1e-3 * std::abs(point));
  }
}

TEST(SiteAverage, AgreesWithIndependentTrapezoidSum) {
  const ElectronCloud cloud(RydbergSuperposition::single(rb46d()), defects());
  const FermiPseudopotential V(cloud, ScatteringModel::defaults(Species::Rb));
  const SiteMode mode{{nm_to_bohr(210.0), 0.0, 0.0}, nm_to_bohr(12.7), nm_to_bohr(12.7), nm_to_bohr(17.5)};
  const double avg = site_averaged_interaction(V, mode, {12, 0.01});

  // trapezoid on +-6 sigma converges spectrally for a Gaussian weight
  const int n = 41;
  double sum = 0.0;
  const double hx = 12.0 * mode.sigma_x / (n - 1), hy = 12.0 * mode.sigma_y / (n - 1),
               hz = 12.0 * mode.sigma_z / (n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const double dx = -6.0 * mode.sigma_x + i * hx, dy = -6.0 * mode.sigma_y + j * hy,
                     dz = -6.0 * mode.sigma_z + l * hz;
        const double w = std::exp(-dx * dx / (mode.sigma_x * mode.sigma_x) - dy * dy / (mode.sigma_y * mode.sigma_y) -
                                  dz * dz / (mode.sigma_z * mode.sigma_z));
        sum += w * V.at({mode.center.x + dx, mode.center.y + dy, mode.center.z + dz}).total;
      }
  sum *= hx * hy * hz / (std::pow(std::sqrt(pi), 3) * mode.sigma_x * mode.sigma_y * mode.sigma_z);
  EXPECT_NEAR(avg, sum, 5e-3 * std::abs(sum));
}

TEST(SiteAverage, CoarseOrderReportsNonConvergence) {
  const ElectronCloud cloud(RydbergSuperposition::single(rb46d()), defects());
  const FermiPseudopotential V(cloud, ScatteringModel::defaults(Species::Rb));
  const double s = nm_to_bohr(40.0);
  const SiteMode mode{{nm_to_bohr(150.0), 0.0, 0.0}, s, s, s};
  EXPECT_EQ(thrown_kind([&] { site_averaged_interaction(V, mode, {2, 1e-6}); }), ErrorKind::QuadratureNotConverged);
}
