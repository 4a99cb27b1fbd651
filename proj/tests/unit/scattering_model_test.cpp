#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "expect_error.hpp"
#include "rydfermi/scattering/scattering_model.hpp"

using namespace rydfermi;
using namespace rydfermi::scattering;

TEST(LocalMomentum, ClosedFormExample) {
  const auto k = local_momentum(46.0, 2000.0);
  const double expected = std::sqrt(2.0 * (-1.0 / (2.0 * 46.0 * 46.0) + 1.0 / 2000.0));
  EXPECT_NEAR(k.k, expected, 1e-15);
  EXPECT_NEAR(k.k, 2.297e-2, 5e-5);
  EXPECT_EQ(k.regime, MomentumRegime::Classical);
}

TEST(LocalMomentum, TurningPointClamps) {
  const auto k = local_momentum(46.0, 2.0 * 46.0 * 46.0);
  EXPECT_EQ(k.regime, MomentumRegime::Clamped);
  EXPECT_EQ(k.k, kDefaultKMin);
  const auto far = local_momentum(46.0, 1e5);
  EXPECT_EQ(far.regime, MomentumRegime::Clamped);
  EXPECT_EQ(far.k, kDefaultKMin);
}

TEST(LocalMomentum, CoulombLimitAndMonotonicity) {
  const auto k = local_momentum(46.0, 1e-6);
  EXPECT_EQ(k.regime, MomentumRegime::Classical);
  EXPECT_NEAR(k.k, std::sqrt(2.0 / 1e-6), 1e-3);
  double previous = INFINITY;
  for (double R = 1.0; R < 4000.0; R *= 1.1) {
    const auto m = local_momentum(46.0, R);
    ASSERT_EQ(m.regime, MomentumRegime::Classical);
    EXPECT_LT(m.k, previous);
    previous = m.k;
  }
  EXPECT_EQ(thrown_kind([] { local_momentum(46.0, 0.0); }), ErrorKind::NumericalError);
}

TEST(PhaseShifts, ScatteringLengthLimit) {
  ScatteringModel model = ScatteringModel::zero(atomic::Species::Rb);
  model.a_s = -16.0;
  model.s_range_coeffs = {120.0, -40.0};
  for (double k : {1e-4, 5e-4, 9e-4}) {
    const auto s = phase_shifts(model, {k, MomentumRegime::Classical});
    EXPECT_NEAR(s.tan_s / k, 16.0, 0.16);
  }
}

TEST(PhaseShifts, ThresholdLawForPWave) {
  for (auto species : {atomic::Species::Rb, atomic::Species::Cs}) {
    const auto model = ScatteringModel::defaults(species);
    double previous = INFINITY;
    for (double k : {1e-2, 1e-3, 1e-4, 1e-5}) {
      const double t = std::abs(phase_shifts(model, {k, MomentumRegime::Classical}).tan_p);
      EXPECT_LT(t, previous);
      previous = t;
    }
    EXPECT_LT(previous, 1e-10);
  }
}

TEST(PhaseShifts, ResonanceFlaggedAndStrictModeThrows) {
  const auto model = ScatteringModel::defaults(atomic::Species::Cs);
  const ElectronMomentum at_res{model.p_res_k, MomentumRegime::Classical};
  const auto relaxed = phase_shifts(model, at_res);
  EXPECT_TRUE(relaxed.near_resonance);
  EXPECT_TRUE(std::isfinite(relaxed.tan_p));
  EXPECT_GT(std::abs(relaxed.tan_p), 100.0);
  EXPECT_EQ(thrown_kind([&] { phase_shifts(model, at_res, true); }), ErrorKind::ResonanceSingularity);
  // well off resonance strict mode is silent
  const auto off = phase_shifts(model, {0.2 * model.p_res_k, MomentumRegime::Classical}, true);
  EXPECT_FALSE(off.near_resonance);
}

TEST(PhaseShifts, BreitWignerOracle) {
  ScatteringModel model = ScatteringModel::zero(atomic::Species::Cs);
  model.p_background = 3.0;
  model.p_res_k = 0.02;
  model.p_res_gamma = 1e-4;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(1e-3, 0.05);
  for (int i = 0; i < 50; ++i) {
    const double k = dist(rng);
    const double E = 0.5 * k * k, E_res = 0.5 * 0.02 * 0.02;
    if (std::abs(E - E_res) < 1e-5) continue;
    const double expected = 3.0 * k * k * k + std::pow(k / 0.02, 3) * 0.5e-4 / (E_res - E);
    const auto s = phase_shifts(model, {k, MomentumRegime::Classical});
    EXPECT_NEAR(s.tan_p, expected, 1e-12 * std::max(1.0, std::abs(expected)));
  }
}

TEST(ScatteringModel, ValidationRejectsBadValues) {
  ScatteringModel model = ScatteringModel::zero(atomic::Species::Rb);
  model.p_res_gamma = -1.0;
  EXPECT_EQ(thrown_kind([&] { model.validate(); }), ErrorKind::ConfigInvalid);
  model.p_res_gamma = 0.0;
  model.a_s = NAN;
  EXPECT_EQ(thrown_kind([&] { model.validate(); }), ErrorKind::ConfigInvalid);
}
