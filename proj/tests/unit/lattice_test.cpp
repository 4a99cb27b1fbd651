#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "expect_error.hpp"
#include "rydfermi/common/units.hpp"
#include "rydfermi/lattice/franck_condon.hpp"
#include "rydfermi/lattice/optical_lattice.hpp"

using namespace rydfermi;
using namespace rydfermi::lattice;

namespace {

constexpr double pi = std::numbers::pi;
const double m_rb = species_mass_amu(atomic::Species::Rb);
const double m_cs = species_mass_amu(atomic::Species::Cs);

// independent overlap by brute-force trapezoid with physicists' Hermite polynomials
double overlap_oracle(const WannierMode& a, const WannierMode& b) {
  const auto phi = [](const WannierMode& w, double x) {
    const double t = (x - w.center_nm) / w.sigma_nm;
    const double norm = 1.0 / std::sqrt(std::pow(2.0, w.n) * std::tgamma(w.n + 1.0) * std::sqrt(pi) * w.sigma_nm);
    return norm * std::hermite(static_cast<unsigned>(w.n), t) * std::exp(-0.5 * t * t);
  };
  const double lo = std::min(a.center_nm - 14 * a.sigma_nm, b.center_nm - 14 * b.sigma_nm);
  const double hi = std::max(a.center_nm + 14 * a.sigma_nm, b.center_nm + 14 * b.sigma_nm);
  const int n = 40000;
  const double h = (hi - lo) / n;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = lo + i * h;
    sum += (i == 0 || i == n ? 0.5 : 1.0) * phi(a, x) * phi(b, x);
  }
  return sum * h;
}

}  // namespace

TEST(SpinPotentials, DegenerateAtZeroTheta) {
  const auto pot = spin_potentials(LatticeConfig::from_hz(800, 10e6, 0.0, m_rb), uniform_grid(-400, 400, 301));
  EXPECT_EQ(pot.displacement_nm(), 0.0);
  for (std::size_t i = 0; i < pot.z().size(); ++i) EXPECT_EQ(pot.v_plus()[i], pot.v_minus()[i]);
}

TEST(SpinPotentials, QubitCurvesFollowDefinition) {
  const auto pot = spin_potentials(LatticeConfig::from_hz(800, 10e6, 0.4, m_rb), uniform_grid(-500, 500, 257));
  for (std::size_t i = 0; i < pot.z().size(); ++i) {
    EXPECT_EQ(pot.v_qubit0()[i], (pot.v_plus()[i] + 3.0 * pot.v_minus()[i]) / 4.0);
    EXPECT_EQ(pot.v_qubit1()[i], pot.v_plus()[i]);
  }
  const auto csv = pot.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "z_nm,V_plus_MHz,V_minus_MHz,V0_MHz,V1_MHz");
}

TEST(SpinPotentials, QuarterPiGivesTwoHundredNanometres) {
  const auto cfg = LatticeConfig::from_hz(800, 10e6, pi / 4, m_rb);
  EXPECT_NEAR(cfg.displacement_nm(), 200.0, 1e-12);
}

TEST(SpinPotentials, RejectsShortGridAndBadConfig) {
  const auto cfg = LatticeConfig::from_hz(800, 10e6, 0.2, m_rb);
  EXPECT_EQ(thrown_kind([&] { spin_potentials(cfg, uniform_grid(0, 100, 10)); }), ErrorKind::ConfigInvalid);
  auto bad = cfg;
  bad.theta = pi / 2;
  EXPECT_EQ(thrown_kind([&] { bad.validate(); }), ErrorKind::ConfigInvalid);
  bad = cfg;
  bad.depth = -1;
  EXPECT_EQ(thrown_kind([&] { bad.validate(); }), ErrorKind::ConfigInvalid);
}

TEST(HarmonicMode, TrapWidthsOfTheCaseStudies) {
  struct Case {
    double lambda, depth_Hz, mass, sigma;
  };
  for (const Case c : {Case{420, 10e6, m_rb, 12.5}, Case{800, 10e6, m_rb, 17.0}, Case{350, 20e6, m_cs, 8.7}}) {
    const auto start = std::chrono::steady_clock::now();
    const auto pot = spin_potentials(LatticeConfig::from_hz(c.lambda, c.depth_Hz, 0.0, c.mass),
                                     uniform_grid(-c.lambda, c.lambda, 201));
    const auto mode = qubit_mode(pot, 1, 10.0);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_NEAR(mode.sigma_nm, c.sigma, 0.05 * c.sigma) << c.lambda;
    EXPECT_LT(seconds, 1.0);
    // harmonic closed form for U sin^2(kz): m omega^2 = 2 hbar U k^2
    const double k = 2 * pi / (c.lambda * 1e-9);
    const double omega = std::sqrt(2 * units::hbar_SI * units::two_pi * c.depth_Hz * k * k / (c.mass * units::amu_kg));
    EXPECT_NEAR(mode.omega, omega, 1e-6 * omega);
    EXPECT_NEAR(mode.center_nm, 0.0, 1e-4);
    EXPECT_NEAR(mode.sigma_nm * mode.sigma_nm * 1e-18 * c.mass * units::amu_kg * mode.omega / units::hbar_SI, 1.0,
                1e-12);
  }
}

TEST(HarmonicMode, DisplacementLaw) {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> dist(0.01, pi / 2 - 0.01);
  std::vector<double> thetas{pi / 8, pi / 4, 3 * pi / 8};
  for (int i = 0; i < 20; ++i) thetas.push_back(dist(rng));
  for (double theta : thetas) {
    const auto cfg = LatticeConfig::from_hz(800, 10e6, theta, m_rb);
    const auto pot = spin_potentials(cfg, uniform_grid(-800, 800, 201));
    const double z_plus = -theta / cfg.wavenumber();
    const auto a = harmonic_mode([&](double z) { return pot.plus(z); }, m_rb, {z_plus + 7.0}, 800);
    const auto b = harmonic_mode([&](double z) { return pot.minus(z); }, m_rb, {a.center_nm + cfg.displacement_nm() - 5.0}, 800);
    EXPECT_NEAR(b.center_nm - a.center_nm, 2 * theta / cfg.wavenumber(), 1e-3) << theta;
  }
}

TEST(HarmonicMode, FlatPotentialHasNoMinimum) {
  EXPECT_EQ(thrown_kind([] { harmonic_mode([](double z) { return z; }, m_rb, {0.0}, 800); }), ErrorKind::NoMinimumFound);
}

TEST(FranckCondon, ClosedFormChecks) {
  const double w = oscillator_frequency(17.0, m_rb);
  const auto a = WannierMode::from_frequency(0.0, w, m_rb);
  EXPECT_NEAR(franck_condon(a, a), 1.0, 1e-12);
  const auto b = WannierMode::from_frequency(2 * a.sigma_nm, w, m_rb);
  EXPECT_NEAR(franck_condon(a, b), std::exp(-1.0), 1e-9);
  EXPECT_NEAR(franck_condon(a, WannierMode::from_frequency(0.0, w, m_rb, 1)), 0.0, 1e-15);
}

TEST(FranckCondon, DisplacedGroundStateIsPoissonian) {
  const double w = oscillator_frequency(17.5, m_rb);
  const auto a = WannierMode::from_frequency(0.0, w, m_rb);
  const double d = 75.0, alpha = d / (a.sigma_nm * std::sqrt(2.0));
  for (int n = 0; n < 30; ++n) {
    const auto p = WannierMode::from_frequency(d, w, m_rb, n);
    const double expected = std::exp(-0.5 * alpha * alpha + n * std::log(alpha) - 0.5 * std::lgamma(n + 1.0));
    EXPECT_NEAR(std::abs(franck_condon(a, p)), expected, 1e-12) << n;
  }
}

TEST(FranckCondon, MatchesBruteForceForMixedFrequencies) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> width(8.0, 25.0), shift(-60.0, 60.0);
  std::uniform_int_distribution<int> index(0, 12);
  for (int i = 0; i < 25; ++i) {
    const auto a = WannierMode::from_frequency(shift(rng), oscillator_frequency(width(rng), m_rb), m_rb, index(rng));
    const auto b = WannierMode::from_frequency(shift(rng), oscillator_frequency(width(rng), m_rb), m_rb, index(rng));
    const double f = franck_condon(a, b);
    EXPECT_NEAR(f, overlap_oracle(a, b), 1e-9);
    EXPECT_NEAR(f, franck_condon(b, a), 1e-13);
    EXPECT_LE(std::abs(f), 1.0 + 1e-12);
  }
}

TEST(EffectiveFranckCondon, CompletenessAtZeroDisplacement) {
  const double w = oscillator_frequency(17.0, m_rb);
  const auto q = WannierMode::from_frequency(0.0, w, m_rb);
  for (auto conv : {OverlapConvention::Signed, OverlapConvention::Magnitude}) {
    const auto t = effective_franck_condon(q, q, {0.0, w}, 5, {conv, CutoffPolicy::Converged});
    EXPECT_NEAR(t.effective_F, 1.0, 1e-12);
  }
}

TEST(EffectiveFranckCondon, SumRuleGrowsWithCutoff) {
  const double w = oscillator_frequency(17.5, m_rb);
  const auto q0 = WannierMode::from_frequency(0.0, w, m_rb), q1 = WannierMode::from_frequency(150.0, w, m_rb);
  double previous = 0.0;
  for (int n = 1; n <= 60; n += 3) {
    const auto t = effective_franck_condon(q0, q1, {75.0, 1.3 * w}, n, {OverlapConvention::Signed, CutoffPolicy::Physical});
    for (int i : {0, 1}) EXPECT_LE(t.sum_rule(i), 1.0 + 1e-12);
    EXPECT_GE(t.sum_rule(0), previous - 1e-15);
    previous = t.sum_rule(0);
    double F = 0.0;
    for (std::size_t k = 0; k < t.n_levels(); ++k) F += t.f0[k] * t.f1[k];
    EXPECT_EQ(F, t.effective_F);
  }
  EXPECT_NEAR(previous, 1.0, 1e-9);
}

TEST(EffectiveFranckCondon, CaseStudyFactors) {
  const double w = oscillator_frequency(17.52, m_rb);
  const FranckCondonOptions physical{OverlapConvention::Magnitude, CutoffPolicy::Physical};
  const auto q0 = WannierMode::from_frequency(0.0, w, m_rb);
  const auto t150 = effective_franck_condon(q0, WannierMode::from_frequency(150.0, w, m_rb), {75.0, w}, 9, physical);
  EXPECT_NEAR(t150.effective_F, 0.5, 0.15);
  const auto t200 = effective_franck_condon(q0, WannierMode::from_frequency(200.0, w, m_rb), {100.0, w}, 14, physical);
  EXPECT_NEAR(t200.effective_F, 0.25, 0.10);
  // nine levels do not converge a 150 nm transfer
  EXPECT_EQ(thrown_kind([&] {
              effective_franck_condon(q0, WannierMode::from_frequency(150.0, w, m_rb), {75.0, w}, 9,
                                      {OverlapConvention::Magnitude, CutoffPolicy::Converged});
            }),
            ErrorKind::CutoffTooSmall);
}

TEST(EffectiveFranckCondon, DefaultLevelCount) {
  EXPECT_EQ(default_level_count(9.5, 1.0), 9);
  EXPECT_EQ(thrown_kind([] { default_level_count(1.0, 0.0); }), ErrorKind::ConfigInvalid);
}
