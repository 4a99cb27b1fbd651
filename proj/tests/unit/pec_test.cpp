#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "expect_error.hpp"
#include "rydfermi/common/units.hpp"
#include "rydfermi/scattering/pec.hpp"

using namespace rydfermi;
using namespace rydfermi::atomic;
using namespace rydfermi::scattering;
using rydfermi::units::nm_to_bohr;
using rydfermi::units::bohr_nm;
using rydfermi::units::MHz_to_hartree;

namespace {

const QuantumDefectTable& defects() { return QuantumDefectTable::builtin(); }

PecBasisOptions cs_basis_options() {
  PecBasisOptions o;
  o.target = RydbergLevel::make(Species::Cs, 46, 2, 2.5, 2.5);
  o.neighbours = {{47, 1}, {48, 0}};
  o.manifold_n = {43, 42};
  o.manifold_l_min = 4;
  o.manifold_l_max = 6;
  o.mj_values = {HalfInt::from_twice(5), HalfInt::from_twice(1)};
  o.truncation = 40;
  return o;
}

}  // namespace

TEST(PecBasis, BuildsUniqueStatesWithTargetFirst) {
  const auto basis = build_pec_basis(cs_basis_options(), defects());
  EXPECT_EQ(basis.states.front(), cs_basis_options().target);
  auto sorted = basis.states;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& s : basis.states) {
    EXPECT_TRUE(s.valid());
    if (s.n == 43 || s.n == 42) EXPECT_GE(s.l, 4);
  }
}

TEST(PecBasis, TruncationIsEnforced) {
  auto o = cs_basis_options();
  o.truncation = 3;
  EXPECT_EQ(thrown_kind([&] { build_pec_basis(o, defects()); }), ErrorKind::BasisTooLarge);
  PecBasis basis = build_pec_basis(cs_basis_options(), defects());
  basis.truncation = 2;
  EXPECT_EQ(thrown_kind([&] { pec(basis, {{1, 0, 0}}, {3000.0}, ScatteringModel::zero(Species::Cs), defects()); }),
            ErrorKind::BasisTooLarge);
}

TEST(Pec, ZeroModelGivesFlatCurves) {
  const auto basis = build_pec_basis(cs_basis_options(), defects());
  const auto result = pec(basis, {{1, 0, 0}}, {2000.0, 3000.0, 4000.0}, ScatteringModel::zero(Species::Cs), defects());
  auto e = result.unperturbed;
  std::sort(e.begin(), e.end());
  for (Eigen::Index i = 0; i < result.sorted.rows(); ++i)
    for (std::size_t k = 0; k < e.size(); ++k)
      EXPECT_NEAR(result.sorted(i, static_cast<Eigen::Index>(k)), e[k], 1e-15);
}

TEST(Pec, FarSeparationsReturnToUnperturbedEnergies) {
  const auto basis = build_pec_basis(cs_basis_options(), defects());
  const auto result = pec(basis, {{1, 0, 0.2}}, {7000.0, 7500.0}, ScatteringModel::defaults(Species::Cs), defects());
  auto e = result.unperturbed;
  std::sort(e.begin(), e.end());
  const double kHz = MHz_to_hartree(1e-3);
  for (Eigen::Index i = 0; i < result.sorted.rows(); ++i)
    for (std::size_t k = 0; k < e.size(); ++k)
      EXPECT_NEAR(result.sorted(i, static_cast<Eigen::Index>(k)), e[k], kHz);
}

TEST(Pec, SingleStateEqualsFirstOrderShift) {
  for (auto species : {Species::Rb, Species::Cs}) {
    const auto level = RydbergLevel::make(species, 46, 2, 2.5, 2.5);
    PecBasis basis{{level}, 1};
    const auto model = ScatteringModel::defaults(species);
    const Vec3 dir{0.8, 0.0, 0.35};
    const double norm = std::sqrt(0.8 * 0.8 + 0.35 * 0.35);
    const std::vector<double> seps{1200.0, 2300.0, 3400.0};
    const auto result = pec(basis, {dir}, seps, model, defects());
    for (std::size_t i = 0; i < seps.size(); ++i) {
      const Vec3 x{seps[i] * dir.x / norm, 0.0, seps[i] * dir.z / norm};
      const double shift = v_rf(RydbergSuperposition::single(level), x, model, defects()).total;
      const double curve = result.sorted(static_cast<Eigen::Index>(i), 0) - result.unperturbed[0];
      EXPECT_NEAR(curve, shift, 1e-9 * std::abs(shift) + 1e-19);
      // the matrix element itself, free of the energy offset
      const auto V = interaction_matrix(basis, {x}, model, defects());
      EXPECT_NEAR(V(0, 0).real(), shift, 1e-12 * std::abs(shift));
    }
  }
}

TEST(Pec, SymmetricAtomsAreAdditive) {
  const auto basis = build_pec_basis(cs_basis_options(), defects());
  const auto model = ScatteringModel::defaults(Species::Cs);
  const Vec3 a{2100.0, 800.0, 400.0}, b{-2100.0, -800.0, -400.0};
  const auto both = interaction_matrix(basis, {a, b}, model, defects());
  const auto sum = (interaction_matrix(basis, {a}, model, defects()) + interaction_matrix(basis, {b}, model, defects())).eval();
  for (Eigen::Index k = 0; k < both.rows(); ++k)
    EXPECT_NEAR(both(k, k).real(), sum(k, k).real(), 1e-12 * std::abs(sum(k, k).real()) + 1e-300);
  EXPECT_LT((both - sum).norm(), 1e-12 * sum.norm());
  EXPECT_LT((both - both.adjoint()).norm(), 1e-15 * both.norm());
}

TEST(Pec, AdiabaticCurvesPermuteSortedValues) {
  const auto basis = build_pec_basis(cs_basis_options(), defects());
  std::vector<double> seps;
  for (double R = 1500.0; R <= 4500.0; R += 250.0) seps.push_back(R);
  PecOptions options;
  options.threads = 2;
  const auto result = pec(basis, {{1, 0, 0}}, seps, ScatteringModel::defaults(Species::Cs), defects(), options);
  for (Eigen::Index i = 0; i < result.sorted.rows(); ++i) {
    std::vector<double> a(result.adiabatic.row(i).begin(), result.adiabatic.row(i).end());
    std::sort(a.begin(), a.end());
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k], result.sorted(i, static_cast<Eigen::Index>(k)));
  }
}
