#include <benchmark/benchmark.h>

#include <numbers>

#include "rydfermi/atomic/electron_cloud.hpp"
#include "rydfermi/atomic/radial.hpp"
#include "rydfermi/common/units.hpp"
#include "rydfermi/gates/propagate.hpp"
#include "rydfermi/gates/protocols.hpp"
#include "rydfermi/lattice/franck_condon.hpp"
#include "rydfermi/lattice/optical_lattice.hpp"
#include "rydfermi/scattering/interaction_map.hpp"

using namespace rydfermi;

namespace {

const atomic::QuantumDefectTable& defects() { return atomic::QuantumDefectTable::builtin(); }

void BM_RadialWavefunction(benchmark::State& state) {
  const auto level = atomic::RydbergLevel::make(atomic::Species::Rb, static_cast<int>(state.range(0)), 2, 2.5, 2.5);
  for (auto _ : state) benchmark::DoNotOptimize(atomic::radial_wavefunction(level, defects()));
}
BENCHMARK(BM_RadialWavefunction)->Arg(30)->Arg(46)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_InteractionMap(benchmark::State& state) {
  const auto s = atomic::superposition_from_polarizations(std::numbers::pi / 2, 0.0, 46);
  const atomic::ElectronCloud cloud(s, defects());
  const scattering::FermiPseudopotential V(cloud, scattering::ScatteringModel::defaults(atomic::Species::Rb));
  const scattering::MapSpec spec{scattering::MapPlane::XY, units::nm_to_bohr(280.0), static_cast<int>(state.range(0)),
                                 units::nm_to_bohr(20.0), 1};
  for (auto _ : state) benchmark::DoNotOptimize(scattering::interaction_map(V, spec));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_InteractionMap)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_EffectiveFranckCondon(benchmark::State& state) {
  const double m = lattice::species_mass_amu(atomic::Species::Rb);
  const double w = lattice::oscillator_frequency(17.52, m);
  const auto q0 = lattice::WannierMode::from_frequency(0.0, w, m), q1 = lattice::WannierMode::from_frequency(150.0, w, m);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(lattice::effective_franck_condon(
        q0, q1, {75.0, w}, n, {lattice::OverlapConvention::Magnitude, lattice::CutoffPolicy::Physical}));
}
BENCHMARK(BM_EffectiveFranckCondon)->Arg(9)->Arg(40);

void BM_SegmentUnitary(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Random(n, n);
  const Eigen::MatrixXcd H = 0.5 * (A + A.adjoint());
  for (auto _ : state) benchmark::DoNotOptimize(gates::segment_unitary(H, 0.7));
}
BENCHMARK(BM_SegmentUnitary)->Arg(8)->Arg(48)->Arg(96);

void BM_PropagateAdaptive(benchmark::State& state) {
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Random(8, 8);
  const Eigen::MatrixXcd H = 0.5 * (A + A.adjoint());
  const Eigen::VectorXcd psi0 = Eigen::VectorXcd::Unit(8, 0);
  for (auto _ : state) benchmark::DoNotOptimize(gates::propagate_adaptive({{H, 5.0, "random"}}, psi0));
}
BENCHMARK(BM_PropagateAdaptive)->Unit(benchmark::kMicrosecond);

gates::GateScenario rb_case() {
  gates::GateScenario s;
  s.V_RF_1 = 1.3;
  s.V_RF_0 = 0.00045;
  s.omega_eff = 0.37;
  s.omega_ry = 10.0;
  s.delta = -1.3;
  s.delta_r = 25000.0;
  s.gamma_ry = 0.03;
  return s;
}

void BM_ParallelGate(benchmark::State& state) {
  auto s = rb_case();
  s.plaquette_size = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gates::parallel_gate(s));
}
BENCHMARK(BM_ParallelGate)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ToffoliGate(benchmark::State& state) {
  gates::GateScenario s;
  s.V_RF_1 = 354.0;
  s.omega_ry = 35.0;
  s.delta_r = 83000.0;
  s.gamma_ry = 0.025;
  for (auto _ : state) benchmark::DoNotOptimize(gates::toffoli_gate(s));
}
BENCHMARK(BM_ToffoliGate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
