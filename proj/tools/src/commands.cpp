#include "rydfermi/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <map>
#include <numbers>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rydfermi/atomic/electron_cloud.hpp"
#include "rydfermi/atomic/quantum_defects.hpp"
#include "rydfermi/atomic/radial.hpp"
#include "rydfermi/atomic/superposition.hpp"
#include "rydfermi/atomic/wavefunction_cache.hpp"
#include "rydfermi/common/errors.hpp"
#include "rydfermi/common/format.hpp"
#include "rydfermi/common/units.hpp"
#include "rydfermi/gates/budget.hpp"
#include "rydfermi/gates/protocols.hpp"
#include "rydfermi/lattice/franck_condon.hpp"
#include "rydfermi/lattice/optical_lattice.hpp"
#include "rydfermi/scattering/interaction_map.hpp"
#include "rydfermi/scattering/pec.hpp"
#include "rydfermi/scattering/pseudopotential.hpp"

namespace rydfermi::cli {

using ojson = nlohmann::ordered_json;

namespace {

constexpr double pi = std::numbers::pi;

std::string num(double x) { return format_double(x); }

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

atomic::RydbergLevel level_of(const AtomSection& a) { return atomic::RydbergLevel::make(a.species, a.n, a.l, a.j, a.mj); }

atomic::RydbergSuperposition state_of(const AtomSection& a) {
  if (a.theta_R && a.theta_B) return atomic::superposition_from_polarizations(*a.theta_R, *a.theta_B, a.n, a.species);
  return atomic::RydbergSuperposition::single(level_of(a));
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

void cmd_wavefunction(const ScenarioFile& f, OutputWriter& out) {
  const auto& defects = atomic::QuantumDefectTable::builtin();
  const auto level = level_of(*f.atom);
  const auto grid = atomic::default_grid(level, defects);
  const auto cache = atomic::WavefunctionCache::from_environment();
  const auto wf = cache ? cache->get_or_compute(level, defects, grid) : atomic::radial_wavefunction(level, defects);
  std::string csv = "r_bohr,u\n";
  const auto& u = wf.values();
  for (std::size_t i = 0; i < u.size(); ++i)
    csv += num(wf.grid().r_min + static_cast<double>(i) * wf.grid().step) + "," + num(u[i]) + "\n";
  out.write("wavefunction.csv", csv);
  ojson j;
  j["level"] = atomic::to_string(level);
  j["energy_hartree"] = wf.energy();
  j["effective_n"] = atomic::effective_n(level, defects);
  j["interior_nodes"] = wf.interior_nodes();
  j["norm"] = wf.norm();
  j["outermost_antinode_bohr"] = wf.outermost_antinode();
  j["outermost_antinode_nm"] = units::bohr_to_nm(wf.outermost_antinode());
  out.write("wavefunction.json", dump(j));
}

void cmd_map(const ScenarioFile& f, const RunOptions& o, OutputWriter& out) {
  const auto& defects = atomic::QuantumDefectTable::builtin();
  const auto cache = atomic::WavefunctionCache::from_environment();
  const atomic::ElectronCloud cloud(state_of(*f.atom), defects, std::nullopt, cache ? &*cache : nullptr);
  const scattering::FermiPseudopotential pot(cloud, f.scattering->model, {o.strict});
  const auto& m = *f.scattering->map;
  scattering::MapSpec spec;
  spec.plane = m.plane;
  spec.extent = units::nm_to_bohr(m.extent_nm);
  spec.resolution = m.resolution;
  spec.crop_radius = units::nm_to_bohr(m.crop_radius_nm);
  spec.threads = o.threads;
  const auto map = scattering::interaction_map(pot, spec);
  out.write("map.csv", scattering::to_csv(map, units::bohr_nm));
  std::size_t cropped = 0, errors = 0;
  double lo = 0, hi = 0;
  for (const auto& c : map.cells) {
    if (c.status == scattering::CellStatus::Cropped) ++cropped;
    if (c.status == scattering::CellStatus::Error) ++errors;
    if (c.status == scattering::CellStatus::Ok) {
      lo = std::min(lo, scattering::to_MHz(c.sample.total));
      hi = std::max(hi, scattering::to_MHz(c.sample.total));
    }
  }
  ojson j;
  j["plane"] = m.plane == scattering::MapPlane::XY ? "xy" : "rho-z";
  j["extent_nm"] = m.extent_nm;
  j["resolution"] = m.resolution;
  j["components"] = cloud.state().components.size();
  j["cells_cropped"] = cropped;
  j["cells_error"] = errors;
  j["total_min_MHz"] = lo;
  j["total_max_MHz"] = hi;
  out.write("map.json", dump(j));
}

void cmd_pec(const ScenarioFile& f, const RunOptions& o, OutputWriter& out) {
  const auto& defects = atomic::QuantumDefectTable::builtin();
  const auto& p = *f.scattering->pec;
  scattering::PecBasisOptions bo;
  bo.target = level_of(*f.atom);
  bo.manifold_n = p.manifold_n;
  bo.neighbours = p.neighbours;
  bo.truncation = p.truncation;
  bo.max_energy_gap = units::MHz_to_hartree(1e3 * p.max_energy_gap_GHz);
  const auto basis = scattering::build_pec_basis(bo, defects);
  std::vector<double> R;
  for (int i = 0; i < p.points; ++i)
    R.push_back(units::nm_to_bohr(p.separation_from_nm +
                                  (p.separation_to_nm - p.separation_from_nm) * i / (p.points - 1)));
  scattering::PecOptions po;
  po.pseudopotential.strict = o.strict;
  po.threads = o.threads;
  const auto res = scattering::pec(basis, {{p.direction[0], p.direction[1], p.direction[2]}}, R, f.scattering->model, defects, po);
  const double E0 = res.unperturbed.front();
  std::string csv = "R_nm";
  for (Eigen::Index k = 0; k < res.adiabatic.cols(); ++k) csv += ",E" + std::to_string(k) + "_MHz";
  csv += "\n";
  for (std::size_t i = 0; i < R.size(); ++i) {
    csv += num(units::bohr_to_nm(R[i]));
    for (Eigen::Index k = 0; k < res.adiabatic.cols(); ++k)
      csv += "," + num(units::hartree_to_MHz(res.adiabatic(static_cast<Eigen::Index>(i), k) - E0));
    csv += "\n";
  }
  out.write("pec.csv", csv);
  ojson j;
  j["target"] = atomic::to_string(bo.target);
  j["basis"] = ojson::array();
  for (std::size_t k = 0; k < basis.states.size(); ++k)
    j["basis"].push_back({{"level", atomic::to_string(basis.states[k])},
                          {"offset_MHz", units::hartree_to_MHz(res.unperturbed[k] - E0)}});
  out.write("pec.json", dump(j));
}

struct Modes {
  lattice::SpinDependentPotential potential;
  lattice::WannierMode plus, minus, qubit0, qubit1;
};

Modes locate_modes(const ScenarioFile& f) {
  const auto& l = *f.lattice;
  const auto cfg = lattice::LatticeConfig::from_hz(l.wavelength_nm, l.depth_over_2pi_Hz, l.theta_rad, f.mass_amu());
  cfg.validate();
  auto pot = lattice::spin_potentials(
      cfg, lattice::uniform_grid(-0.5 * l.wavelength_nm, 0.5 * l.wavelength_nm, static_cast<std::size_t>(l.grid_points)));
  const double s = l.theta_rad / cfg.wavenumber();
  const double m = cfg.mass_amu;
  const double lam = cfg.wavelength_nm;
  auto plus = lattice::harmonic_mode([&](double z) { return pot.plus(z); }, m, {-s}, lam);
  auto minus = lattice::harmonic_mode([&](double z) { return pot.minus(z); }, m, {s}, lam);
  auto q1 = lattice::qubit_mode(pot, 1, -s);
  auto q0 = lattice::qubit_mode(pot, 0, s);
  return {std::move(pot), plus, minus, q0, q1};
}

ojson mode_json(const lattice::WannierMode& w) {
  return {{"center_nm", w.center_nm}, {"sigma_nm", w.sigma_nm}, {"omega_over_2pi_Hz", w.omega / (2 * pi)}};
}

void cmd_lattice(const ScenarioFile& f, OutputWriter& out) {
  const auto modes = locate_modes(f);
  out.write("lattice.csv", modes.potential.to_csv());
  ojson j;
  j["displacement_nm"] = modes.potential.displacement_nm();
  j["minimum_separation_nm"] = modes.minus.center_nm - modes.plus.center_nm;
  j["qubit_separation_nm"] = modes.qubit0.center_nm - modes.qubit1.center_nm;
  j["V_plus"] = mode_json(modes.plus);
  j["V_minus"] = mode_json(modes.minus);
  j["qubit0"] = mode_json(modes.qubit0);
  j["qubit1"] = mode_json(modes.qubit1);
  out.write("lattice.json", dump(j));
}

void cmd_franck_condon(const ScenarioFile& f, OutputWriter& out) {
  const auto& l = *f.lattice;
  const auto modes = locate_modes(f);
  lattice::WannierMode q0 = modes.qubit0, q1 = modes.qubit1;
  if (l.qubit_separation_nm) {
    // identical harmonic traps a fixed distance apart
    q0 = lattice::WannierMode::from_frequency(0.0, modes.qubit1.omega, f.mass_amu());
    q1 = lattice::WannierMode::from_frequency(*l.qubit_separation_nm, modes.qubit1.omega, f.mass_amu());
  }
  const lattice::IntermediateTrap trap{l.intermediate_center_nm.value_or(0.5 * (q0.center_nm + q1.center_nm)),
                                       modes.qubit1.omega};
  const int n = l.n_levels.value_or(lattice::default_level_count(2 * pi * l.depth_over_2pi_Hz, trap.omega));
  lattice::FranckCondonOptions fo;
  fo.convention = l.convention == "signed" ? lattice::OverlapConvention::Signed : lattice::OverlapConvention::Magnitude;
  fo.cutoff = l.cutoff == "physical" ? lattice::CutoffPolicy::Physical : lattice::CutoffPolicy::Converged;
  const auto table = lattice::effective_franck_condon(q0, q1, trap, n, fo);
  std::string csv = "n,f0,f1\n";
  for (std::size_t i = 0; i < table.n_levels(); ++i)
    csv += std::to_string(i) + "," + num(table.f0[i]) + "," + num(table.f1[i]) + "\n";
  out.write("franck_condon.csv", csv);
  ojson j;
  j["effective_F"] = table.effective_F;
  j["n_levels"] = table.n_levels();
  j["convention"] = l.convention;
  j["cutoff"] = l.cutoff;
  j["sum_rule_0"] = table.sum_rule(0);
  j["sum_rule_1"] = table.sum_rule(1);
  j["qubit0"] = mode_json(q0);
  j["qubit1"] = mode_json(q1);
  j["intermediate_center_nm"] = trap.center_nm;
  out.write("franck_condon.json", dump(j));
}

ojson budget_json(const gates::ErrorBudget& b) {
  ojson j;
  j["spontaneous_emission"] = b.spontaneous_emission;
  j["blockade_leakage"] = b.blockade_leakage;
  j["control_rotation"] = b.control_rotation;
  j["nondeterministic_excitation"] = b.nondeterministic_excitation;
  j["total_error"] = b.total_error();
  j["fidelity"] = b.fidelity();
  j["notes"] = b.notes;
  return j;
}

gates::ErrorBudget budget_for(const GateSection& g) {
  return g.protocol == "toffoli" || g.protocol == "stabilizer-direct" ? gates::error_budget_toffoli(g.scenario)
                                                                      : gates::error_budget_parallel(g.scenario);
}

gates::FidelityReport run_protocol(const GateSection& g) {
  const auto& s = g.scenario;
  if (g.protocol == "parallel") return gates::parallel_gate(s).report;
  if (g.protocol == "toffoli") return gates::toffoli_gate(s).report;
  if (g.protocol == "stabilizer-direct") return gates::stabilizer_phase_direct(s, s.theta).report;
  return gates::stabilizer_via_parallel(s, s.theta).report;
}

ojson scenario_echo(const GateSection& g) {
  const auto& s = g.scenario;
  ojson j;
  j["protocol"] = g.protocol;
  j["plaquette_size"] = s.plaquette_size;
  j["V_RF_1_MHz"] = s.V_RF_1;
  j["V_RF_0_MHz"] = s.V_RF_0;
  j["omega_eff_kHz"] = 1e3 * s.omega_eff;
  j["omega_ry_MHz"] = s.omega_ry;
  j["delta_MHz"] = s.raman_detuning();
  j["Delta_MHz"] = s.toffoli_detuning();
  j["delta_prime_MHz"] = s.delta_prime;
  j["gamma_ry_kHz"] = 1e3 * s.gamma_ry;
  j["delta_r_GHz"] = 1e-3 * s.delta_r;
  j["theta_rad"] = s.theta;
  return j;
}

void cmd_gate(const ScenarioFile& f, OutputWriter& out) {
  const auto& g = *f.gate;
  auto report = run_protocol(g);
  report.budget = budget_for(g);
  ojson j;
  j["scenario"] = f.name;
  j["phase_fidelity"] = report.phase_sensitive;
  j["population_fidelity"] = report.population;
  j["worst_case_state"] = report.worst_case_state;
  j["worst_case_fidelity"] = report.worst_case_fidelity;
  j["max_leakage"] = report.max_leakage;
  j["error_budget"] = budget_json(*report.budget);
  j["gate"] = scenario_echo(g);
  out.write("gate_report.json", dump(j));
  std::ostringstream txt;
  txt << "scenario: " << f.name << "\n"
      << "protocol: " << g.protocol << "\n"
      << "phase_fidelity: " << num(report.phase_sensitive) << "\n"
      << "population_fidelity: " << num(report.population) << "\n"
      << "worst_case_state: " << report.worst_case_state << "\n"
      << "worst_case_fidelity: " << num(report.worst_case_fidelity) << "\n"
      << "max_leakage: " << num(report.max_leakage) << "\n";
  const auto& b = *report.budget;
  txt << "error_budget.spontaneous_emission: " << num(b.spontaneous_emission) << "\n"
      << "error_budget.blockade_leakage: " << num(b.blockade_leakage) << "\n"
      << "error_budget.control_rotation: " << num(b.control_rotation) << "\n"
      << "error_budget.nondeterministic_excitation: " << num(b.nondeterministic_excitation) << "\n"
      << "error_budget.total_error: " << num(b.total_error()) << "\n"
      << "error_budget.fidelity: " << num(b.fidelity()) << "\n";
  out.write("gate_report.txt", txt.str());
}

void cmd_budget(const ScenarioFile& f, OutputWriter& out) {
  const auto& g = *f.gate;
  const auto b = budget_for(g);
  ojson j;
  j["scenario"] = f.name;
  j["protocol"] = g.protocol;
  j["error_budget"] = budget_json(b);
  if (g.protocol == "toffoli" || g.protocol == "stabilizer-direct") {
    j["E_r1"] = b.blockade_leakage;
  } else {
    auto probe = g.scenario;
    const double hi = std::max(std::abs(probe.raman_detuning()), 1e-3);
    const auto opt = gates::optimal_raman_rabi(probe, 1e-3 * hi, hi);
    j["optimal_omega_eff_kHz"] = 1e3 * opt.omega_eff;
    j["optimal_fidelity"] = opt.budget.fidelity();
  }
  j["gate"] = scenario_echo(g);
  out.write("budget.json", dump(j));
}

void set_key(gates::GateScenario& s, const std::string& key, double v) {
  static const std::map<std::string, std::function<void(gates::GateScenario&, double)>> setters{
      {"V_RF_1_MHz", [](auto& s, double v) { s.V_RF_1 = v; }},
      {"V_RF_0_MHz", [](auto& s, double v) { s.V_RF_0 = v; }},
      {"omega_eff_kHz", [](auto& s, double v) { s.omega_eff = 1e-3 * v; }},
      {"omega_ry_MHz", [](auto& s, double v) { s.omega_ry = v; }},
      {"delta_MHz", [](auto& s, double v) { s.delta = v; }},
      {"Delta_MHz", [](auto& s, double v) { s.Delta = v; }},
      {"delta_prime_MHz", [](auto& s, double v) { s.delta_prime = v; }},
      {"gamma_ry_kHz", [](auto& s, double v) { s.gamma_ry = 1e-3 * v; }},
      {"delta_r_GHz", [](auto& s, double v) { s.delta_r = 1e3 * v; }},
      {"theta_rad", [](auto& s, double v) { s.theta = v; }},
  };
  setters.at(key)(s, v);
}

void cmd_sweep(const ScenarioFile& f, OutputWriter& out) {
  const auto& w = *f.sweep;
  GateSection g = *f.gate;
  std::string csv;
  if (g.protocol == "parallel") {
    csv = w.key + ",x,P_rot,budget_fidelity\n";
  } else if (g.protocol == "stabilizer-direct") {
    csv = w.key + ",delta_prime_over_omega,theta_rad,phase_fidelity\n";
  } else {
    csv = w.key + ",phase_fidelity,population_fidelity,budget_fidelity\n";
  }
  for (int i = 0; i < w.points; ++i) {
    const double v = w.from + (w.to - w.from) * i / (w.points - 1);
    set_key(g.scenario, w.key, v);
    const auto& s = g.scenario;
    csv += num(v);
    if (g.protocol == "parallel") {
      const double d = s.raman_detuning();
      // the leakage term diverges at zero Raman detuning; the rotation column is still meaningful there
      const std::string bf = d == 0.0 ? "nan" : num(gates::error_budget_parallel(s).fidelity());
      csv += "," + num((d + s.V_RF_1 - s.V_RF_0) / s.omega_eff) + "," + num(gates::rotation_probability(s, d)) + "," + bf;
    } else if (g.protocol == "stabilizer-direct") {
      const double theta = gates::stabilizer_theta(s.delta_prime, s.omega_ry);
      double fid = 1.0;
      try {
        fid = gates::stabilizer_phase_direct(s, theta).report.phase_sensitive;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PhaseUnreachable) throw;
        fid = std::nan("");
      }
      csv += "," + num(s.delta_prime / s.omega_ry) + "," + num(theta) + "," + (std::isnan(fid) ? "nan" : num(fid));
    } else {
      const auto r = run_protocol(g);
      csv += "," + num(r.phase_sensitive) + "," + num(r.population) + "," + num(budget_for(g).fidelity());
    }
    csv += "\n";
  }
  out.write("sweep.csv", csv);
}

}  // namespace

std::string version() { return "0.1.0"; }

RunManifest run(const std::string& subcommand, const ScenarioFile& f, const std::filesystem::path& output_dir,
                const RunOptions& options) {
  if (options.threads < 1) fail(ErrorKind::ConfigInvalid, "--threads must be >= 1");
  OutputWriter out(output_dir, f.output_prefix);
  if (subcommand == "wavefunction") cmd_wavefunction(f, out);
  else if (subcommand == "superposition-map") cmd_map(f, options, out);
  else if (subcommand == "pec") cmd_pec(f, options, out);
  else if (subcommand == "lattice") cmd_lattice(f, out);
  else if (subcommand == "franck-condon") cmd_franck_condon(f, out);
  else if (subcommand == "gate") cmd_gate(f, out);
  else if (subcommand == "budget") cmd_budget(f, out);
  else if (subcommand == "sweep") cmd_sweep(f, out);
  else fail(ErrorKind::ConfigInvalid, "unknown subcommand '" + subcommand + "'");

  RunManifest m;
  m.subcommand = subcommand;
  m.scenario_name = f.name;
  m.input_hash = "fnv1a64:" + hex64(fnv1a64(f.canonical));
  m.tool_version = version();
  m.timestamp = utc_now();
  m.files = out.files();
  const std::string base = "manifest_" + subcommand + ".json";
  const std::string name = f.output_prefix.empty() ? base : f.output_prefix + "_" + base;
  std::ofstream mf(output_dir / name, std::ios::binary | std::ios::trunc);
  if (!(mf << m.to_json())) fail(ErrorKind::IoError, "cannot write manifest");
  return m;
}

RunManifest run(const std::string& subcommand, const std::filesystem::path& scenario_path,
                const std::filesystem::path& output_dir, const RunOptions& options) {
  return run(subcommand, load_scenario(scenario_path, subcommand), output_dir, options);
}

}  // namespace rydfermi::cli
