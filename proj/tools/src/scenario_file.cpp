#include "rydfermi/cli/scenario_file.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

#include "rydfermi/common/errors.hpp"
#include "rydfermi/lattice/optical_lattice.hpp"

namespace rydfermi::cli {

using nlohmann::json;

namespace {

// Walks one JSON object, remembering which keys were consumed so leftovers
// can be reported as unknown.
class Section {
 public:
  Section(const json& object, std::string path, std::vector<Diagnostic>& diags)
      : object_(object), path_(std::move(path)), diags_(diags) {
    if (!object_.is_object()) report("", "must be an object");
  }

  ~Section() {
    if (!object_.is_object()) return;
    for (const auto& [key, value] : object_.items())
      if (!seen_.count(key)) report(key, "unknown key");
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return object_.is_object() && object_.contains(key);
  }

  std::optional<double> number(const std::string& key, bool required = false) {
    if (!has(key)) {
      if (required) report(key, "required key is missing");
      return std::nullopt;
    }
    const auto& v = object_.at(key);
    if (!v.is_number()) {
      report(key, "must be a number");
      return std::nullopt;
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
      report(key, "must be finite");
      return std::nullopt;
    }
    return x;
  }

  std::optional<int> integer(const std::string& key, bool required = false) {
    if (!has(key)) {
      if (required) report(key, "required key is missing");
      return std::nullopt;
    }
    const auto& v = object_.at(key);
    if (!v.is_number_integer()) {
      report(key, "must be an integer");
      return std::nullopt;
    }
    return v.get<int>();
  }

  std::optional<std::string> text(const std::string& key, bool required = false) {
    if (!has(key)) {
      if (required) report(key, "required key is missing");
      return std::nullopt;
    }
    const auto& v = object_.at(key);
    if (!v.is_string()) {
      report(key, "must be a string");
      return std::nullopt;
    }
    return v.get<std::string>();
  }

  std::optional<std::vector<double>> numbers(const std::string& key) {
    if (!has(key)) return std::nullopt;
    const auto& v = object_.at(key);
    std::vector<double> out;
    if (!v.is_array()) {
      report(key, "must be an array of numbers");
      return std::nullopt;
    }
    for (const auto& e : v) {
      if (!e.is_number()) {
        report(key, "must be an array of numbers");
        return std::nullopt;
      }
      out.push_back(e.get<double>());
    }
    return out;
  }

  const json* child(const std::string& key) {
    if (!has(key)) return nullptr;
    return &object_.at(key);
  }

  void report(const std::string& key, const std::string& message) {
    diags_.push_back({key.empty() ? path_ : (path_.empty() ? key : path_ + "." + key), message});
  }

  const std::string& path() const { return path_; }
  std::vector<Diagnostic>& diags() { return diags_; }

 private:
  const json& object_;
  std::string path_;
  std::vector<Diagnostic>& diags_;
  std::set<std::string> seen_;
};

void positive(Section& s, const std::string& key, std::optional<double> v) {
  if (v && *v <= 0) s.report(key, "must be > 0");
}

void non_negative(Section& s, const std::string& key, std::optional<double> v) {
  if (v && *v < 0) s.report(key, "must be >= 0");
}

AtomSection read_atom(Section& s) {
  AtomSection a;
  if (auto sp = s.text("species", true)) {
    try {
      a.species = atomic::species_from_string(*sp);
    } catch (const Error&) {
      s.report("species", "unknown species '" + *sp + "' (H, Rb or Cs)");
    }
  }
  a.n = s.integer("n", true).value_or(a.n);
  a.l = s.integer("l", true).value_or(a.l);
  a.j = s.number("j", true).value_or(a.j);
  a.mj = s.number("mj", true).value_or(a.mj);
  a.theta_R = s.number("theta_R_rad");
  a.theta_B = s.number("theta_B_rad");
  if (a.theta_R.has_value() != a.theta_B.has_value())
    s.report(a.theta_R ? "theta_B_rad" : "theta_R_rad", "both polarization angles are needed");
  try {
    atomic::RydbergLevel::make(a.species, a.n, a.l, a.j, a.mj).validate();
  } catch (const std::exception& e) {
    s.report("n", e.what());
  }
  return a;
}

MapBlock read_map(Section& s) {
  MapBlock m;
  if (auto plane = s.text("plane")) {
    if (*plane == "xy") m.plane = scattering::MapPlane::XY;
    else if (*plane == "rho-z") m.plane = scattering::MapPlane::RhoZ;
    else s.report("plane", "must be \"xy\" or \"rho-z\"");
  }
  m.extent_nm = s.number("extent_nm", true).value_or(0.0);
  positive(s, "extent_nm", m.extent_nm);
  m.resolution = s.integer("resolution").value_or(m.resolution);
  if (m.resolution < 16) s.report("resolution", "must be >= 16");
  m.crop_radius_nm = s.number("crop_radius_nm").value_or(0.0);
  non_negative(s, "crop_radius_nm", m.crop_radius_nm);
  return m;
}

PecBlock read_pec(Section& s) {
  PecBlock p;
  if (auto v = s.numbers("manifold_n"))
    for (double n : *v) p.manifold_n.push_back(static_cast<int>(n));
  if (const json* nb = s.child("neighbours")) {
    bool ok = nb->is_array();
    if (ok)
      for (const auto& e : *nb) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
          ok = false;
          break;
        }
        p.neighbours.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    if (!ok) s.report("neighbours", "must be an array of [n, l] pairs");
  }
  p.separation_from_nm = s.number("separation_from_nm", true).value_or(0.0);
  p.separation_to_nm = s.number("separation_to_nm", true).value_or(0.0);
  p.points = s.integer("points", true).value_or(0);
  positive(s, "separation_from_nm", p.separation_from_nm);
  if (p.separation_to_nm <= p.separation_from_nm) s.report("separation_to_nm", "must exceed separation_from_nm");
  if (p.points < 2) s.report("points", "must be >= 2");
  if (auto t = s.integer("truncation")) {
    if (*t < 1) s.report("truncation", "must be >= 1");
    else p.truncation = static_cast<std::size_t>(*t);
  }
  p.max_energy_gap_GHz = s.number("max_energy_gap_GHz").value_or(0.0);
  if (auto d = s.numbers("direction")) {
    const double n2 = d->size() == 3 ? (*d)[0] * (*d)[0] + (*d)[1] * (*d)[1] + (*d)[2] * (*d)[2] : 0.0;
    if (n2 == 0.0) s.report("direction", "must be a nonzero 3-vector");
    else p.direction = {(*d)[0], (*d)[1], (*d)[2]};
  }
  return p;
}

ScatteringSection read_scattering(Section& s, atomic::Species species) {
  ScatteringSection out;
  out.model = scattering::ScatteringModel::defaults(species);
  if (auto v = s.number("a_s")) out.model.a_s = *v;
  if (auto v = s.numbers("s_range_coeffs")) out.model.s_range_coeffs = *v;
  if (auto v = s.number("p_background")) out.model.p_background = *v;
  if (auto v = s.number("p_res_k")) out.model.p_res_k = *v;
  if (auto v = s.number("p_res_gamma")) out.model.p_res_gamma = *v;
  non_negative(s, "p_res_gamma", out.model.p_res_gamma);
  if (const json* m = s.child("map")) {
    Section ms(*m, s.path() + ".map", s.diags());
    out.map = read_map(ms);
  }
  if (const json* p = s.child("pec")) {
    Section ps(*p, s.path() + ".pec", s.diags());
    out.pec = read_pec(ps);
  }
  return out;
}

LatticeSection read_lattice(Section& s) {
  LatticeSection l;
  l.wavelength_nm = s.number("wavelength_nm", true).value_or(0.0);
  l.depth_over_2pi_Hz = s.number("depth_over_2pi_Hz", true).value_or(0.0);
  l.theta_rad = s.number("theta_rad").value_or(0.0);
  positive(s, "wavelength_nm", l.wavelength_nm);
  positive(s, "depth_over_2pi_Hz", l.depth_over_2pi_Hz);
  l.mass_amu = s.number("mass_amu");
  positive(s, "mass_amu", l.mass_amu);
  l.qubit_separation_nm = s.number("qubit_separation_nm");
  if (l.qubit_separation_nm) {
    positive(s, "qubit_separation_nm", l.qubit_separation_nm);
    if (!s.has("theta_rad") || l.theta_rad == 0.0)
      l.theta_rad = std::numbers::pi * *l.qubit_separation_nm / std::max(l.wavelength_nm, 1e-300);
  }
  if (l.theta_rad < 0 || l.theta_rad >= std::numbers::pi / 2) s.report("theta_rad", "must lie in [0, pi/2)");
  l.intermediate_center_nm = s.number("intermediate_center_nm");
  l.n_levels = s.integer("n_levels");
  if (l.n_levels && *l.n_levels < 1) s.report("n_levels", "must be >= 1");
  l.cutoff = s.text("cutoff").value_or(l.cutoff);
  if (l.cutoff != "converged" && l.cutoff != "physical") s.report("cutoff", "must be \"converged\" or \"physical\"");
  l.convention = s.text("convention").value_or(l.convention);
  if (l.convention != "magnitude" && l.convention != "signed")
    s.report("convention", "must be \"magnitude\" or \"signed\"");
  l.grid_points = s.integer("grid_points").value_or(l.grid_points);
  if (l.grid_points < 16) s.report("grid_points", "must be >= 16");
  return l;
}

const std::set<std::string> kProtocols{"parallel", "toffoli", "stabilizer-direct", "stabilizer-parallel"};

GateSection read_gate(Section& s) {
  GateSection g;
  g.protocol = s.text("protocol").value_or(g.protocol);
  if (!kProtocols.count(g.protocol))
    s.report("protocol", "must be one of parallel, toffoli, stabilizer-direct, stabilizer-parallel");
  auto& sc = g.scenario;
  sc.plaquette_size = s.integer("plaquette_size").value_or(4);
  if (sc.plaquette_size != 3 && sc.plaquette_size != 4 && sc.plaquette_size != 6)
    s.report("plaquette_size", "must be 3, 4 or 6");
  sc.V_RF_1 = s.number("V_RF_1_MHz", true).value_or(0.0);
  sc.V_RF_0 = s.number("V_RF_0_MHz").value_or(0.0);
  sc.omega_ry = s.number("omega_ry_MHz", true).value_or(0.0);
  sc.omega_eff = 1e-3 * s.number("omega_eff_kHz", g.protocol == "parallel" || g.protocol == "stabilizer-parallel").value_or(0.0);
  sc.delta = s.number("delta_MHz");
  sc.Delta = s.number("Delta_MHz");
  sc.delta_prime = s.number("delta_prime_MHz").value_or(0.0);
  sc.gamma_ry = 1e-3 * s.number("gamma_ry_kHz").value_or(0.0);
  sc.delta_r = 1e3 * s.number("delta_r_GHz").value_or(0.0);
  sc.theta = s.number("theta_rad").value_or(0.0);
  non_negative(s, "V_RF_1_MHz", sc.V_RF_1);
  non_negative(s, "omega_ry_MHz", sc.omega_ry);
  non_negative(s, "omega_eff_kHz", sc.omega_eff);
  non_negative(s, "gamma_ry_kHz", sc.gamma_ry);
  non_negative(s, "delta_r_GHz", sc.delta_r);
  if (sc.theta < 0 || sc.theta >= std::numbers::pi / 2) s.report("theta_rad", "must lie in [0, pi/2)");
  return g;
}

const std::set<std::string> kSweepKeys{"V_RF_1_MHz", "V_RF_0_MHz", "omega_eff_kHz", "omega_ry_MHz", "delta_MHz",
                                       "Delta_MHz", "delta_prime_MHz", "gamma_ry_kHz", "delta_r_GHz", "theta_rad"};

SweepSection read_sweep(Section& s) {
  SweepSection w;
  w.key = s.text("key", true).value_or("");
  if (!w.key.empty() && !kSweepKeys.count(w.key)) s.report("key", "not a sweepable gate key");
  w.from = s.number("from", true).value_or(0.0);
  w.to = s.number("to", true).value_or(0.0);
  w.points = s.integer("points", true).value_or(0);
  if (w.points < 2) s.report("points", "must be >= 2");
  return w;
}

ScenarioFile read(const std::string& text, const std::string& subcommand, std::vector<Diagnostic>& diags) {
  ScenarioFile f;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    diags.push_back({"", std::string("not valid JSON: ") + e.what()});
    return f;
  }
  if (!doc.is_object()) {
    diags.push_back({"", "top level must be an object"});
    return f;
  }
  f.canonical = doc.dump();
  Section top(doc, "", diags);
  f.schema_version = top.integer("schema_version", true).value_or(kSchemaVersion);
  if (f.schema_version != kSchemaVersion) top.report("schema_version", "unsupported schema version");
  f.name = top.text("name").value_or("");
  if (const json* a = top.child("atom")) {
    Section s(*a, "atom", diags);
    f.atom = read_atom(s);
  }
  if (const json* sc = top.child("scattering")) {
    Section s(*sc, "scattering", diags);
    f.scattering = read_scattering(s, f.atom ? f.atom->species : atomic::Species::Rb);
  }
  if (const json* l = top.child("lattice")) {
    Section s(*l, "lattice", diags);
    f.lattice = read_lattice(s);
    if (!f.lattice->mass_amu && !f.atom) s.report("mass_amu", "required when there is no atom section");
  }
  if (const json* g = top.child("gate")) {
    Section s(*g, "gate", diags);
    f.gate = read_gate(s);
    f.gate->scenario.name = f.name;
  }
  if (const json* w = top.child("sweep")) {
    Section s(*w, "sweep", diags);
    f.sweep = read_sweep(s);
  }
  if (const json* o = top.child("output")) {
    Section s(*o, "output", diags);
    f.output_prefix = s.text("prefix").value_or("");
    if (f.output_prefix.find_first_of("/\\") != std::string::npos) s.report("prefix", "must not contain path separators");
  }
  if (!subcommand.empty()) {
    const auto& all = subcommands();
    if (std::find(all.begin(), all.end(), subcommand) == all.end()) {
      diags.push_back({"", "unknown subcommand '" + subcommand + "'"});
    } else {
      for (const auto& section : required_sections(subcommand)) {
        const bool present = (section == "atom" && f.atom) || (section == "scattering" && f.scattering) ||
                             (section == "lattice" && f.lattice) || (section == "gate" && f.gate) ||
                             (section == "sweep" && f.sweep) || (section == "scattering.map" && f.scattering && f.scattering->map) ||
                             (section == "scattering.pec" && f.scattering && f.scattering->pec);
        if (!present) diags.push_back({section, "required by '" + subcommand + "'"});
      }
    }
  }
  return f;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> all{"wavefunction", "superposition-map", "pec",    "lattice",
                                            "franck-condon", "gate",             "budget", "sweep"};
  return all;
}

std::vector<std::string> required_sections(const std::string& subcommand) {
  static const std::map<std::string, std::vector<std::string>> table{
      {"wavefunction", {"atom"}},
      {"superposition-map", {"atom", "scattering", "scattering.map"}},
      {"pec", {"atom", "scattering", "scattering.pec"}},
      {"lattice", {"lattice"}},
      {"franck-condon", {"lattice"}},
      {"gate", {"gate"}},
      {"budget", {"gate"}},
      {"sweep", {"gate", "sweep"}},
  };
  const auto it = table.find(subcommand);
  return it == table.end() ? std::vector<std::string>{} : it->second;
}

double ScenarioFile::mass_amu() const {
  if (lattice && lattice->mass_amu) return *lattice->mass_amu;
  if (atom) return lattice::species_mass_amu(atom->species);
  fail(ErrorKind::ConfigInvalid, "lattice.mass_amu: no mass and no atom section");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Diagnostic> validate_text(const std::string& text, const std::string& subcommand) {
  std::vector<Diagnostic> diags;
  read(text, subcommand, diags);
  return diags;
}

std::vector<Diagnostic> validate(const std::filesystem::path& path, const std::string& subcommand) {
  return validate_text(read_file(path), subcommand);
}

ScenarioFile parse_scenario(const std::string& text, const std::string& subcommand) {
  std::vector<Diagnostic> diags;
  ScenarioFile f = read(text, subcommand, diags);
  if (!diags.empty()) {
    const auto& d = diags.front();
    fail(ErrorKind::ConfigInvalid, (d.key.empty() ? std::string("scenario") : d.key) + ": " + d.message);
  }
  return f;
}

ScenarioFile load_scenario(const std::filesystem::path& path, const std::string& subcommand) {
  return parse_scenario(read_file(path), subcommand);
}

}  // namespace rydfermi::cli
