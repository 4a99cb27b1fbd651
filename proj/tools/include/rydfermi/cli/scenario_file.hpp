#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rydfermi/atomic/quantum_numbers.hpp"
#include "rydfermi/gates/scenario.hpp"
#include "rydfermi/scattering/interaction_map.hpp"
#include "rydfermi/scattering/scattering_model.hpp"

namespace rydfermi::cli {

inline constexpr int kSchemaVersion = 1;

struct Diagnostic {
  std::string key;  // dotted path, e.g. "gate.V_RF_1_MHz"
  std::string message;
};

struct AtomSection {
  atomic::Species species = atomic::Species::Rb;
  int n = 46;
  int l = 2;
  double j = 2.5;
  double mj = 2.5;
  std::optional<double> theta_R;
  std::optional<double> theta_B;
};

struct MapBlock {
  scattering::MapPlane plane = scattering::MapPlane::XY;
  double extent_nm = 0.0;
  int resolution = 64;
  double crop_radius_nm = 0.0;
};

struct PecBlock {
  std::vector<int> manifold_n;
  std::vector<std::pair<int, int>> neighbours;
  double separation_from_nm = 0.0;
  double separation_to_nm = 0.0;
  int points = 0;
  std::size_t truncation = 64;
  double max_energy_gap_GHz = 0.0;
  // ground-atom direction from the Rydberg core; in-plane by default since
  // high-m_j clouds vanish on the quantization axis
  std::array<double, 3> direction{1.0, 0.0, 0.0};
};

struct ScatteringSection {
  scattering::ScatteringModel model;
  std::optional<MapBlock> map;
  std::optional<PecBlock> pec;
};

struct LatticeSection {
  double wavelength_nm = 0.0;
  double depth_over_2pi_Hz = 0.0;
  double theta_rad = 0.0;
  std::optional<double> mass_amu;
  std::optional<double> qubit_separation_nm;
  std::optional<double> intermediate_center_nm;
  std::optional<int> n_levels;
  std::string cutoff = "converged";
  std::string convention = "magnitude";
  int grid_points = 401;
};

struct GateSection {
  std::string protocol = "parallel";  // parallel | toffoli | stabilizer-direct | stabilizer-parallel
  gates::GateScenario scenario;
};

struct SweepSection {
  std::string key;
  double from = 0.0;
  double to = 0.0;
  int points = 0;
};

struct ScenarioFile {
  int schema_version = kSchemaVersion;
  std::string name;
  std::optional<AtomSection> atom;
  std::optional<ScatteringSection> scattering;
  std::optional<LatticeSection> lattice;
  std::optional<GateSection> gate;
  std::optional<SweepSection> sweep;
  std::string output_prefix;
  /// Key-sorted compact JSON of the input, the basis of the input hash.
  std::string canonical;

  double mass_amu() const;  // lattice override, else from the atom species
};

/// Sections each subcommand needs.
std::vector<std::string> required_sections(const std::string& subcommand);
const std::vector<std::string>& subcommands();

/// Parses and checks a scenario. Unknown keys, missing required keys and
/// range violations become diagnostics; an empty list means valid. When a
/// subcommand is given, its required sections must be present.
std::vector<Diagnostic> validate_text(const std::string& text, const std::string& subcommand = "");
/// Errors: IoError when the file cannot be read.
std::vector<Diagnostic> validate(const std::filesystem::path& path, const std::string& subcommand = "");

/// Errors: ConfigInvalid naming the first offending key; IoError.
ScenarioFile parse_scenario(const std::string& text, const std::string& subcommand = "");
ScenarioFile load_scenario(const std::filesystem::path& path, const std::string& subcommand = "");

std::string read_file(const std::filesystem::path& path);

}  // namespace rydfermi::cli
