#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rydfermi/cli/commands.hpp"
#include "rydfermi/cli/scenario_file.hpp"
#include "rydfermi/common/errors.hpp"

namespace fs = std::filesystem;
using namespace rydfermi;
using nlohmann::json;

namespace {

fs::path scenario(const std::string& name) { return fs::path(RYDFERMI_SCENARIO_DIR) / (name + ".json"); }

fs::path scratch(const std::string& tag) {
  auto p = fs::temp_directory_path() / ("rydfermi_cli_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<double>> read_csv(const fs::path& p) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(slurp(p));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell == "nan" ? std::nan("") : std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

json gate_doc() {
  return json::parse(R"({
    "schema_version": 1, "name": "t",
    "gate": {"protocol": "toffoli", "V_RF_1_MHz": 354.0, "omega_ry_MHz": 35.0, "gamma_ry_kHz": 25.0}
  })");
}

bool has_key(const std::vector<cli::Diagnostic>& d, const std::string& key) {
  for (const auto& x : d)
    if (x.key.find(key) != std::string::npos) return true;
  return false;
}

int exit_status(const std::string& args) {
  const std::string cmd = std::string(RYDFERMI_CLI_BINARY) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST(ScenarioValidation, ShippedScenariosAreClean) {
  for (const char* name : {"rb-parallel", "rb-parallel-200", "cs-toffoli", "cs-stabilizer"}) {
    const auto d = cli::validate(scenario(name));
    EXPECT_TRUE(d.empty()) << name << ": " << (d.empty() ? "" : d.front().key + " " + d.front().message);
  }
  for (const auto& sub : {"gate", "budget", "sweep", "lattice", "franck-condon", "superposition-map", "pec"})
    EXPECT_TRUE(cli::validate(scenario("rb-parallel"), sub).empty()) << sub;
}

TEST(ScenarioValidation, MissingCouplingIsNamed) {
  auto doc = gate_doc();
  doc["gate"].erase("V_RF_1_MHz");
  const auto d = cli::validate_text(doc.dump(), "gate");
  ASSERT_FALSE(d.empty());
  EXPECT_TRUE(has_key(d, "V_RF_1_MHz"));
}

TEST(ScenarioValidation, ThetaOutOfRange) {
  for (double theta : {-0.1, 1.5707963267948966, 2.0}) {
    auto doc = gate_doc();
    doc["gate"]["theta_rad"] = theta;
    const auto d = cli::validate_text(doc.dump(), "gate");
    ASSERT_TRUE(has_key(d, "theta_rad")) << theta;
  }
  auto ok = gate_doc();
  ok["gate"]["theta_rad"] = 0.3;
  EXPECT_TRUE(cli::validate_text(ok.dump(), "gate").empty());
}

TEST(ScenarioValidation, UnknownKeysAndMissingSections) {
  auto doc = gate_doc();
  doc["gate"]["omega_ry_Mhz"] = 1.0;
  EXPECT_TRUE(has_key(cli::validate_text(doc.dump()), "omega_ry_Mhz"));
  doc = gate_doc();
  doc["colour"] = "blue";
  EXPECT_TRUE(has_key(cli::validate_text(doc.dump()), "colour"));
  EXPECT_TRUE(has_key(cli::validate_text(gate_doc().dump(), "lattice"), "lattice"));
  EXPECT_FALSE(cli::validate_text("{not json", "").empty());
}

TEST(ScenarioValidation, ParseErrorIsConfigInvalid) {
  auto doc = gate_doc();
  doc["gate"].erase("omega_ry_MHz");
  try {
    cli::parse_scenario(doc.dump(), "gate");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConfigInvalid);
    EXPECT_NE(std::string(e.what()).find("omega_ry_MHz"), std::string::npos);
  }
}

TEST(ScenarioValidation, MissingFileIsIoError) {
  try {
    cli::validate(fs::path("/nonexistent/scenario.json"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
  }
}

TEST(CliRun, ToffoliBudgetJson) {
  const auto dir = scratch("budget");
  const auto m = cli::run("budget", scenario("cs-toffoli"), dir);
  const auto j = json::parse(slurp(dir / "cs_budget.json"));
  EXPECT_NEAR(j.at("E_r1").get<double>(), 4.59e-4, 1e-5);
  EXPECT_EQ(m.files.size(), 1u);
  fs::remove_all(dir);
}

TEST(CliRun, SweepPeaksAtResonance) {
  const auto dir = scratch("sweep");
  cli::run("sweep", scenario("rb-parallel"), dir);
  const auto rows = read_csv(dir / "rb150_sweep.csv");
  ASSERT_EQ(rows.size(), 105u);
  std::size_t best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i][2] > rows[best][2]) best = i;
  EXPECT_GT(rows[best][2], 0.9999);
  // delta + V_RF_1 - V_RF_0 = 0 sits on the grid point nearest -1.3 MHz
  EXPECT_NEAR(rows[best][0], -1.3, 0.0126);
  EXPECT_LT(rows.front()[2], 0.5);
  EXPECT_LT(rows.back()[2], 0.5);
  fs::remove_all(dir);
}

TEST(CliRun, RerunIsByteIdentical) {
  const auto a = scratch("rerun_a");
  const auto b = scratch("rerun_b");
  for (const char* sub : {"gate", "sweep", "lattice", "franck-condon"}) {
    const auto ma = cli::run(sub, scenario("rb-parallel"), a, {1, false});
    const auto mb = cli::run(sub, scenario("rb-parallel"), b, {2, false});
    EXPECT_EQ(ma.input_hash, mb.input_hash);
    ASSERT_EQ(ma.files.size(), mb.files.size());
    for (std::size_t i = 0; i < ma.files.size(); ++i) {
      EXPECT_EQ(ma.files[i].hash, mb.files[i].hash) << ma.files[i].name;
      EXPECT_EQ(slurp(a / ma.files[i].name), slurp(b / mb.files[i].name)) << ma.files[i].name;
    }
  }
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(CliRun, HashTracksContentNotFormatting) {
  const auto dir = scratch("hash");
  auto doc = json::parse(slurp(scenario("cs-toffoli")));
  const auto m1 = cli::run("budget", cli::parse_scenario(doc.dump()), dir);
  const auto m2 = cli::run("budget", cli::parse_scenario(doc.dump(4)), dir);
  doc["gate"]["omega_ry_MHz"] = 30.0;
  const auto m3 = cli::run("budget", cli::parse_scenario(doc.dump()), dir);
  EXPECT_EQ(m1.input_hash, m2.input_hash);
  EXPECT_NE(m1.input_hash, m3.input_hash);
  fs::remove_all(dir);
}

TEST(CliRun, ManifestListsEveryFile) {
  const auto dir = scratch("manifest");
  for (const char* sub : {"wavefunction", "lattice", "franck-condon", "gate", "budget"}) {
    const auto m = cli::run(sub, scenario("rb-parallel"), dir);
    const auto j = json::parse(slurp(dir / ("rb150_manifest_" + std::string(sub) + ".json")));
    EXPECT_EQ(j.at("files").size(), m.files.size());
    EXPECT_EQ(j.at("input_hash"), m.input_hash);
    for (const auto& f : m.files) EXPECT_TRUE(fs::exists(dir / f.name)) << f.name;
  }
  std::size_t listed = 0, manifests = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto name = e.path().filename().string();
    if (name.find("manifest") != std::string::npos) {
      ++manifests;
      listed += json::parse(slurp(e.path())).at("files").size();
    }
  }
  EXPECT_EQ(manifests, 5u);
  std::size_t total = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++total;
  EXPECT_EQ(listed + manifests, total);
  fs::remove_all(dir);
}

TEST(CliRun, CsvUsesLfAndPlainDecimals) {
  const auto dir = scratch("format");
  cli::run("lattice", scenario("rb-parallel"), dir);
  const auto text = slurp(dir / "rb150_lattice.csv");
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
  fs::remove_all(dir);
}

TEST(CliBinary, ExitCodes) {
  const auto dir = scratch("exit");
  EXPECT_EQ(exit_status("budget " + scenario("cs-toffoli").string() + " -o " + dir.string()), 0);
  EXPECT_EQ(exit_status("validate " + scenario("rb-parallel").string()), 0);

  const auto bad = dir / "bad.json";
  auto doc = gate_doc();
  doc["gate"].erase("V_RF_1_MHz");
  std::ofstream(bad) << doc.dump();
  EXPECT_EQ(exit_status("gate " + bad.string() + " -o " + dir.string()), 2);
  EXPECT_EQ(exit_status("validate " + bad.string()), 2);
  EXPECT_EQ(exit_status("nosuchcommand"), 2);

  // an unreachable stabilizer phase depends only on the requested theta, so it counts as a config error
  const auto unreachable = dir / "unreachable.json";
  doc = json::parse(R"({"schema_version": 1, "name": "u",
    "gate": {"protocol": "stabilizer-direct", "V_RF_1_MHz": 1.0, "omega_ry_MHz": 10.0, "theta_rad": 0.01}})");
  std::ofstream(unreachable) << doc.dump();
  EXPECT_EQ(exit_status("gate " + unreachable.string() + " -o " + dir.string()), 2);

  // an unconverged motional cutoff is numerical
  const auto cutoff = dir / "cutoff.json";
  doc = json::parse(R"({"schema_version": 1, "name": "c",
    "lattice": {"wavelength_nm": 800.0, "depth_over_2pi_Hz": 10.0e6, "qubit_separation_nm": 150.0,
                "n_levels": 3, "cutoff": "converged", "mass_amu": 86.909}})");
  std::ofstream(cutoff) << doc.dump();
  EXPECT_EQ(exit_status("franck-condon " + cutoff.string() + " -o " + dir.string()), 3);

  EXPECT_EQ(exit_status("gate /nonexistent/x.json -o " + dir.string()), 4);
  fs::create_directories(dir / "blocked");
  std::ofstream(dir / "blocked" / "file") << "x";
  EXPECT_EQ(exit_status("budget " + scenario("cs-toffoli").string() + " -o " + (dir / "blocked" / "file").string()), 4);
  fs::remove_all(dir);
}
