#pragma once

#include <filesystem>
#include <string>

#include "rydfermi/cli/manifest.hpp"
#include "rydfermi/cli/scenario_file.hpp"

namespace rydfermi::cli {

struct RunOptions {
  int threads = 1;
  bool strict = false;
};

/// Runs one subcommand and writes its CSV/JSON outputs plus manifest.json.
RunManifest run(const std::string& subcommand, const std::filesystem::path& scenario_path,
                const std::filesystem::path& output_dir, const RunOptions& options = {});

/// Same, from an already parsed scenario; input_hash is taken from its canonical text.
RunManifest run(const std::string& subcommand, const ScenarioFile& scenario, const std::filesystem::path& output_dir,
                const RunOptions& options = {});

std::string version();

}  // namespace rydfermi::cli
