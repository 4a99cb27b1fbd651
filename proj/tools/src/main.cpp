#include <iostream>

#include "CLI11.hpp"
#include "rydfermi/cli/commands.hpp"
#include "rydfermi/common/errors.hpp"

int main(int argc, char** argv) {
  using namespace rydfermi;
  CLI::App app{"rydfermi: Rydberg-Fermi gate simulations from a scenario file"};
  app.set_version_flag("--version", cli::version());
  app.require_subcommand(1);

  cli::RunOptions options;
  std::string scenario;
  std::string output_dir = "out";
  app.add_option("--threads", options.threads, "Cap on worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--strict", options.strict, "Treat p-wave resonance crossings as errors");

  for (const auto& name : cli::subcommands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("scenario", scenario, "Scenario JSON file")->required();
    sub->add_option("-o,--output-dir", output_dir, "Directory for CSV/JSON outputs");
  }
  std::string for_command;
  auto* val = app.add_subcommand("validate", "Check a scenario file and list diagnostics");
  val->add_option("scenario", scenario, "Scenario JSON file")->required();
  val->add_option("--for", for_command, "Also require the sections this subcommand needs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (val->parsed()) {
      const auto diags = cli::validate(scenario, for_command);
      for (const auto& d : diags) std::cout << (d.key.empty() ? "<file>" : d.key) << ": " << d.message << "\n";
      if (diags.empty()) std::cout << "ok\n";
      return diags.empty() ? 0 : 2;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    const auto manifest = cli::run(command, scenario, output_dir, options);
    for (const auto& f : manifest.files) std::cout << output_dir << "/" << f.name << "\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
