#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace rydfermi::cli {

std::uint64_t fnv1a64(std::string_view bytes) noexcept;
std::string hex64(std::uint64_t v);

struct EmittedFile {
  std::string name;  // relative to the output directory
  std::size_t bytes = 0;
  std::string hash;
};

struct RunManifest {
  std::string subcommand;
  std::string scenario_name;
  std::string input_hash;
  std::string tool_version;
  std::string timestamp;  // UTC, ISO 8601
  std::vector<EmittedFile> files;

  std::string to_json() const;
};

/// Writes files into one directory and records each in the manifest.
class OutputWriter {
 public:
  OutputWriter(std::filesystem::path directory, std::string prefix);
  /// Errors: IoError.
  void write(const std::string& name, const std::string& contents);
  const std::vector<EmittedFile>& files() const noexcept { return files_; }
  const std::filesystem::path& directory() const noexcept { return directory_; }

 private:
  std::filesystem::path directory_;
  std::string prefix_;
  std::vector<EmittedFile> files_;
};

}  // namespace rydfermi::cli
