#include "rydfermi/cli/manifest.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "rydfermi/common/errors.hpp"

namespace rydfermi::cli {

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = "rydfermi";
  j["tool_version"] = tool_version;
  j["subcommand"] = subcommand;
  j["scenario"] = scenario_name;
  j["input_hash"] = input_hash;
  j["timestamp"] = timestamp;
  j["files"] = nlohmann::ordered_json::array();
  for (const auto& f : files) j["files"].push_back({{"name", f.name}, {"bytes", f.bytes}, {"fnv1a64", f.hash}});
  return j.dump(2) + "\n";
}

OutputWriter::OutputWriter(std::filesystem::path directory, std::string prefix)
    : directory_(std::move(directory)), prefix_(std::move(prefix)) {
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec) fail(ErrorKind::IoError, "cannot create " + directory_.string() + ": " + ec.message());
}

void OutputWriter::write(const std::string& name, const std::string& contents) {
  const std::string file = prefix_.empty() ? name : prefix_ + "_" + name;
  const auto path = directory_ / file;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::IoError, "cannot write " + path.string());
  out << contents;
  out.close();
  if (!out) fail(ErrorKind::IoError, "write failed for " + path.string());
  files_.push_back({file, contents.size(), hex64(fnv1a64(contents))});
}

}  // namespace rydfermi::cli
