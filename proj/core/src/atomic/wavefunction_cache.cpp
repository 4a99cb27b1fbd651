#include "rydfermi/atomic/wavefunction_cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>

#include "rydfermi/common/errors.hpp"

namespace rydfermi::atomic {
namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string header(const RydbergLevel& level, const RadialGrid& grid) {
  return "RWF1 " + std::string(to_string(level.species)) + " " + std::to_string(level.n) + " " +
         std::to_string(level.l) + " " + to_string(level.j) + " " + fmt17(grid.r_min) + " " + fmt17(grid.r_max) +
         " " + fmt17(grid.step);
}

}  // namespace

WavefunctionCache::WavefunctionCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::optional<WavefunctionCache> WavefunctionCache::from_environment() {
  const char* dir = std::getenv("RYDFERMI_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return WavefunctionCache(dir);
}

std::filesystem::path WavefunctionCache::path_for(const RydbergLevel& level, double defect,
                                                  const RadialGrid& grid) const {
  // the key must capture everything the solver depends on
  std::string key = std::string(to_string(level.species)) + "_n" + std::to_string(level.n) + "_l" +
                    std::to_string(level.l) + "_j" + std::to_string(level.j.twice) + "_d" + fmt17(defect) + "_" +
                    fmt17(grid.r_min) + "_" + fmt17(grid.r_max) + "_" + fmt17(grid.step);
  for (char& c : key)
    if (c == '+' || c == '/') c = '_';
  return directory_ / (key + ".rwf");
}

std::optional<RadialWavefunction> WavefunctionCache::load(const RydbergLevel& level, double defect,
                                                          const RadialGrid& grid) const {
  std::ifstream in(path_for(level, defect, grid));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != header(level, grid)) return std::nullopt;
  std::vector<double> values;
  values.reserve(grid.size());
  while (std::getline(in, line)) values.push_back(std::strtod(line.c_str(), nullptr));
  if (values.size() != grid.size()) return std::nullopt;
  const double n_eff = level.n - defect;
  RadialWavefunction wf(level, grid, -0.5 / (n_eff * n_eff), std::move(values));
  if (!wf.norm_checked()) return std::nullopt;
  return wf;
}

void WavefunctionCache::store(const RadialWavefunction& wf, double defect) const {
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec) fail(ErrorKind::IoError, "cannot create cache directory " + directory_.string());
  const auto target = path_for(wf.level(), defect, wf.grid());
  static std::atomic<unsigned long> counter{0};
  std::ostringstream suffix;
  suffix << ".tmp." << std::this_thread::get_id() << "." << counter++;
  auto tmp = target;
  tmp += suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) fail(ErrorKind::IoError, "cannot write cache file " + tmp.string());
    out << header(wf.level(), wf.grid()) << '\n';
    for (double x : wf.values()) out << fmt17(x) << '\n';
    if (!out) fail(ErrorKind::IoError, "short write to cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    fail(ErrorKind::IoError, "cannot move cache file into place: " + target.string());
  }
}

RadialWavefunction WavefunctionCache::get_or_compute(const RydbergLevel& level, const QuantumDefectTable& defects,
                                                     const RadialGrid& grid) const {
  const double defect = defects.defect(level);
  if (auto hit = load(level, defect, grid)) return *std::move(hit);
  RadialWavefunction wf = radial_wavefunction(level, defects, grid);
  store(wf, defect);
  return wf;
}

}  // namespace rydfermi::atomic
