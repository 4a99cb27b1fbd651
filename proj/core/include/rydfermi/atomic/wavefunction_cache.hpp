#pragma once

#include <filesystem>
#include <optional>

#include "rydfermi/atomic/radial.hpp"

namespace rydfermi::atomic {

/// On-disk read-through cache of radial wavefunctions. A hit returns exactly
/// what a fresh computation would (values are stored with 17 significant
/// digits); files are written to a temporary name and renamed into place.
class WavefunctionCache {
 public:
  explicit WavefunctionCache(std::filesystem::path directory);

  /// Uses RYDFERMI_CACHE_DIR when set and non-empty.
  static std::optional<WavefunctionCache> from_environment();

  const std::filesystem::path& directory() const noexcept { return directory_; }

  std::optional<RadialWavefunction> load(const RydbergLevel& level, double defect, const RadialGrid& grid) const;
  void store(const RadialWavefunction& wf, double defect) const;

  RadialWavefunction get_or_compute(const RydbergLevel& level, const QuantumDefectTable& defects,
                                    const RadialGrid& grid) const;

  std::filesystem::path path_for(const RydbergLevel& level, double defect, const RadialGrid& grid) const;

 private:
  std::filesystem::path directory_;
};

}  // namespace rydfermi::atomic
