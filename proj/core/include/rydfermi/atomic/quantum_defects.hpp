#pragma once

#include <filesystem>
#include <map>
#include <string_view>
#include <tuple>

#include "rydfermi/atomic/quantum_numbers.hpp"

namespace rydfermi::atomic {

/// (species, l, j) -> quantum defect. Missing entries are hydrogenic (0).
class QuantumDefectTable {
 public:
  QuantumDefectTable() = default;

  /// The table shipped in data/quantum_defects.dat, compiled in.
  static const QuantumDefectTable& builtin();
  static QuantumDefectTable load(const std::filesystem::path& path);
  /// Parses the `species l j defect` text format; `source` names the input in diagnostics.
  static QuantumDefectTable parse(std::string_view text, std::string_view source = "<string>");

  double defect(Species species, int l, HalfInt j) const noexcept;
  double defect(const RydbergLevel& level) const noexcept { return defect(level.species, level.l, level.j); }

  void set(Species species, int l, HalfInt j, double value);
  std::size_t size() const noexcept { return table_.size(); }
  bool empty() const noexcept { return table_.empty(); }

 private:
  std::map<std::tuple<Species, int, int>, double> table_;
};

/// E = -1/(2 (n - delta)^2), atomic units.
double level_energy(const RydbergLevel& level, const QuantumDefectTable& defects);

/// n - delta for the level.
double effective_n(const RydbergLevel& level, const QuantumDefectTable& defects);

}  // namespace rydfermi::atomic
