#include "rydfermi/atomic/quantum_defects.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "rydfermi/common/errors.hpp"
#include "quantum_defects_data.hpp"

namespace rydfermi::atomic {
namespace {

double parse_j(const std::string& token) {
  const auto slash = token.find('/');
  if (slash == std::string::npos) return std::stod(token);
  return std::stod(token.substr(0, slash)) / std::stod(token.substr(slash + 1));
}

}  // namespace

const QuantumDefectTable& QuantumDefectTable::builtin() {
  static const QuantumDefectTable table = parse(detail::kQuantumDefectData, "builtin quantum_defects.dat");
  return table;
}

QuantumDefectTable QuantumDefectTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoError, "cannot open quantum-defect file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path.string());
}

QuantumDefectTable QuantumDefectTable::parse(std::string_view text, std::string_view source) {
  QuantumDefectTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string species, j_token, extra;
    int l = -1;
    double value = 0.0;
    if (!(fields >> species)) continue;
    const auto where = std::string(source) + ":" + std::to_string(line_no);
    if (!(fields >> l >> j_token >> value) || (fields >> extra))
      fail(ErrorKind::ConfigInvalid, where + ": expected 'species l j defect'");
    double j = 0.0;
    try {
      j = parse_j(j_token);
    } catch (const std::exception&) {
      fail(ErrorKind::ConfigInvalid, where + ": bad j '" + j_token + "'");
    }
    const HalfInt jj = HalfInt::from_double(j);
    if (l < 0 || (jj.twice != 2 * l + 1 && jj.twice != 2 * l - 1))
      fail(ErrorKind::ConfigInvalid, where + ": inconsistent l/j");
    if (!std::isfinite(value)) fail(ErrorKind::ConfigInvalid, where + ": defect is not finite");
    table.set(species_from_string(species), l, jj, value);
  }
  return table;
}

double QuantumDefectTable::defect(Species species, int l, HalfInt j) const noexcept {
  const auto it = table_.find({species, l, j.twice});
  return it == table_.end() ? 0.0 : it->second;
}

void QuantumDefectTable::set(Species species, int l, HalfInt j, double value) {
  if (!std::isfinite(value)) fail(ErrorKind::ConfigInvalid, "quantum defect must be finite");
  table_[{species, l, j.twice}] = value;
}

double effective_n(const RydbergLevel& level, const QuantumDefectTable& defects) {
  return level.n - defects.defect(level);
}

double level_energy(const RydbergLevel& level, const QuantumDefectTable& defects) {
  const double n_eff = effective_n(level, defects);
  return -0.5 / (n_eff * n_eff);
}

}  // namespace rydfermi::atomic
