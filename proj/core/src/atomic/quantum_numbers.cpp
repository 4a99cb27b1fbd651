#include "rydfermi/atomic/quantum_numbers.hpp"

#include <cmath>
#include <cstdlib>

#include "rydfermi/common/errors.hpp"

namespace rydfermi::atomic {

std::string_view to_string(Species species) noexcept {
  switch (species) {
    case Species::H: return "H";
    case Species::Rb: return "Rb";
    case Species::Cs: return "Cs";
  }
  return "?";
}

Species species_from_string(std::string_view name) {
  if (name == "H") return Species::H;
  if (name == "Rb") return Species::Rb;
  if (name == "Cs") return Species::Cs;
  fail(ErrorKind::ConfigInvalid, "unknown species '" + std::string(name) + "'");
}

HalfInt HalfInt::from_double(double x) {
  const double t = 2.0 * x;
  const double rounded = std::round(t);
  if (!std::isfinite(t) || std::abs(t - rounded) > 1e-9)
    fail(ErrorKind::InvalidQuantumNumbers, "value " + std::to_string(x) + " is not a half-integer");
  return HalfInt{static_cast<int>(rounded)};
}

std::string to_string(HalfInt h) {
  if (h.twice % 2 == 0) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

char orbital_letter(int l) noexcept {
  static constexpr std::string_view letters = "SPDFGHIKLMNOQRTUV";
  if (l >= 0 && static_cast<std::size_t>(l) < letters.size()) return letters[static_cast<std::size_t>(l)];
  return '?';
}

RydbergLevel RydbergLevel::make(Species species, int n, int l, double j, double mj) {
  RydbergLevel level{species, n, l, HalfInt::from_double(j), HalfInt::from_double(mj)};
  level.validate();
  return level;
}

bool RydbergLevel::valid() const noexcept {
  if (n < 1 || l < 0 || l >= n) return false;
  if (j.twice != 2 * l + 1 && j.twice != 2 * l - 1) return false;
  if (j.twice < 1) return false;
  if (mj.twice % 2 == 0 || std::abs(mj.twice) > j.twice) return false;
  return true;
}

void RydbergLevel::validate() const {
  if (n < 1) fail(ErrorKind::InvalidQuantumNumbers, "n must be >= 1");
  if (l < 0 || l >= n) fail(ErrorKind::InvalidQuantumNumbers, "l must satisfy 0 <= l < n");
  if ((j.twice != 2 * l + 1 && j.twice != 2 * l - 1) || j.twice < 1)
    fail(ErrorKind::InvalidQuantumNumbers, "j must be l+1/2 or l-1/2 (got j=" + to_string(j) + ")");
  if (mj.twice % 2 == 0 || std::abs(mj.twice) > j.twice)
    fail(ErrorKind::InvalidQuantumNumbers, "m_j must be a half-integer with |m_j| <= j");
}

std::string to_string(const RydbergLevel& level) {
  std::string s(to_string(level.species));
  s += ' ';
  s += std::to_string(level.n);
  s += orbital_letter(level.l);
  s += to_string(level.j);
  s += " mj=";
  s += to_string(level.mj);
  return s;
}

}  // namespace rydfermi::atomic
