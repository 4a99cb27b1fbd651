#include "rydfermi/gates/register.hpp"

#include <bit>

#include "rydfermi/common/errors.hpp"

namespace rydfermi::gates {

void PlaquetteRegister::validate() const {
  if (plaquette_size != 3 && plaquette_size != 4 && plaquette_size != 6)
    fail(ErrorKind::ConfigInvalid, "plaquette size must be 3, 4 or 6");
  if (central_dim != 2 && central_dim != 3) fail(ErrorKind::ConfigInvalid, "central dimension must be 2 or 3");
}

std::vector<std::size_t> PlaquetteRegister::qubit_subspace() const {
  std::vector<std::size_t> out;
  out.reserve(plaquette_states() * 2);
  for (std::uint32_t b = 0; b < plaquette_states(); ++b)
    for (int c = 0; c < 2; ++c) out.push_back(index(b, c));
  return out;
}

std::string PlaquetteRegister::label(std::size_t i) const {
  const auto bits = static_cast<std::uint32_t>(i / static_cast<std::size_t>(central_dim));
  const int c = static_cast<int>(i % static_cast<std::size_t>(central_dim));
  std::string s;
  for (int l = 0; l < plaquette_size; ++l) s += static_cast<char>('0' + bit(bits, l));
  s += '|';
  s += c == 2 ? 'r' : static_cast<char>('0' + c);
  return s;
}

int popcount(std::uint32_t bits) noexcept { return std::popcount(bits); }

}  // namespace rydfermi::gates
