#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rydfermi::gates {

enum class CentralRole { Control, Target, Auxiliary };

/// Plaquette qubits plus one central atom, central index fastest:
///   index = plaquette_bits * central_dim + c
/// Plaquette qubit l is bit (size - 1 - l) of plaquette_bits, so qubit 0 is
/// the most significant. Central levels are |0>, |1> and, when central_dim
/// is 3, the Rydberg level |r> = 2.
struct PlaquetteRegister {
  int plaquette_size = 4;
  CentralRole central_role = CentralRole::Control;
  int central_dim = 3;

  /// Throws ConfigInvalid unless size is 3, 4 or 6 and central_dim is 2 or 3.
  void validate() const;
  std::size_t plaquette_states() const noexcept { return std::size_t{1} << plaquette_size; }
  std::size_t dimension() const noexcept { return plaquette_states() * static_cast<std::size_t>(central_dim); }
  std::size_t index(std::uint32_t plaquette_bits, int central) const noexcept {
    return plaquette_bits * static_cast<std::size_t>(central_dim) + static_cast<std::size_t>(central);
  }
  static int bit(std::uint32_t plaquette_bits, int qubit, int size) noexcept {
    return static_cast<int>((plaquette_bits >> (size - 1 - qubit)) & 1u);
  }
  int bit(std::uint32_t plaquette_bits, int qubit) const noexcept { return bit(plaquette_bits, qubit, plaquette_size); }
  /// Full-register indices of the qubit subspace (central in {0, 1}), in the
  /// order of a central_dim = 2 register.
  std::vector<std::size_t> qubit_subspace() const;
  /// Label such as "0110|1" (plaquette bits, then the central level).
  std::string label(std::size_t index) const;
};

int popcount(std::uint32_t bits) noexcept;

}  // namespace rydfermi::gates
