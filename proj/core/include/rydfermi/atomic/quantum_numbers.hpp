#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace rydfermi::atomic {

enum class Species { H, Rb, Cs };

std::string_view to_string(Species species) noexcept;
Species species_from_string(std::string_view name);

/// A half-integer stored as twice its value so comparisons stay exact.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
  /// Throws InvalidQuantumNumbers when x is not a multiple of 1/2.
  static HalfInt from_double(double x);

  constexpr double value() const { return 0.5 * twice; }
  auto operator<=>(const HalfInt&) const = default;
};

std::string to_string(HalfInt h);

struct RydbergLevel {
  Species species = Species::H;
  int n = 1;
  int l = 0;
  HalfInt j = HalfInt::from_twice(1);
  HalfInt mj = HalfInt::from_twice(1);

  static RydbergLevel make(Species species, int n, int l, double j, double mj);

  bool valid() const noexcept;
  /// Throws InvalidQuantumNumbers with a reason when !valid().
  void validate() const;

  auto operator<=>(const RydbergLevel&) const = default;
};

/// e.g. "Rb 46D5/2 mj=5/2"
std::string to_string(const RydbergLevel& level);

char orbital_letter(int l) noexcept;

}  // namespace rydfermi::atomic
