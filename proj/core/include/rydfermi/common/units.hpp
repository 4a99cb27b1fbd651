#pragma once

#include <numbers>

// Atomic units are used throughout the atomic-structure and scattering code.
// Lattice code works in nm, Hz and rad/s; gate code in MHz (cyclic) and us.
namespace rydfermi::units {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// CODATA 2018
inline constexpr double bohr_nm = 0.0529177210903;
inline constexpr double hartree_Hz = 6.579683920502e15;
inline constexpr double hartree_MHz = hartree_Hz * 1e-6;
inline constexpr double hbar_SI = 1.054571817e-34;
inline constexpr double planck_SI = 6.62607015e-34;
inline constexpr double amu_kg = 1.66053906660e-27;

constexpr double nm_to_bohr(double nm) { return nm / bohr_nm; }
constexpr double bohr_to_nm(double a0) { return a0 * bohr_nm; }
constexpr double hartree_to_MHz(double e) { return e * hartree_MHz; }
constexpr double MHz_to_hartree(double f) { return f / hartree_MHz; }

}  // namespace rydfermi::units
