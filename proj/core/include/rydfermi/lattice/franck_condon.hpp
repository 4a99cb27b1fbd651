#pragma once

#include <vector>

#include "rydfermi/lattice/optical_lattice.hpp"

namespace rydfermi::lattice {

/// <a|b> for 1D harmonic-oscillator eigenfunctions with arbitrary centres,
/// frequencies and indices, standard Hermite sign convention. Exact up to
/// rounding: the product is a Gaussian times a polynomial and is integrated
/// by a Gauss-Hermite rule of sufficient order.
double franck_condon(const WannierMode& a, const WannierMode& b);

struct IntermediateTrap {
  double center_nm = 0.0;
  double omega = 0.0;  // rad/s
};

enum class OverlapConvention {
  Signed,     // f as computed; parity makes neighbouring terms alternate
  Magnitude,  // f replaced by |f|, F = sum |f_0n f_1n|
};

enum class CutoffPolicy {
  Physical,   // n_levels is the number of bound levels; no convergence check
  Converged,  // CutoffTooSmall if n_levels + 5 changes F by more than 1%
};

struct FranckCondonOptions {
  OverlapConvention convention = OverlapConvention::Magnitude;
  CutoffPolicy cutoff = CutoffPolicy::Converged;
};

struct FranckCondonTable {
  std::vector<double> f0;  // f_{0n}
  std::vector<double> f1;  // f_{1n}
  double effective_F = 0.0;
  OverlapConvention convention = OverlapConvention::Magnitude;

  std::size_t n_levels() const noexcept { return f0.size(); }
  double sum_rule(int qubit) const noexcept;  // sum_n f_in^2
};

/// Errors: ConfigInvalid for n_levels < 1 or mixed masses; CutoffTooSmall (Converged policy).
FranckCondonTable effective_franck_condon(const WannierMode& qubit0, const WannierMode& qubit1,
                                          const IntermediateTrap& intermediate, int n_levels,
                                          FranckCondonOptions options = {});

/// floor(U_tr / omega_tr)
int default_level_count(double trap_depth, double trap_omega);

}  // namespace rydfermi::lattice
