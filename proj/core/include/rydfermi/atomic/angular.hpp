#pragma once

#include <complex>

#include "rydfermi/atomic/quantum_numbers.hpp"

namespace rydfermi::atomic {

using complex = std::complex<double>;

/// psi_{l,j,mj} = up * Y_{l,mj-1/2} chi_up + down * Y_{l,mj+1/2} chi_down
struct SpinorAngularFunction {
  int l = 0;
  HalfInt j;
  HalfInt mj;
  double up_coefficient = 0.0;
  double down_coefficient = 0.0;
  int up_m = 0;    // mj - 1/2
  int down_m = 0;  // mj + 1/2
};

/// Errors: InvalidQuantumNumbers.
SpinorAngularFunction angular_spinor(int l, HalfInt j, HalfInt mj);
SpinorAngularFunction angular_spinor(int l, double j, double mj);

/// Y_lm(theta, phi) with the Condon-Shortley phase; zero when |m| > l.
complex spherical_harmonic(int l, int m, double theta, double phi);

/// dY/dtheta (the phi derivative is simply i m Y).
complex spherical_harmonic_dtheta(int l, int m, double theta, double phi);

}  // namespace rydfermi::atomic
