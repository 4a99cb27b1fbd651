#include "rydfermi/atomic/angular.hpp"

#include <cmath>

#include "rydfermi/common/errors.hpp"

namespace rydfermi::atomic {

SpinorAngularFunction angular_spinor(int l, HalfInt j, HalfInt mj) {
  if (l < 0 || j.twice < 1 || (j.twice != 2 * l + 1 && j.twice != 2 * l - 1))
    fail(ErrorKind::InvalidQuantumNumbers, "spinor needs j = l +- 1/2");
  if (mj.twice % 2 == 0 || std::abs(mj.twice) > j.twice)
    fail(ErrorKind::InvalidQuantumNumbers, "spinor needs |m_j| <= j");

  SpinorAngularFunction s;
  s.l = l;
  s.j = j;
  s.mj = mj;
  s.up_m = (mj.twice - 1) / 2;
  s.down_m = (mj.twice + 1) / 2;
  const double m = mj.value();
  const double norm = std::sqrt(2.0 * l + 1.0);
  const double plus = std::sqrt(std::max(0.0, l + m + 0.5)) / norm;
  const double minus = std::sqrt(std::max(0.0, l - m + 0.5)) / norm;
  if (j.twice == 2 * l + 1) {
    s.up_coefficient = plus;
    s.down_coefficient = -minus;
  } else {
    s.up_coefficient = minus;
    s.down_coefficient = plus;
  }
  return s;
}

SpinorAngularFunction angular_spinor(int l, double j, double mj) {
  return angular_spinor(l, HalfInt::from_double(j), HalfInt::from_double(mj));
}

complex spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) return {0.0, 0.0};
  const unsigned am = static_cast<unsigned>(std::abs(m));
  // std::sph_legendre includes the Condon-Shortley phase
  const double y = std::sph_legendre(static_cast<unsigned>(l), am, theta);
  const complex value = y * std::polar(1.0, static_cast<double>(am) * phi);
  if (m >= 0) return value;
  return (am % 2 == 0 ? 1.0 : -1.0) * std::conj(value);
}

complex spherical_harmonic_dtheta(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) return {0.0, 0.0};
  const double cot = std::cos(theta) / std::sin(theta);
  complex d = static_cast<double>(m) * cot * spherical_harmonic(l, m, theta, phi);
  if (m < l) {
    const double c = std::sqrt(static_cast<double>((l - m) * (l + m + 1)));
    d += c * std::polar(1.0, -phi) * spherical_harmonic(l, m + 1, theta, phi);
  }
  return d;
}

}  // namespace rydfermi::atomic
