#pragma once

// Independent reference implementations used only by the tests.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

// u(r) = r R_nl(r) for hydrogen, standard Laguerre sign convention
inline double hydrogen_u(int n, int l, double r) {
  const double rho = 2.0 * r / n;
  const double norm = std::sqrt(std::pow(2.0 / n, 3) * std::tgamma(n - l) / (2.0 * n * std::tgamma(n + l + 1)));
  return r * norm * std::exp(-rho / 2) * std::pow(rho, l) *
         std::assoc_laguerre(static_cast<unsigned>(n - l - 1), static_cast<unsigned>(2 * l + 1), rho);
}

// sign of the outermost lobe of hydrogen_u
inline double hydrogen_outer_sign(int n, int l) { return (n - l - 1) % 2 == 0 ? 1.0 : -1.0; }

// explicit low-order spherical harmonics for cross-checks
inline std::complex<double> y22(double theta, double phi) {
  return 0.25 * std::sqrt(15.0 / (2.0 * std::numbers::pi)) * std::pow(std::sin(theta), 2) *
         std::polar(1.0, 2.0 * phi);
}
inline std::complex<double> y11(double theta, double phi) {
  return -0.5 * std::sqrt(3.0 / (2.0 * std::numbers::pi)) * std::sin(theta) * std::polar(1.0, phi);
}
inline std::complex<double> y2m1(double theta, double phi) {
  return 0.5 * std::sqrt(15.0 / (2.0 * std::numbers::pi)) * std::sin(theta) * std::cos(theta) *
         std::polar(1.0, -phi);
}

// plain Gauss-Legendre nodes by Newton iteration on P_n, independent of the library rule
struct Legendre {
  std::vector<double> x, w;
  explicit Legendre(int n) : x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = z;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        const double dp = n * (z * p1 - p0) / (z * z - 1.0);
        const double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) {
          x[static_cast<std::size_t>(i)] = z;
          w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
          break;
        }
      }
    }
  }
};

}  // namespace oracle
