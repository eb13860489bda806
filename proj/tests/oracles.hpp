#pragma once

// Closed forms used as independent references.

#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

inline double interval_norm(int n) { return std::ldexp(1.0, 1 - n); }

/// Green function of [lo, hi] with pole at infinity.
inline double interval_green(double lo, double hi, std::complex<double> z) {
  const std::complex<double> w = (2.0 * z - (lo + hi)) / (hi - lo);
  return std::acosh(w).real();
}

/// [-1, -a] u [a, 1] is the preimage of [-1, 1] under (2x^2 - 1 - a^2) / (1 - a^2).
struct Symmetric {
  double a;

  double capacity() const { return std::sqrt(1.0 - a * a) / 2.0; }
  double green(std::complex<double> z) const {
    return 0.5 * interval_green(-1.0, 1.0, (2.0 * z * z - 1.0 - a * a) / (1.0 - a * a));
  }
  double density(double x) const {
    return std::abs(x) / (std::numbers::pi * std::sqrt((1.0 - x * x) * (x * x - a * a)));
  }
  double pw() const { return green(0.0); }
  /// ||T_n|| for even n = 2m: T_n = ((1 - a^2)/2)^m 2^{1-m} T_m^{cheb}(...).
  double even_norm(int n) const { return 2.0 * std::pow(capacity(), n); }
};

}  // namespace oracle
