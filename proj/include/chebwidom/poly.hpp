#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "chebwidom/realsets.hpp"

namespace chebwidom {

/// log|v| together with sign(v); sign is 0 for an exact zero.
struct LogValue {
  double log_abs;
  int sign;

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

/// Polynomial stored as exp(log_scale) * sum_k c_k T_k(s), where T_k are the
/// classical Chebyshev polynomials and s maps the hull onto [-1, 1].
class Poly {
 public:
  Poly() = default;
  Poly(Hull hull, std::vector<double> coeffs, double log_scale = 0.0, bool monic = false);

  /// Interpolates f at degree+1 first-kind Chebyshev points of the hull.
  /// For monic polynomials the T_degree coefficient is pinned to its exact value.
  static Poly interpolate(Hull hull, int degree, const std::function<LogValue(double)>& f,
                          bool monic);
  /// From ascending monomial coefficients in x.
  static Poly from_monomial(Hull hull, std::span<const double> mono);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Hull& hull() const { return hull_; }
  std::span<const double> coefficients() const { return coeffs_; }
  double log_scale() const { return log_scale_; }
  bool monic() const { return monic_; }

  /// exp(log_scale) * c_k; may underflow for very high degree.
  std::vector<double> scaled_coefficients() const;

  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> z) const;
  LogValue evaluate_log(double x) const;

  /// Ascending monomial coefficients in x. Only sensible for moderate degree.
  std::vector<double> monomial_coefficients() const;

  /// Same polynomial expanded in the Chebyshev basis of another hull.
  Poly rebased(Hull other) const;

 private:
  double clenshaw(double s) const;

  Hull hull_{-1.0, 1.0};
  std::vector<double> coeffs_;
  double log_scale_ = 0.0;
  bool monic_ = false;
};

inline double evaluate(const Poly& p, double x) { return p(x); }
inline LogValue evaluate_log(const Poly& p, double x) { return p.evaluate_log(x); }

/// Leading T_n coefficient of the monic x^n on a hull: 2 (half/2)^n, as a log (n >= 1).
double log_monic_leading(const Hull& hull, int n);

/// max_k |a_k - b_k| / max_k |a_k| over scaled coefficients; b is rebased onto a's hull.
double relative_coefficient_error(const Poly& a, const Poly& b);

}  // namespace chebwidom
