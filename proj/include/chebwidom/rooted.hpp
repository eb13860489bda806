#pragma once

#include <complex>
#include <span>
#include <vector>

#include "chebwidom/poly.hpp"

namespace chebwidom {

/// Real-rooted polynomial in product form, lead * prod_k (z - r_k), with the
/// leading coefficient kept as a logarithm. All evaluations are log-scaled, so
/// the form stays usable where the coefficient form under- or overflows.
class RootedPoly {
 public:
  RootedPoly() = default;
  /// roots need not be sorted on input.
  RootedPoly(std::vector<double> roots, double log_lead, int lead_sign = 1);

  int degree() const { return static_cast<int>(roots_.size()); }
  std::span<const double> roots() const { return roots_; }
  double log_lead() const { return log_lead_; }
  int lead_sign() const { return lead_sign_; }

  LogValue log_value(double x) const;
  double operator()(double x) const { return log_value(x).value(); }

  /// Sum of principal logs: Re is log|P(z)|, Im is an (unreduced) argument.
  std::complex<double> log_value(std::complex<double> z) const;
  std::complex<double> operator()(std::complex<double> z) const { return std::exp(log_value(z)); }

  /// P'(x) / P(x).
  double log_derivative(double x) const;
  std::complex<double> log_derivative(std::complex<double> z) const;

  /// The degree-1 zeros of P', one strictly between each pair of consecutive roots.
  std::vector<double> critical_points() const;

  /// Same polynomial with a rescaled leading coefficient: log_lead += delta.
  RootedPoly scaled(double log_delta) const;

  Poly to_poly(Hull hull) const;

 private:
  std::vector<double> roots_;
  double log_lead_ = 0.0;
  int lead_sign_ = 1;
};

}  // namespace chebwidom
