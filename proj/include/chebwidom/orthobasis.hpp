#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "chebwidom/poly.hpp"
#include "chebwidom/realsets.hpp"

namespace chebwidom {

class EquilibriumData;

/// Orthonormal polynomials of a discretized measure on a set, defined by their
/// three-term recurrence x p_k = a_{k+1} p_{k+1} + b_k p_k + a_k p_{k-1}.
///
/// With the equilibrium measure as weight these stay O(1) on every band, which
/// keeps the exchange systems well conditioned where the hull Chebyshev basis
/// would lose exp(n G) in relative accuracy across the gaps.
class OrthoBasis {
 public:
  /// Discrete Stieltjes procedure on Gauss-Chebyshev nodes per band, weighted
  /// by the equilibrium density; eq may be null, in which case each band gets
  /// an arcsine weight with mass proportional to its length.
  static std::shared_ptr<const OrthoBasis> build(const IntervalSet& set,
                                                 const EquilibriumData* eq, int max_degree);

  int max_degree() const { return static_cast<int>(b_.size()) - 1; }
  /// log of the x^k coefficient of p_k.
  double log_lead(int k) const { return log_lead_.at(k); }
  double p0() const { return p0_; }
  std::span<const double> a() const { return a_; }
  std::span<const double> b() const { return b_; }

  /// p_0(x), ..., p_n(x) written to out (size n+1); no rescaling.
  void values(double x, int n, std::span<double> out) const;

 private:
  double p0_ = 1.0;
  std::vector<double> a_;  // a_[0] = 0, a_[k] for k >= 1
  std::vector<double> b_;
  std::vector<double> log_lead_;
};

/// A value carried as mantissa * exp(log_scale).
template <class T>
struct Scaled {
  T value;
  T deriv;
  double log_scale;
};

/// sum_k d_k p_k(x) with d_n = 1, times exp(log_factor); monic in x when
/// log_factor = -log_lead(n).
class Expansion {
 public:
  Expansion(std::shared_ptr<const OrthoBasis> basis, std::vector<double> d);

  int degree() const { return static_cast<int>(d_.size()) - 1; }
  std::span<const double> d() const { return d_; }
  const OrthoBasis& basis() const { return *basis_; }

  /// Raw sum (without log_factor), rescaled as the recurrence grows.
  Scaled<double> raw(double x) const;
  Scaled<std::complex<double>> raw(std::complex<double> z) const;
  /// Raw sum and derivative in plain doubles, for points on the set.
  double raw_value(double x) const;
  void raw_value_deriv(double x, double& v, double& dv) const;

  /// Monic normalization.
  double log_factor() const { return -basis_->log_lead(degree()); }
  LogValue log_value(double x) const;

 private:
  std::shared_ptr<const OrthoBasis> basis_;
  std::vector<double> d_;
};

}  // namespace chebwidom
