#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "chebwidom/poly.hpp"
#include "chebwidom/realsets.hpp"
#include "chebwidom/rooted.hpp"

namespace chebwidom {

struct PotentialOptions {
  /// Gauss-Chebyshev points per band/gap; doubled adaptively until the cosine
  /// expansion of the density has resolved (up to max_quad_order).
  int quad_order = 2048;
  int max_quad_order = 1 << 17;
  /// Condition-number ceiling for the critical-point system.
  double max_condition = 1e13;
};

struct GreenValue {
  double g;        ///< G_e(z); zero on e up to rounding.
  double conj;     ///< Im of the log-kernel integral on the principal branch (NaN off it).
  double b_log;    ///< log|B(z)| = -g.
  double b_phase;  ///< arg B(z) on the principal branch (NaN off it).
};

/// Equilibrium measure, Green's function and capacity of a finite gap set.
///
/// The density is w(x) = |q(x)| / (pi sqrt|prod_k (x-a_k)(x-b_k)|) where the
/// monic q has one zero c_k per gap, fixed by requiring the gap integrals of
/// q / sqrt|prod| to vanish. Per band, x = m + h cos(theta) turns w(x) dx into
/// a smooth g(theta) dtheta, which is stored as a cosine series; the logarithmic
/// potential then follows in closed form from
///   log|xi - cos t| = log(|w|/2) - sum_j (2/j) Re(w^-j) cos(j t),
/// w = xi + sqrt(xi^2 - 1), |w| >= 1, valid on and off the band.
class EquilibriumData {
 public:
  explicit EquilibriumData(IntervalSet set, PotentialOptions opts = {});

  const IntervalSet& set() const { return set_; }
  /// q in the Chebyshev basis of the hull (monic in x).
  const Poly& q_poly() const { return q_poly_; }
  /// q as prod (t - c_k).
  const RootedPoly& q() const { return q_; }
  std::span<const double> critical_points() const { return q_.roots(); }
  double robin() const { return robin_; }
  double capacity() const { return capacity_; }
  double pw_sum() const { return pw_sum_; }
  std::span<const double> critical_values() const { return critical_values_; }
  std::span<const double> band_measures() const { return band_mass_; }
  /// Gauss-Chebyshev points actually used per band after refinement.
  std::span<const int> band_resolution() const { return band_order_; }

  /// w(x) for x strictly inside a band; throws OutsideSupport otherwise.
  double density(double x) const;
  double band_measure(std::size_t k) const { return band_mass_.at(k); }
  /// rho_e([u, v]).
  double harmonic_measure(double u, double v) const;
  /// rho_e((-inf, x]).
  double cdf(double x) const;
  /// Smallest x with cdf(x) >= u.
  double quantile(double u) const;

  /// int log(z - t) drho(t) with principal logs; Re part is valid for every z,
  /// Im part only on C \ (-inf, b_p].
  std::complex<double> log_kernel(std::complex<double> z) const;
  /// int log|z - t| drho(t).
  double log_potential(std::complex<double> z) const;

  double green(std::complex<double> z) const { return robin_ + log_potential(z); }
  GreenValue green_value(std::complex<double> z) const;

  /// B(z) = C exp(-int log(z - t) drho) on C \ (-inf, b_p]; BranchDomain elsewhere.
  std::complex<double> blaschke(std::complex<double> z) const;
  std::complex<double> log_blaschke(std::complex<double> z) const;

  /// Phase change of B around a loop enclosing exactly the given bands, in [-pi, pi].
  double winding_phase(std::span<const std::size_t> band_indices) const;

  /// int_{gap j} q(t) / sqrt|prod (t - a_k)(t - b_k)| dt with `order` nodes.
  double gap_integral(std::size_t gap, int order) const;

 private:
  struct BandSeries {
    double mid, half;
    std::vector<double> gamma;  // g(theta) = sum_j gamma_j cos(j theta)
  };

  void solve_critical_polynomial();
  void build_band_series();
  void compute_robin();
  double other_endpoint_log(double t, std::size_t skip_lo, std::size_t skip_hi) const;
  double band_cumulative(const BandSeries& s, double theta) const;

  IntervalSet set_;
  PotentialOptions opts_;
  std::vector<double> endpoints_;  // a_1, b_1, ..., a_p, b_p
  Poly q_poly_;
  RootedPoly q_;
  std::vector<BandSeries> series_;
  std::vector<double> band_mass_;
  std::vector<int> band_order_;
  std::vector<double> critical_values_;
  double robin_ = 0.0;
  double capacity_ = 0.0;
  double pw_sum_ = 0.0;
};

/// Monic critical-point polynomial of the set, in the hull Chebyshev basis.
Poly critical_polynomial(const IntervalSet& set, PotentialOptions opts = {});
/// (capacity, robin).
std::pair<double, double> capacity(const IntervalSet& set, PotentialOptions opts = {});
inline double equilibrium_density(const EquilibriumData& eq, double x) { return eq.density(x); }
inline double pw_sum(const EquilibriumData& eq) { return eq.pw_sum(); }

/// Green's function of a single interval, closed form.
double interval_green(const Hull& hull, std::complex<double> z);

/// The branch of xi + sqrt(xi^2 - 1) with modulus >= 1.
std::complex<double> joukowski_exterior(std::complex<double> xi);

}  // namespace chebwidom
