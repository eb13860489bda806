#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chebwidom/bands.hpp"
#include "chebwidom/chebyshev.hpp"
#include "chebwidom/potential.hpp"
#include "chebwidom/realsets.hpp"

namespace chebwidom {

struct WidomEntry {
  int n = 0;
  bool ok = false;
  std::string error;  ///< module-qualified code when !ok

  double log_norm = 0.0;
  double widom_factor = 0.0;       ///< ||T_n|| / C(e)^n
  double envelope_capacity = 0.0;  ///< C(e_n)
  double implied_q = 0.0;          ///< n (C(e_n)/C(e) - 1)
  std::vector<double> gap_masses;  ///< rho_n(K_j) per gap of e
  std::vector<bool> gap_has_zero;

  // log(C(e_n)/C(e)) <= sum_j rho_n(K_j) G(w_j) <= PW / n
  double chain_lhs = 0.0;
  double chain_mid = 0.0;
  double chain_rhs = 0.0;

  double schiefermayr_slack = 0.0;  ///< W_n - 2
  double totik_widom_slack = 0.0;   ///< 2 exp(PW) - W_n
  double chain_slack = 0.0;         ///< min(mid - lhs, rhs - mid)
  double refined_slack = 0.0;       ///< 2 exp(PW/2 + S_n/2) - W_n
  double form_residual = 0.0;       ///< |n log1p(q_n/n) - log(W_n/2)|
  int iterations = 0;
};

struct WidomSeries {
  IntervalSet set;
  double capacity;
  double pw;
  std::vector<double> critical_values;  ///< G(w_j), one per gap
  std::vector<WidomEntry> entries;      ///< ordered by n
};

/// T_n, its frame and the bound checks for n = 1..n_max. Entries are solved
/// concurrently (jobs <= 0: OpenMP default); a failing n is recorded, not thrown.
WidomSeries widom_series(const IntervalSet& set, int n_max, PotentialOptions popts = {},
                         double tol = 0.0, int jobs = 0);
WidomSeries widom_series(std::shared_ptr<const EquilibriumData> eq, const std::vector<int>& ns,
                         double tol = 0.0, int jobs = 0);

/// S_n: the G(w_j) summed over gaps that hold a zero of T_n (a zero within
/// 1e-9 hull lengths of a gap end counts as held).
double occupied_critical_sum(const WidomSeries& series, const WidomEntry& e);
/// Per entry 2 exp(PW/2 + S_n/2); NaN for failed entries.
std::vector<double> refined_tw_bound(const WidomSeries& series);

/// max over z of log|T_n(z)| - log||T_n|| - n G(z); <= 0 up to rounding.
double bernstein_walsh_check(const ChebyshevResult& r, const EquilibriumData& eq,
                             const std::vector<std::complex<double>>& z);
double bernstein_walsh_check(const IntervalSet& set, int n,
                             const std::vector<std::complex<double>>& z);

/// |(1/n) log|T_n(z)| - log C(e) - G(z)|; z off the hull.
double root_asymptotics_error(const ChebyshevResult& r, const EquilibriumData& eq,
                              std::complex<double> z);
double root_asymptotics_error(const IntervalSet& set, int n, std::complex<double> z);

/// sup_x |#{zeros <= x}/n - rho_e((-inf, x])|.
double zero_counting_distance(const ChebyshevResult& r, const EquilibriumData& eq);
double zero_counting_distance(const IntervalSet& set, int n);

struct SzegoWidom {
  std::complex<double> l;      ///< L_n = T_n B^n / C(e)^n
  std::complex<double> h;      ///< H_n = C(e_n)^n B^n / (C(e)^n B_n^n)
  std::complex<double> bn2n;   ///< B_n^{2n}
  std::complex<double> b2n;    ///< B^{2n}
  double residual;             ///< |L_n - (1 + B_n^{2n}) H_n| / |L_n|
};

/// Real z > b_p only; BranchDomain otherwise.
SzegoWidom szego_widom_residual(const DiscriminantFrame& frame, const EquilibriumData& eq,
                                std::complex<double> z);
SzegoWidom szego_widom_residual(const IntervalSet& set, int n, std::complex<double> z);
/// |L_n(z)| = |T_n(z)| exp(-n G(z)) / C(e)^n, any z.
double szego_widom_modulus(const ChebyshevResult& r, const EquilibriumData& eq,
                           std::complex<double> z);

/// max over k <= k_max and z of |L_{kp}(z) - 1 - B(z)^{2kp}|. NotPeriodic if a
/// band of the set has harmonic measure off the grid (1/p) Z by more than 1e-8.
double szego_widom_trivial_subsequence(const IntervalSet& period_set, int p, int k_max,
                                       const std::vector<double>& z);

struct Sandwich {
  double log_b;        ///< log|B(z)| = -G_e
  double log_bn;       ///< -G_{e_n}
  double log_b_hull;   ///< -G of the hull interval
};
Sandwich blaschke_sandwich(const DiscriminantFrame& frame, const EquilibriumData& eq,
                           std::complex<double> z);

/// Random 2..4 band sets in [-2, 2], band and gap widths >= 0.1.
std::vector<IntervalSet> random_corpus(std::size_t count, std::uint64_t seed);

}  // namespace chebwidom
