#include "chebwidom/asymptotics.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "chebwidom/errors.hpp"

namespace chebwidom {

namespace {

const double kLog2 = std::log(2.0);
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void fill_entry(WidomEntry& e, const ChebyshevResult& r, const EquilibriumData& eq,
                const std::vector<double>& crit_values) {
  const double log_c = std::log(eq.capacity());
  const int n = r.n;
  const DiscriminantFrame frame(r);
  e.log_norm = r.log_norm;
  e.iterations = r.iterations;
  const double log_w = r.log_norm - n * log_c;
  e.widom_factor = std::exp(log_w);
  e.envelope_capacity = frame.envelope_capacity();
  const double log_ratio = frame.log_envelope_capacity() - log_c;
  e.implied_q = n * std::expm1(log_ratio);
  e.form_residual = std::abs(n * std::log1p(e.implied_q / n) - (log_w - kLog2));

  const auto gaps = eq.set().gaps();
  e.chain_mid = 0.0;
  for (std::size_t j = 0; j < gaps.size(); ++j) {
    const GapMass gm = frame.gap_mass(gaps[j]);
    e.gap_masses.push_back(gm.mass);
    e.gap_has_zero.push_back(gm.has_zero || gm.ambiguous);
    e.chain_mid += gm.mass * crit_values[j];
  }
  e.chain_lhs = log_ratio;
  e.chain_rhs = eq.pw_sum() / n;

  e.schiefermayr_slack = e.widom_factor - 2.0;
  e.totik_widom_slack = 2.0 * std::exp(eq.pw_sum()) - e.widom_factor;
  e.chain_slack = std::min(e.chain_mid - e.chain_lhs, e.chain_rhs - e.chain_mid);
  double s = 0.0;
  for (std::size_t j = 0; j < gaps.size(); ++j)
    if (e.gap_has_zero[j]) s += crit_values[j];
  e.refined_slack = 2.0 * std::exp(0.5 * eq.pw_sum() + 0.5 * s) - e.widom_factor;
  e.ok = true;
}

}  // namespace

WidomSeries widom_series(std::shared_ptr<const EquilibriumData> eq, const std::vector<int>& ns,
                         double tol, int jobs) {
  for (int n : ns)
    if (n < 1) throw Error(Errc::InvalidArgument, "degrees must be >= 1");
  WidomSeries out{eq->set(), eq->capacity(), eq->pw_sum(),
                  {eq->critical_values().begin(), eq->critical_values().end()}, {}};
  std::vector<int> order(ns);
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  out.entries.resize(order.size());

  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    ChebyshevSolver solver(eq);
#pragma omp for schedule(dynamic)
    for (std::size_t i = 0; i < order.size(); ++i) {
      WidomEntry& e = out.entries[i];
      e.n = order[i];
      try {
        fill_entry(e, solver.solve(e.n, tol), *eq, out.critical_values);
      } catch (const Error& err) {
        e = WidomEntry{};
        e.n = order[i];
        e.error = err.what();
      }
    }
  }
  return out;
}

WidomSeries widom_series(const IntervalSet& set, int n_max, PotentialOptions popts, double tol,
                         int jobs) {
  if (n_max < 1) throw Error(Errc::InvalidArgument, "n_max must be >= 1");
  std::vector<int> ns(n_max);
  for (int n = 1; n <= n_max; ++n) ns[n - 1] = n;
  return widom_series(std::make_shared<const EquilibriumData>(set, popts), ns, tol, jobs);
}

double occupied_critical_sum(const WidomSeries& series, const WidomEntry& e) {
  double s = 0.0;
  for (std::size_t j = 0; j < e.gap_has_zero.size(); ++j)
    if (e.gap_has_zero[j]) s += series.critical_values[j];
  return s;
}

std::vector<double> refined_tw_bound(const WidomSeries& series) {
  std::vector<double> out;
  for (const WidomEntry& e : series.entries)
    out.push_back(e.ok ? 2.0 * std::exp(0.5 * series.pw + 0.5 * occupied_critical_sum(series, e))
                       : kNaN);
  return out;
}

double bernstein_walsh_check(const ChebyshevResult& r, const EquilibriumData& eq,
                             const std::vector<std::complex<double>>& z) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& zz : z) {
    const double lt = r.log_value(zz).real();
    worst = std::max(worst, lt - r.log_norm - r.n * std::max(0.0, eq.green(zz)));
  }
  return worst;
}

double bernstein_walsh_check(const IntervalSet& set, int n,
                             const std::vector<std::complex<double>>& z) {
  ChebyshevSolver solver(set);
  const ChebyshevResult r = solver.solve(n);
  return bernstein_walsh_check(r, *solver.equilibrium(), z);
}

double root_asymptotics_error(const ChebyshevResult& r, const EquilibriumData& eq,
                              std::complex<double> z) {
  const Hull h = r.set.hull();
  if (z.imag() == 0.0 && z.real() >= h.lo && z.real() <= h.hi)
    throw Error(Errc::InvalidArgument, "root asymptotics needs z off the hull");
  return std::abs(r.log_value(z).real() / r.n - std::log(eq.capacity()) - eq.green(z));
}

double root_asymptotics_error(const IntervalSet& set, int n, std::complex<double> z) {
  ChebyshevSolver solver(set);
  return root_asymptotics_error(solver.solve(n), *solver.equilibrium(), z);
}

double zero_counting_distance(const ChebyshevResult& r, const EquilibriumData& eq) {
  std::vector<double> z = r.zeros;
  std::sort(z.begin(), z.end());
  const double n = static_cast<double>(z.size());
  double d = 0.0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    const double f = eq.cdf(z[k]);
    d = std::max({d, std::abs((k + 1) / n - f), std::abs(k / n - f)});
  }
  return d;
}

double zero_counting_distance(const IntervalSet& set, int n) {
  ChebyshevSolver solver(set);
  return zero_counting_distance(solver.solve(n), *solver.equilibrium());
}

SzegoWidom szego_widom_residual(const DiscriminantFrame& frame, const EquilibriumData& eq,
                                std::complex<double> z) {
  const ChebyshevResult& r = frame.source();
  if (z.imag() != 0.0 || !(z.real() > r.set.hull().hi))
    throw Error(Errc::BranchDomain, "L_n is evaluated on real z beyond the set only");
  const int n = r.n;
  const double log_c = std::log(eq.capacity());
  const std::complex<double> log_b = eq.log_blaschke(z);
  const std::complex<double> log_bn_inv = frame.log_bn_inverse(z);
  const std::complex<double> log_l = r.log_value(z) + double(n) * log_b - n * log_c;
  const std::complex<double> log_h =
      n * frame.log_envelope_capacity() + double(n) * log_b - n * log_c + log_bn_inv;
  SzegoWidom out;
  out.l = std::exp(log_l);
  out.h = std::exp(log_h);
  out.bn2n = std::exp(-2.0 * log_bn_inv);
  out.b2n = std::exp(2.0 * n * log_b);
  out.residual = std::abs(out.l - (1.0 + out.bn2n) * out.h) / std::abs(out.l);
  return out;
}

SzegoWidom szego_widom_residual(const IntervalSet& set, int n, std::complex<double> z) {
  ChebyshevSolver solver(set);
  const DiscriminantFrame frame(solver.solve(n));
  return szego_widom_residual(frame, *solver.equilibrium(), z);
}

double szego_widom_modulus(const ChebyshevResult& r, const EquilibriumData& eq,
                           std::complex<double> z) {
  return std::exp(r.log_value(z).real() - r.n * (std::max(0.0, eq.green(z)) +
                                                 std::log(eq.capacity())));
}

double szego_widom_trivial_subsequence(const IntervalSet& period_set, int p, int k_max,
                                       const std::vector<double>& z) {
  if (p < 1 || k_max < 1) throw Error(Errc::InvalidArgument, "need p >= 1 and k_max >= 1");
  ChebyshevSolver solver(period_set);
  const EquilibriumData& eq = *solver.equilibrium();
  for (double m : eq.band_measures()) {
    const double off = std::abs(m * p - std::round(m * p)) / p;
    if (off > 1e-8) throw Error(Errc::NotPeriodic, "band measure off the 1/p grid", off);
  }
  double worst = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const DiscriminantFrame frame(solver.solve(k * p));
    for (double x : z) {
      const SzegoWidom sw = szego_widom_residual(frame, eq, x);
      worst = std::max(worst, std::abs(sw.l - 1.0 - sw.b2n));
    }
  }
  return worst;
}

Sandwich blaschke_sandwich(const DiscriminantFrame& frame, const EquilibriumData& eq,
                           std::complex<double> z) {
  return {-std::max(0.0, eq.green(z)), -frame.green(z),
          -interval_green(eq.set().hull(), z)};
}

std::vector<IntervalSet> random_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<IntervalSet> out;
  while (out.size() < count) {
    const int p = 2 + static_cast<int>(rng() % 3);
    std::vector<double> pts(2 * p);
    for (double& v : pts) v = u(rng);
    std::sort(pts.begin(), pts.end());
    bool good = true;
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (pts[i] - pts[i - 1] < 0.1) good = false;
    if (!good) continue;
    std::vector<std::pair<double, double>> raw;
    for (int k = 0; k < p; ++k) raw.emplace_back(pts[2 * k], pts[2 * k + 1]);
    out.push_back(IntervalSet::validate(raw));
  }
  return out;
}

}  // namespace chebwidom
