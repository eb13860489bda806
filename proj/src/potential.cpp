#include "chebwidom/potential.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "chebwidom/errors.hpp"
#include "chebwidom/quadrature.hpp"

namespace chebwidom {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool on_principal_domain(std::complex<double> z, double b_p) {
  return z.imag() != 0.0 || z.real() > b_p;
}

}  // namespace

std::complex<double> joukowski_exterior(std::complex<double> xi) {
  std::complex<double> w = xi + std::sqrt(xi - 1.0) * std::sqrt(xi + 1.0);
  if (std::abs(w) < 1.0) w = 1.0 / w;
  return w;
}

double interval_green(const Hull& hull, std::complex<double> z) {
  const std::complex<double> xi = (z - hull.mid()) / hull.half();
  return std::max(0.0, std::log(std::abs(joukowski_exterior(xi))));
}

EquilibriumData::EquilibriumData(IntervalSet set, PotentialOptions opts)
    : set_(std::move(set)), opts_(opts) {
  if (opts_.quad_order < 16 || opts_.max_quad_order < opts_.quad_order)
    throw Error(Errc::InvalidArgument, "quadrature order out of range");
  for (const Band& b : set_.bands()) {
    endpoints_.push_back(b.lo);
    endpoints_.push_back(b.hi);
  }
  solve_critical_polynomial();
  build_band_series();
  compute_robin();
  capacity_ = std::exp(-robin_);
  for (double c : q_.roots()) critical_values_.push_back(green(c));
  pw_sum_ = 0.0;
  for (double g : critical_values_) pw_sum_ += g;
}

double EquilibriumData::other_endpoint_log(double t, std::size_t skip_lo,
                                           std::size_t skip_hi) const {
  double s = 0.0;
  for (std::size_t i = 0; i < endpoints_.size(); ++i) {
    if (i == skip_lo || i == skip_hi) continue;
    s += std::log(std::abs(t - endpoints_[i]));
  }
  return s;
}

void EquilibriumData::solve_critical_polynomial() {
  const std::size_t p = set_.size();
  const Hull hull = set_.hull();
  if (p == 1) {
    q_poly_ = Poly(hull, {1.0}, 0.0, true);
    q_ = RootedPoly({}, 0.0);
    return;
  }
  const std::size_t m = p - 1;
  const std::vector<Gap> gaps = set_.gaps();

  // Moments int_gap T_k(s(t)) / sqrt|prod| dt, k = 0..p-1, by Gauss-Chebyshev in the gap.
  auto moments = [&](std::size_t j, int order) {
    std::vector<double> mom(p, 0.0);
    const double mid = 0.5 * (gaps[j].left + gaps[j].right);
    const double half = 0.5 * gaps[j].length();
    for (double th : quad::chebyshev_angles(order)) {
      const double t = mid + half * std::cos(th);
      const double wgt = std::exp(-0.5 * other_endpoint_log(t, 2 * j + 1, 2 * j + 2));
      const double s = hull.to_unit(t);
      double tkm1 = 1.0, tk = s;
      mom[0] += wgt;
      if (p > 1) mom[1] += wgt * s;
      for (std::size_t k = 2; k < p; ++k) {
        const double next = 2.0 * s * tk - tkm1;
        tkm1 = tk;
        tk = next;
        mom[k] += wgt * tk;
      }
    }
    for (double& v : mom) v *= kPi / order;
    return mom;
  };

  Eigen::MatrixXd a(m, m);
  Eigen::VectorXd rhs(m);
  for (std::size_t j = 0; j < m; ++j) {
    int order = opts_.quad_order;
    std::vector<double> mom = moments(j, order);
    while (order < opts_.max_quad_order) {
      std::vector<double> finer = moments(j, 2 * order);
      order *= 2;
      double diff = 0.0, scale = 0.0;
      for (std::size_t k = 0; k < p; ++k) {
        diff = std::max(diff, std::abs(finer[k] - mom[k]));
        scale = std::max(scale, std::abs(finer[k]));
      }
      mom = std::move(finer);
      if (diff <= 1e-14 * scale) break;
    }
    double scale = 0.0;
    for (double v : mom) scale = std::max(scale, std::abs(v));
    for (std::size_t k = 0; k < m; ++k) a(j, k) = mom[k] / scale;
    rhs(j) = -mom[m] / scale;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  const double cond = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1)
                                            : std::numeric_limits<double>::infinity();
  if (!(cond <= opts_.max_condition))
    throw Error(Errc::SingularSystem, "critical-point system is near singular", cond);
  const Eigen::VectorXd beta = a.colPivHouseholderQr().solve(rhs);

  std::vector<double> coeffs(p);
  for (std::size_t k = 0; k < m; ++k) coeffs[k] = beta(k);
  coeffs[m] = 1.0;
  q_poly_ = Poly(hull, std::move(coeffs), log_monic_leading(hull, static_cast<int>(m)), true);

  std::vector<double> roots;
  auto f = [this](double t) { return q_poly_(t); };
  for (std::size_t j = 0; j < m; ++j) {
    const double fl = f(gaps[j].left), fr = f(gaps[j].right);
    if (fl * fr > 0.0)
      throw Error(Errc::SingularSystem, "critical point not bracketed in gap " + std::to_string(j));
    double c = quad::bisect(f, gaps[j].left, gaps[j].right, fl, fr);
    // One Newton step on the coefficient form; kept only if it stays in the gap.
    const double h = 1e-7 * gaps[j].length();
    const double d = (f(c + h) - f(c - h)) / (2 * h);
    if (d != 0.0) {
      const double cn = c - f(c) / d;
      if (cn > gaps[j].left && cn < gaps[j].right && std::abs(f(cn)) <= std::abs(f(c))) c = cn;
    }
    roots.push_back(c);
  }
  q_ = RootedPoly(std::move(roots), 0.0);
}

void EquilibriumData::build_band_series() {
  const std::size_t p = set_.size();
  series_.clear();
  band_mass_.clear();
  band_order_.clear();
  for (std::size_t k = 0; k < p; ++k) {
    const Band& b = set_.band(k);
    BandSeries s{b.mid(), b.half(), {}};
    if (p == 1) {
      s.gamma = {1.0 / kPi};
      band_order_.push_back(1);
    } else {
      int order = opts_.quad_order;
      for (;;) {
        const std::vector<double> theta = quad::chebyshev_angles(order);
        std::vector<double> samples(order);
        double peak = 0.0;
        for (int i = 0; i < order; ++i) {
          const double t = s.mid + s.half * std::cos(theta[i]);
          const double lq = q_.log_value(t).log_abs;
          samples[i] = std::exp(lq - 0.5 * other_endpoint_log(t, 2 * k, 2 * k + 1)) / kPi;
          peak = std::max(peak, samples[i]);
        }
        std::vector<double> gamma = quad::cosine_coefficients(samples);
        double tail = 0.0;
        for (int j = order / 2; j < order; ++j) tail = std::max(tail, std::abs(gamma[j]));
        const double floor = 64.0 * kEps * peak;
        if (tail <= floor) {
          std::size_t keep = gamma.size();
          while (keep > 1 && std::abs(gamma[keep - 1]) <= 0.01 * kEps * peak) --keep;
          gamma.resize(keep);
          s.gamma = std::move(gamma);
          band_order_.push_back(order);
          break;
        }
        if (order >= opts_.max_quad_order)
          throw Error(Errc::QuadratureFailure,
                      "density expansion unresolved on band " + std::to_string(k), tail / peak);
        order *= 2;
      }
    }
    band_mass_.push_back(kPi * s.gamma[0]);
    series_.push_back(std::move(s));
  }
}

void EquilibriumData::compute_robin() {
  // Shift so the set starts at 1; with x = 1/t' every factor becomes log1p(.) of
  // an O(x) quantity and F(t') - 1/t' is formed without cancellation.
  const double shift = 1.0 - endpoints_.front();
  const double bp = endpoints_.back() + shift;
  std::vector<double> inner;  // shifted endpoints except b_p
  for (std::size_t i = 0; i + 1 < endpoints_.size(); ++i) inner.push_back(endpoints_[i] + shift);
  std::vector<double> crit;
  for (double c : q_.roots()) crit.push_back(c + shift);

  auto integrand = [&](double sigma) {
    const double u = (1.0 - sigma) * (1.0 + sigma);
    const double x = u / bp;
    double l = -std::log(sigma);  // -0.5 log(1 - b_p x), 1 - b_p x = sigma^2
    for (double e : inner) l -= 0.5 * std::log1p(-e * x);
    for (double c : crit) l += std::log1p(-c * x);
    return std::expm1(l) * 2.0 * sigma / u;
  };
  auto integrate = [&](int n) {
    const quad::Rule r = quad::gauss_legendre(n);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += r.weights[i] * integrand(0.5 * (r.nodes[i] + 1.0));
    return 0.5 * s;
  };

  int n = 128;
  double coarse = integrate(n);
  double fine = integrate(2 * n);
  while (std::abs(fine - coarse) > 1e-14 * std::max(1.0, std::abs(fine)) && n < 8192) {
    n *= 2;
    coarse = fine;
    fine = integrate(2 * n);
  }
  const double diff = std::abs(fine - coarse);
  if (diff > 1e-10)
    throw Error(Errc::QuadratureFailure, "Robin tail integral did not settle", diff);
  robin_ = -std::log(bp) + fine;
}

double EquilibriumData::density(double x) const {
  const auto k = set_.band_of(x);
  if (!k || x <= set_.band(*k).lo || x >= set_.band(*k).hi)
    throw Error(Errc::OutsideSupport, "density requested off the band interiors");
  const double lq = q_.log_value(x).log_abs;
  double le = 0.0;
  for (double e : endpoints_) le += std::log(std::abs(x - e));
  return std::exp(lq - 0.5 * le) / kPi;
}

double EquilibriumData::band_cumulative(const BandSeries& s, double theta) const {
  // int_0^theta g = gamma_0 theta + sum_j gamma_j sin(j theta) / j
  double acc = s.gamma[0] * theta;
  const double c = std::cos(theta), sn = std::sin(theta);
  double sjm1 = 0.0, sj = sn;  // sin((j-1) theta), sin(j theta)
  for (std::size_t j = 1; j < s.gamma.size(); ++j) {
    acc += s.gamma[j] * sj / static_cast<double>(j);
    const double next = 2.0 * c * sj - sjm1;
    sjm1 = sj;
    sj = next;
  }
  return acc;
}

double EquilibriumData::harmonic_measure(double u, double v) const {
  if (v < u) std::swap(u, v);
  double total = 0.0;
  for (std::size_t k = 0; k < series_.size(); ++k) {
    const Band& b = set_.band(k);
    const double lo = std::max(u, b.lo), hi = std::min(v, b.hi);
    if (!(lo < hi)) continue;
    if (lo == b.lo && hi == b.hi) {
      total += band_mass_[k];
      continue;
    }
    const BandSeries& s = series_[k];
    auto theta = [&](double x) { return std::acos(std::clamp((x - s.mid) / s.half, -1.0, 1.0)); };
    total += band_cumulative(s, theta(lo)) - band_cumulative(s, theta(hi));
  }
  return total;
}

double EquilibriumData::cdf(double x) const {
  const Hull h = set_.hull();
  if (x <= h.lo) return 0.0;
  if (x >= h.hi) return 1.0;
  return harmonic_measure(h.lo, x);
}

double EquilibriumData::quantile(double u) const {
  const Hull h = set_.hull();
  if (u <= 0.0) return h.lo;
  if (u >= 1.0) return h.hi;
  double lo = h.lo, hi = h.hi;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (cdf(mid) >= u)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

std::complex<double> EquilibriumData::log_kernel(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < series_.size(); ++k) {
    const BandSeries& s = series_[k];
    const std::complex<double> w = joukowski_exterior((z - s.mid) / s.half);
    const std::complex<double> winv = 1.0 / w;
    std::complex<double> pw = 1.0, sum = 0.0;
    for (std::size_t j = 1; j < s.gamma.size(); ++j) {
      pw *= winv;
      sum += s.gamma[j] * pw / static_cast<double>(j);
    }
    acc += band_mass_[k] * (std::log(s.half) + std::log(w / 2.0)) - kPi * sum;
  }
  return acc;
}

double EquilibriumData::log_potential(std::complex<double> z) const {
  return log_kernel(z).real();
}

GreenValue EquilibriumData::green_value(std::complex<double> z) const {
  const std::complex<double> lk = log_kernel(z);
  const double g = std::max(0.0, robin_ + lk.real());
  const bool principal = on_principal_domain(z, endpoints_.back());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  return {g, principal ? lk.imag() : nan, -g, principal ? -lk.imag() : nan};
}

std::complex<double> EquilibriumData::log_blaschke(std::complex<double> z) const {
  if (!on_principal_domain(z, endpoints_.back()))
    throw Error(Errc::BranchDomain, "B is single valued only off (-inf, b_p]");
  return -robin_ - log_kernel(z);
}

std::complex<double> EquilibriumData::blaschke(std::complex<double> z) const {
  return std::exp(log_blaschke(z));
}

double EquilibriumData::winding_phase(std::span<const std::size_t> band_indices) const {
  double mass = 0.0;
  for (std::size_t k : band_indices) mass += band_mass_.at(k);
  return std::remainder(-2.0 * kPi * mass, 2.0 * kPi);
}

double EquilibriumData::gap_integral(std::size_t gap, int order) const {
  const std::vector<Gap> gs = set_.gaps();
  const Gap& g = gs.at(gap);
  const double mid = 0.5 * (g.left + g.right), half = 0.5 * g.length();
  double acc = 0.0;
  for (double th : quad::chebyshev_angles(order)) {
    const double t = mid + half * std::cos(th);
    acc += q_(t) * std::exp(-0.5 * other_endpoint_log(t, 2 * gap + 1, 2 * gap + 2));
  }
  return acc * kPi / order;
}

Poly critical_polynomial(const IntervalSet& set, PotentialOptions opts) {
  return EquilibriumData(set, opts).q_poly();
}

std::pair<double, double> capacity(const IntervalSet& set, PotentialOptions opts) {
  EquilibriumData eq(set, opts);
  return {eq.capacity(), eq.robin()};
}

}  // namespace chebwidom
