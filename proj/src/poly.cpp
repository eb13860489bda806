#include "chebwidom/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "chebwidom/errors.hpp"
#include "chebwidom/quadrature.hpp"

namespace chebwidom {

Poly::Poly(Hull hull, std::vector<double> coeffs, double log_scale, bool monic)
    : hull_(hull), coeffs_(std::move(coeffs)), log_scale_(log_scale), monic_(monic) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double log_monic_leading(const Hull& hull, int n) {
  if (n == 0) return 0.0;
  return std::log(2.0) + n * std::log(hull.half() / 2.0);
}

Poly Poly::interpolate(Hull hull, int degree, const std::function<LogValue(double)>& f,
                       bool monic) {
  const int m = degree + 1;
  const std::vector<double> theta = quad::chebyshev_angles(m);
  std::vector<LogValue> vals(m);
  double top = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i) {
    vals[i] = f(hull.from_unit(std::cos(theta[i])));
    if (vals[i].sign != 0) top = std::max(top, vals[i].log_abs);
  }
  if (!std::isfinite(top)) return Poly(hull, std::vector<double>(m, 0.0), 0.0, false);
  std::vector<double> samples(m);
  for (int i = 0; i < m; ++i)
    samples[i] = vals[i].sign == 0 ? 0.0 : vals[i].sign * std::exp(vals[i].log_abs - top);
  std::vector<double> c = quad::chebyshev_interpolant(samples);
  if (monic && degree >= 1) {
    c[degree] = std::exp(log_monic_leading(hull, degree) - top);
  } else if (monic) {
    c[0] = std::exp(-top);
  }
  return Poly(hull, std::move(c), top, monic);
}

Poly Poly::from_monomial(Hull hull, std::span<const double> mono) {
  const int n = static_cast<int>(mono.size()) - 1;
  auto f = [&](double x) {
    double v = 0.0;
    for (int k = n; k >= 0; --k) v = v * x + mono[k];
    if (v == 0.0) return LogValue{0.0, 0};
    return LogValue{std::log(std::abs(v)), v > 0 ? 1 : -1};
  };
  return interpolate(hull, n, f, n >= 0 && mono[n] == 1.0);
}

std::vector<double> Poly::scaled_coefficients() const {
  std::vector<double> out(coeffs_.size());
  const double s = std::exp(log_scale_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = s * coeffs_[k];
  return out;
}

double Poly::clenshaw(double s) const {
  double b1 = 0.0, b2 = 0.0;
  for (int k = degree(); k >= 1; --k) {
    double b0 = coeffs_[k] + 2.0 * s * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs_[0] + s * b1 - b2;
}

double Poly::operator()(double x) const {
  return std::exp(log_scale_) * clenshaw(hull_.to_unit(x));
}

std::complex<double> Poly::operator()(std::complex<double> z) const {
  const std::complex<double> s = (2.0 * z - (hull_.lo + hull_.hi)) / (hull_.hi - hull_.lo);
  std::complex<double> b1 = 0.0, b2 = 0.0;
  for (int k = degree(); k >= 1; --k) {
    std::complex<double> b0 = coeffs_[k] + 2.0 * s * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return std::exp(log_scale_) * (coeffs_[0] + s * b1 - b2);
}

LogValue Poly::evaluate_log(double x) const {
  const double v = clenshaw(hull_.to_unit(x));
  if (v == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
  return {std::log(std::abs(v)) + log_scale_, v > 0 ? 1 : -1};
}

std::vector<double> Poly::monomial_coefficients() const {
  const int n = degree();
  // Chebyshev -> powers of s.
  std::vector<double> d(n + 1, 0.0);
  std::vector<double> tkm1(n + 1, 0.0), tk(n + 1, 0.0);
  tkm1[0] = 1.0;
  d[0] += coeffs_[0];
  if (n >= 1) {
    tk[1] = 1.0;
    d[1] += coeffs_[1];
  }
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(n + 1, 0.0);
    for (int j = 0; j <= k; ++j) next[j + 1] += 2.0 * tk[j];
    for (int j = 0; j <= n; ++j) next[j] -= tkm1[j];
    for (int j = 0; j <= k + 1; ++j) d[j] += coeffs_[k + 1] * next[j];
    tkm1 = std::move(tk);
    tk = std::move(next);
  }
  // s = alpha x + beta, Horner in polynomial arithmetic.
  const double alpha = 1.0 / hull_.half();
  const double beta = -hull_.mid() / hull_.half();
  std::vector<double> r{d[n]};
  for (int j = n - 1; j >= 0; --j) {
    std::vector<double> next(r.size() + 1, 0.0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      next[i + 1] += alpha * r[i];
      next[i] += beta * r[i];
    }
    next[0] += d[j];
    r = std::move(next);
  }
  const double scale = std::exp(log_scale_);
  for (double& c : r) c *= scale;
  if (monic_) r[n] = 1.0;
  return r;
}

Poly Poly::rebased(Hull other) const {
  auto f = [this](double x) { return evaluate_log(x); };
  return interpolate(other, degree(), f, monic_);
}

double relative_coefficient_error(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree())
    throw Error(Errc::InvalidArgument, "coefficient comparison needs equal degrees");
  const Poly bb = (a.hull() == b.hull()) ? b : b.rebased(a.hull());
  const std::vector<double> ca = a.scaled_coefficients();
  const std::vector<double> cb = bb.scaled_coefficients();
  double diff = 0.0, ref = 0.0;
  for (std::size_t k = 0; k < ca.size(); ++k) {
    diff = std::max(diff, std::abs(ca[k] - cb[k]));
    ref = std::max(ref, std::abs(ca[k]));
  }
  return ref > 0.0 ? diff / ref : diff;
}

}  // namespace chebwidom
