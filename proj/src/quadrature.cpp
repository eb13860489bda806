#include "chebwidom/quadrature.hpp"

#include <fftw3.h>

#include <mutex>
#include <numbers>

#include "chebwidom/errors.hpp"

namespace chebwidom::quad {

namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::vector<double> dct2(std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> y(x.size());
  if (n <= 64) {
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += x[j] * std::cos(std::numbers::pi * (j + 0.5) * k / n);
      y[k] = 2.0 * s;
    }
    return y;
  }
  std::vector<double> in(x.begin(), x.end());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_r2r_1d(n, in.data(), y.data(), FFTW_REDFT10, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return y;
}

}  // namespace

Rule gauss_legendre(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "gauss_legendre needs n >= 1");
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15) break;
    }
    r.nodes[i] = -z;
    r.nodes[n - 1 - i] = z;
    r.weights[i] = r.weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
  return r;
}

std::vector<double> chebyshev_angles(int n) {
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = (i + 0.5) * std::numbers::pi / n;
  return t;
}

std::vector<double> cosine_coefficients(std::span<const double> samples) {
  const double n = static_cast<double>(samples.size());
  std::vector<double> y = dct2(samples);
  y[0] /= 2.0 * n;
  for (std::size_t k = 1; k < y.size(); ++k) y[k] /= n;
  return y;
}

std::vector<double> chebyshev_interpolant(std::span<const double> samples) {
  return cosine_coefficients(samples);
}

double bisect(const std::function<double(double)>& f, double a, double b) {
  return bisect(f, a, b, f(a), f(b));
}

double bisect(const std::function<double(double)>& f, double a, double b, double fa, double fb) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0)) throw Error(Errc::InvalidArgument, "bisect: no sign change");
  for (int it = 0; it < 200; ++it) {
    double m = 0.5 * (a + b);
    if (m <= std::min(a, b) || m >= std::max(a, b)) break;
    double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm > 0) == (fa > 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace chebwidom::quad
