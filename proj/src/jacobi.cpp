#include "chebwidom/jacobi.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "chebwidom/chebyshev.hpp"
#include "chebwidom/errors.hpp"
#include "chebwidom/potential.hpp"

namespace chebwidom {

void JacobiParams::validate() const {
  if (a.empty() || a.size() != b.size())
    throw Error(Errc::InvalidArgument, "Jacobi parameters need equal, nonzero lengths");
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!std::isfinite(a[j]) || !std::isfinite(b[j]))
      throw Error(Errc::InvalidArgument, "Jacobi parameters must be finite");
    if (!(a[j] > 0.0)) throw Error(Errc::InvalidArgument, "off-diagonal a_j must be positive");
  }
}

double JacobiParams::log_a_product() const {
  double s = 0.0;
  for (double v : a) s += std::log(v);
  return s;
}

Mat2 transfer_matrix(const JacobiParams& params, std::complex<double> z) {
  params.validate();
  Mat2 m{1.0, 0.0, 0.0, 1.0};
  for (int j = 0; j < params.period(); ++j) {
    const double aj = params.a[j];
    const std::complex<double> c = (z - params.b[j]) / aj;
    const double d = -1.0 / aj, e = aj;
    // [[c, d], [e, 0]] * m
    m = {c * m.m00 + d * m.m10, c * m.m01 + d * m.m11, e * m.m00, e * m.m01};
  }
  return m;
}

std::complex<double> discriminant(const JacobiParams& params, std::complex<double> z) {
  return transfer_matrix(params, z).trace();
}

std::pair<double, double> discriminant_with_derivative(const JacobiParams& params, double x) {
  double m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  double d00 = 0, d01 = 0, d10 = 0, d11 = 0;
  for (int j = 0; j < params.period(); ++j) {
    const double aj = params.a[j];
    const double c = (x - params.b[j]) / aj, d = -1.0 / aj, e = aj, dc = 1.0 / aj;
    const double n00 = c * m00 + d * m10, n01 = c * m01 + d * m11;
    const double nd00 = dc * m00 + c * d00 + d * d10, nd01 = dc * m01 + c * d01 + d * d11;
    d10 = e * d00;
    d11 = e * d01;
    d00 = nd00;
    d01 = nd01;
    m10 = e * m00;
    m11 = e * m01;
    m00 = n00;
    m01 = n01;
  }
  return {m00 + m11, d00 + d11};
}

double spectral_radius_bound(const JacobiParams& params) {
  double mb = 0.0, ma = 0.0;
  for (double v : params.b) mb = std::max(mb, std::abs(v));
  for (double v : params.a) ma = std::max(ma, v);
  return mb + 2.0 * ma + 1.0;
}

Poly discriminant_poly(const JacobiParams& params) {
  params.validate();
  const double r = spectral_radius_bound(params);
  auto f = [&](double x) {
    const double v = discriminant_with_derivative(params, x).first;
    if (v == 0.0) return LogValue{0.0, 0};
    return LogValue{std::log(std::abs(v)), v > 0 ? 1 : -1};
  };
  return Poly::interpolate(Hull{-r, r}, params.period(), f, false);
}

std::vector<double> discriminant_zeros(const JacobiParams& params) {
  const Poly d = discriminant_poly(params);
  const int p = d.degree();
  const auto c = d.coefficients();
  std::vector<double> s_roots;
  if (p == 1) {
    s_roots.push_back(-c[0] / c[1]);
  } else {
    Eigen::MatrixXd col = Eigen::MatrixXd::Zero(p, p);
    col(0, 1) = 1.0;
    for (int i = 1; i < p - 1; ++i) {
      col(i, i - 1) = 0.5;
      col(i, i + 1) = 0.5;
    }
    col(p - 1, p - 2) = 0.5;
    for (int k = 0; k < p; ++k) col(p - 1, k) -= c[k] / (2.0 * c[p]);
    Eigen::EigenSolver<Eigen::MatrixXd> es(col, false);
    for (int k = 0; k < p; ++k) s_roots.push_back(es.eigenvalues()(k).real());
  }
  std::vector<double> roots;
  for (double s : s_roots) {
    double x = d.hull().from_unit(s);
    for (int it = 0; it < 50; ++it) {
      const auto [v, dv] = discriminant_with_derivative(params, x);
      if (dv == 0.0) break;
      const double step = v / dv;
      x -= step;
      if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  for (std::size_t k = 1; k < roots.size(); ++k)
    if (!(roots[k] > roots[k - 1]))
      throw Error(Errc::RootPolishFailure, "discriminant zeros collapsed");
  return roots;
}

RootedPoly discriminant_product(const JacobiParams& params) {
  return RootedPoly(discriminant_zeros(params), -params.log_a_product());
}

BandStructure spectrum_structure(const JacobiParams& params) {
  return extract_bands(discriminant_product(params), 1e-12);
}

IntervalSet spectrum(const JacobiParams& params) { return spectrum_structure(params).bands; }

IdentityReport chebyshev_identity_check(const JacobiParams& params, double tol) {
  const IntervalSet e = spectrum(params);
  const int p = params.period();
  ChebyshevSolver solver(e);
  const ChebyshevResult r = solver.solve(p);
  const double log_prod = params.log_a_product();
  auto f = [&](double x) {
    const double v = discriminant_with_derivative(params, x).first;
    if (v == 0.0) return LogValue{0.0, 0};
    return LogValue{std::log(std::abs(v)) + log_prod, v > 0 ? 1 : -1};
  };
  const Poly scaled = Poly::interpolate(e.hull(), p, f, true);
  const double coef = relative_coefficient_error(r.poly, scaled);

  double cap = std::numeric_limits<double>::infinity();
  if (const EquilibriumData* eq = solver.equilibrium())
    cap = std::abs(std::exp(log_prod / p) - eq->capacity());

  double edge = std::numeric_limits<double>::infinity();
  const DiscriminantFrame frame(r);
  if (frame.bands().size() == e.size()) {
    edge = 0.0;
    for (std::size_t k = 0; k < e.size(); ++k) {
      edge = std::max(edge, std::abs(frame.bands().band(k).lo - e.band(k).lo));
      edge = std::max(edge, std::abs(frame.bands().band(k).hi - e.band(k).hi));
    }
  }
  return {e, coef, cap, edge, coef <= tol && cap <= 10.0 * tol};
}

}  // namespace chebwidom
