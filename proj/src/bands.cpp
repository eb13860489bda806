#include "chebwidom/bands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "chebwidom/errors.hpp"
#include "chebwidom/potential.hpp"
#include "chebwidom/quadrature.hpp"

namespace chebwidom {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog2 = std::log(2.0);

/// Graded composite Gauss-Legendre for int_0^1 h(s) ds, panels halving towards 0.
double graded_integral(const std::function<double(double)>& h) {
  static const quad::Rule rule = quad::gauss_legendre(16);
  double acc = 0.0;
  double hi = 1.0;
  for (int k = 0; k < 40; ++k) {
    const double lo = k == 39 ? 0.0 : 0.5 * hi;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      acc += half * rule.weights[i] * h(mid + half * rule.nodes[i]);
    hi = lo;
  }
  return acc;
}

}  // namespace

BandStructure extract_bands(const RootedPoly& d, double closed_tol, bool strict) {
  const int n = d.degree();
  if (n < 1) throw Error(Errc::InvalidArgument, "band extraction needs degree >= 1");
  const auto r = d.roots();
  struct {
    std::vector<double> edges, critical;
    std::vector<bool> closed;
  } out;
  out.critical = d.critical_points();
  auto f = [&](double x) { return d.log_value(x).log_abs - kLog2; };

  out.closed.resize(out.critical.size());
  for (std::size_t i = 0; i < out.critical.size(); ++i) {
    const double v = std::exp(f(out.critical[i]) + kLog2);
    if (strict && v < 2.0 - closed_tol)
      throw Error(Errc::EdgeCountMismatch,
                  "critical value inside (-2, 2) at " + std::to_string(out.critical[i]), v);
    out.closed[i] = v - 2.0 <= closed_tol;
  }

  const double span = std::max(r.back() - r.front(), 1e-3 * (1.0 + std::abs(r.front())));
  double left = r.front() - span, right = r.back() + span;
  for (double s = span; f(left) <= 0.0; s *= 2) left = r.front() - 2 * s;
  for (double s = span; f(right) <= 0.0; s *= 2) right = r.back() + 2 * s;

  std::vector<std::pair<double, double>> pairs;
  out.edges.reserve(2 * n);
  for (int j = 0; j < n; ++j) {
    const double seg_lo = j == 0 ? left : out.critical[j - 1];
    const double seg_hi = j == n - 1 ? right : out.critical[j];
    const double rj = r[j];
    double alpha, beta;
    if (j > 0 && out.closed[j - 1]) {
      alpha = seg_lo;
    } else {
      alpha = quad::bisect(f, seg_lo, rj, 1.0, -1.0);
    }
    if (j < n - 1 && out.closed[j]) {
      beta = seg_hi;
    } else {
      beta = quad::bisect(f, rj, seg_hi, -1.0, 1.0);
    }
    out.edges.push_back(alpha);
    out.edges.push_back(beta);
    pairs.emplace_back(alpha, beta);
  }
  return {std::move(out.edges), std::move(out.critical), std::move(out.closed),
          IntervalSet::validate(pairs)};
}

DiscriminantFrame::DiscriminantFrame(const ChebyshevResult& source)
    : source_(std::make_shared<const ChebyshevResult>(source)),
      n_(source.n),
      delta_(source.product.scaled(kLog2 - source.log_norm)),
      structure_(extract_bands(delta_, 2.0 * std::max(10.0 * source.residual, 1e-11))) {
  for (const Band& b : structure_.bands.bands()) {
    outer_edges_.push_back(b.lo);
    outer_edges_.push_back(b.hi);
  }
  for (std::size_t i = 0; i < structure_.critical.size(); ++i)
    if (!structure_.closed[i]) open_critical_.push_back(structure_.critical[i]);
}

Poly DiscriminantFrame::delta_poly() const { return delta_.to_poly(source_->set.hull()); }

std::vector<double> DiscriminantFrame::interior_critical() const { return open_critical_; }

std::complex<double> DiscriminantFrame::log_bn_inverse(std::complex<double> z) const {
  const std::complex<double> lu = delta_.log_value(z) - kLog2;
  if (lu.real() > 20.0) return lu + std::log(1.0 + std::sqrt(1.0 - std::exp(-2.0 * lu)));
  const std::complex<double> u = std::exp(lu);
  const std::complex<double> s = std::sqrt(u * u - 1.0);
  const std::complex<double> w1 = u + s, w2 = u - s;
  return std::log(std::abs(w1) >= std::abs(w2) ? w1 : w2);
}

double DiscriminantFrame::green(std::complex<double> z) const {
  return std::max(0.0, log_bn_inverse(z).real() / n_);
}

std::pair<std::complex<double>, std::complex<double>> DiscriminantFrame::bn_powers(
    std::complex<double> z, double tol) const {
  const double scale = structure_.bands.hull().length();
  if (std::abs(z.imag()) <= tol * scale && structure_.bands.contains(z.real(), tol * scale))
    throw Error(Errc::OnSpectrum, "B_n powers requested on the envelope set");
  const std::complex<double> lw = log_bn_inverse(z);
  return {std::exp(-lw), std::exp(lw)};
}

double DiscriminantFrame::log_envelope_capacity() const {
  return (source_->log_norm - kLog2) / n_;
}

double DiscriminantFrame::envelope_capacity() const { return std::exp(log_envelope_capacity()); }

double DiscriminantFrame::density(double x) const {
  bool inside = false;
  for (const Band& b : structure_.bands.bands())
    if (x > b.lo && x < b.hi) inside = true;
  if (!inside) throw Error(Errc::OutsideSupport, "density requested off the interior of e_n");
  const LogValue lv = delta_.log_value(x);
  const double dv = lv.value();
  const double ddv = dv * delta_.log_derivative(x);
  const double root = std::sqrt(std::max(0.0, (2.0 - dv) * (2.0 + dv)));
  return std::abs(ddv) / (kPi * n_ * root);
}

double DiscriminantFrame::density_product(double x) const {
  bool inside = false;
  for (const Band& b : structure_.bands.bands())
    if (x > b.lo && x < b.hi) inside = true;
  if (!inside) throw Error(Errc::OutsideSupport, "density requested off the interior of e_n");
  double l = 0.0;
  for (double c : open_critical_) l += std::log(std::abs(x - c));
  for (double e : outer_edges_) l -= 0.5 * std::log(std::abs(x - e));
  return std::exp(l) / kPi;
}

double DiscriminantFrame::integrate_density(double u, double v) const {
  // Split at the midpoint and substitute x = end + L s^2 from each end, which
  // absorbs an inverse square root there. Distances are (anchor - e) + offset:
  // anchor - e is exact for nearby e, so bands of width ~1e-14 still resolve.
  auto raw = [this](double anchor, double offset) {
    double l = 0.0;
    for (double c : open_critical_) l += std::log(std::abs((anchor - c) + offset));
    for (double e : outer_edges_) l -= 0.5 * std::log(std::abs((anchor - e) + offset));
    return std::exp(l) / kPi;
  };
  const double m = 0.5 * (u + v);
  const double lu = m - u, lv = v - m;
  const double left = graded_integral([&](double s) { return raw(u, lu * s * s) * 2.0 * lu * s; });
  const double right =
      graded_integral([&](double s) { return raw(v, -lv * s * s) * 2.0 * lv * s; });
  return left + right;
}

double DiscriminantFrame::measure(double u, double v) const {
  if (v < u) std::swap(u, v);
  double total = 0.0;
  for (const Band& b : structure_.bands.bands()) {
    const double lo = std::max(u, b.lo), hi = std::min(v, b.hi);
    if (hi > lo) total += integrate_density(lo, hi);
  }
  return total;
}

BandMasses DiscriminantFrame::band_masses() const {
  // Edges sit at Delta = +-2 by construction, i.e. theta = 0 or pi; only the
  // zero eta_j needs an actual arccos.
  BandMasses m;
  auto edge_theta = [this](double x) { return delta_.log_value(x).sign > 0 ? 0.0 : kPi; };
  const auto& zs = source_->zeros;
  for (int j = 0; j < n_; ++j) {
    const double a = structure_.edges[2 * j], b = structure_.edges[2 * j + 1];
    const double ta = edge_theta(a), tb = edge_theta(b);
    const double te = std::acos(std::clamp(delta_.log_value(zs[j]).value() / 2.0, -1.0, 1.0));
    m.band.push_back(std::abs(tb - ta) / (kPi * n_));
    m.left_half.push_back(std::abs(te - ta) / (kPi * n_));
    m.right_half.push_back(std::abs(tb - te) / (kPi * n_));
  }
  return m;
}

BandMasses DiscriminantFrame::band_masses_quadrature() const {
  BandMasses m;
  const auto& zs = source_->zeros;
  for (int j = 0; j < n_; ++j) {
    const double a = structure_.edges[2 * j], b = structure_.edges[2 * j + 1];
    const double l = integrate_density(a, zs[j]);
    const double r = integrate_density(zs[j], b);
    m.left_half.push_back(l);
    m.right_half.push_back(r);
    m.band.push_back(l + r);
  }
  return m;
}

GapMass DiscriminantFrame::gap_mass(const Gap& gap) const {
  GapMass out;
  const double hull_len = source_->set.hull().length();
  const double edge_tol = 1e-9 * hull_len;
  int pieces = 0;
  for (const Band& b : structure_.bands.bands()) {
    const double lo = std::max(gap.left, b.lo), hi = std::min(gap.right, b.hi);
    if (!(hi > lo)) continue;
    // Slivers at the ends of K come from rounding in edges that coincide with e's.
    const bool at_end = lo == gap.left || hi == gap.right;
    if (at_end && hi - lo <= edge_tol) continue;
    ++pieces;
    out.width += hi - lo;
    out.mass += integrate_density(lo, hi);
  }
  out.single_interval = pieces <= 1;
  for (double z : source_->zeros) {
    if (z > gap.left && z < gap.right) {
      out.has_zero = true;
      out.zero = z;
    }
    if (std::abs(z - gap.left) <= edge_tol || std::abs(z - gap.right) <= edge_tol)
      out.ambiguous = true;
  }
  return out;
}

std::vector<GapBandSample> gap_band_width(ChebyshevSolver& solver, const Gap& gap,
                                          const std::vector<int>& n_list) {
  std::vector<GapBandSample> out;
  for (int n : n_list) {
    const DiscriminantFrame frame(solver.solve(n));
    const GapMass gm = frame.gap_mass(gap);
    out.push_back({n, gm.width, gm.mass, gm.zero});
  }
  return out;
}

std::vector<double> minimality_slack(const DiscriminantFrame& frame,
                                     const std::vector<double>& lambdas) {
  std::vector<double> out;
  const double cn = frame.envelope_capacity();
  for (double lam : lambdas) {
    if (!(lam > 0.0 && lam <= 1.0))
      throw Error(Errc::InvalidArgument, "lambda must lie in (0, 1]");
    const BandStructure g = extract_bands(frame.delta().scaled(std::log(lam)), 2e-11, false);
    const EquilibriumData eq(g.bands);
    out.push_back(eq.capacity() - cn);
  }
  return out;
}

}  // namespace chebwidom
