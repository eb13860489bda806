#include "chebwidom/orthobasis.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "chebwidom/errors.hpp"
#include "chebwidom/potential.hpp"
#include "chebwidom/quadrature.hpp"

namespace chebwidom {

namespace {
constexpr double kBig = 1e150;
constexpr double kSmall = 1e-150;
const double kLogBig = std::log(kBig);
}  // namespace

std::shared_ptr<const OrthoBasis> OrthoBasis::build(const IntervalSet& set,
                                                    const EquilibriumData* eq, int max_degree) {
  if (max_degree < 0) throw Error(Errc::InvalidArgument, "negative basis degree");
  const int per_band = std::max(512, 16 * (max_degree + 1));
  std::vector<double> x, w;
  x.reserve(per_band * set.size());
  w.reserve(per_band * set.size());
  const std::vector<double> theta = quad::chebyshev_angles(per_band);
  const double total_len = set.total_length();
  for (std::size_t k = 0; k < set.size(); ++k) {
    const Band& b = set.band(k);
    for (double th : theta) {
      const double t = b.mid() + b.half() * std::cos(th);
      double wt;
      if (eq) {
        wt = eq->density(t) * b.half() * std::sin(th) * std::numbers::pi / per_band;
      } else {
        wt = b.length() / total_len / per_band;
      }
      x.push_back(t);
      w.push_back(wt);
    }
  }

  auto basis = std::make_shared<OrthoBasis>();
  double mass = 0.0;
  for (double v : w) mass += v;
  basis->p0_ = 1.0 / std::sqrt(mass);
  basis->a_.assign(max_degree + 1, 0.0);
  basis->b_.assign(max_degree + 1, 0.0);
  basis->log_lead_.assign(max_degree + 1, 0.0);
  basis->log_lead_[0] = std::log(basis->p0_);

  const std::size_t m = x.size();
  std::vector<double> prev(m, 0.0), cur(m, basis->p0_), next(m);
  for (int k = 0; k <= max_degree; ++k) {
    double bk = 0.0;
    for (std::size_t i = 0; i < m; ++i) bk += w[i] * x[i] * cur[i] * cur[i];
    basis->b_[k] = bk;
    if (k == max_degree) break;
    double nrm = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      next[i] = (x[i] - bk) * cur[i] - basis->a_[k] * prev[i];
      nrm += w[i] * next[i] * next[i];
    }
    const double ak1 = std::sqrt(nrm);
    if (!(ak1 > 0.0)) throw Error(Errc::IllConditioned, "discrete measure too small for degree");
    basis->a_[k + 1] = ak1;
    basis->log_lead_[k + 1] = basis->log_lead_[k] - std::log(ak1);
    for (std::size_t i = 0; i < m; ++i) next[i] /= ak1;
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return basis;
}

void OrthoBasis::values(double x, int n, std::span<double> out) const {
  double prev = 0.0, cur = p0_;
  out[0] = cur;
  for (int k = 0; k < n; ++k) {
    const double nx = ((x - b_[k]) * cur - a_[k] * prev) / a_[k + 1];
    prev = cur;
    cur = nx;
    out[k + 1] = cur;
  }
}

Expansion::Expansion(std::shared_ptr<const OrthoBasis> basis, std::vector<double> d)
    : basis_(std::move(basis)), d_(std::move(d)) {
  if (degree() > basis_->max_degree())
    throw Error(Errc::InvalidArgument, "expansion degree exceeds basis");
}

template <class T>
static Scaled<T> raw_impl(const OrthoBasis& bs, std::span<const double> d, T x) {
  const auto a = bs.a();
  const auto b = bs.b();
  const int n = static_cast<int>(d.size()) - 1;
  T prev = 0.0, cur = bs.p0(), dprev = 0.0, dcur = 0.0;
  T sum = d[0] * cur, dsum = 0.0;
  double ls = 0.0;
  for (int k = 0; k < n; ++k) {
    const T nx = ((x - b[k]) * cur - a[k] * prev) / a[k + 1];
    const T dnx = ((x - b[k]) * dcur + cur - a[k] * dprev) / a[k + 1];
    prev = cur;
    cur = nx;
    dprev = dcur;
    dcur = dnx;
    sum += d[k + 1] * cur;
    dsum += d[k + 1] * dcur;
    if (std::abs(cur) > kBig || std::abs(dcur) > kBig) {
      prev *= kSmall;
      cur *= kSmall;
      dprev *= kSmall;
      dcur *= kSmall;
      sum *= kSmall;
      dsum *= kSmall;
      ls += kLogBig;
    }
  }
  return {sum, dsum, ls};
}

Scaled<double> Expansion::raw(double x) const { return raw_impl<double>(*basis_, d_, x); }

Scaled<std::complex<double>> Expansion::raw(std::complex<double> z) const {
  return raw_impl<std::complex<double>>(*basis_, d_, z);
}

double Expansion::raw_value(double x) const {
  const auto a = basis_->a();
  const auto b = basis_->b();
  const int n = degree();
  double prev = 0.0, cur = basis_->p0();
  double sum = d_[0] * cur;
  for (int k = 0; k < n; ++k) {
    const double nx = ((x - b[k]) * cur - a[k] * prev) / a[k + 1];
    prev = cur;
    cur = nx;
    sum += d_[k + 1] * cur;
  }
  return sum;
}

void Expansion::raw_value_deriv(double x, double& v, double& dv) const {
  const auto a = basis_->a();
  const auto b = basis_->b();
  const int n = degree();
  double prev = 0.0, cur = basis_->p0(), dprev = 0.0, dcur = 0.0;
  double sum = d_[0] * cur, dsum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double nx = ((x - b[k]) * cur - a[k] * prev) / a[k + 1];
    const double dnx = ((x - b[k]) * dcur + cur - a[k] * dprev) / a[k + 1];
    prev = cur;
    cur = nx;
    dprev = dcur;
    dcur = dnx;
    sum += d_[k + 1] * cur;
    dsum += d_[k + 1] * dcur;
  }
  v = sum;
  dv = dsum;
}

LogValue Expansion::log_value(double x) const {
  const Scaled<double> r = raw(x);
  if (r.value == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
  return {std::log(std::abs(r.value)) + r.log_scale + log_factor(), r.value > 0 ? 1 : -1};
}

}  // namespace chebwidom
