#include "chebwidom/chebyshev.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "chebwidom/errors.hpp"
#include "chebwidom/kernels.hpp"
#include "chebwidom/quadrature.hpp"

namespace chebwidom {

namespace {

constexpr double kPi = std::numbers::pi;

struct Candidate {
  double x;
  double v;
};

int sign_of(double v) { return (v > 0) - (v < 0); }

/// Local extrema of the raw expansion on every band, plus the band endpoints.
std::vector<Candidate> scan_extrema(const Expansion& e, const IntervalSet& set) {
  const int n = e.degree();
  const int grid = std::max(128, 64 * n);
  std::vector<Candidate> out;
  std::vector<double> xs(grid), v(grid), dv(grid);
  for (const Band& b : set.bands()) {
    for (int i = 0; i < grid; ++i) xs[i] = b.mid() - b.half() * std::cos(kPi * i / (grid - 1));
    xs.front() = b.lo;
    xs.back() = b.hi;
    kernels::expansion_grid(e, xs, v, dv);
    out.push_back({b.lo, v.front()});
    for (int i = 0; i + 1 < grid; ++i) {
      if (dv[i] == 0.0 && i > 0) {
        out.push_back({xs[i], v[i]});
        continue;
      }
      if (!(dv[i] * dv[i + 1] < 0.0)) continue;
      double lo = xs[i], hi = xs[i + 1], dlo = dv[i];
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double vm, dm;
        e.raw_value_deriv(mid, vm, dm);
        if ((dm > 0) == (dlo > 0)) {
          lo = mid;
          dlo = dm;
        } else {
          hi = mid;
        }
      }
      const double x = 0.5 * (lo + hi);
      out.push_back({x, e.raw_value(x)});
    }
    out.push_back({b.hi, v.back()});
  }
  return out;
}

/// Reduces sorted candidates to n+1 alternating points, keeping a global maximizer.
/// Returns fewer than n+1 points if the candidates do not alternate often enough.
std::vector<Candidate> select_alternating(const std::vector<Candidate>& cands, int n) {
  std::vector<Candidate> run;
  for (const Candidate& c : cands) {
    if (sign_of(c.v) == 0) continue;
    if (!run.empty() && sign_of(run.back().v) == sign_of(c.v)) {
      if (std::abs(c.v) > std::abs(run.back().v)) run.back() = c;
    } else {
      run.push_back(c);
    }
  }
  const std::size_t want = static_cast<std::size_t>(n) + 1;
  while (run.size() > want) {
    if (run.size() == want + 1) {
      if (std::abs(run.front().v) < std::abs(run.back().v))
        run.erase(run.begin());
      else
        run.pop_back();
      continue;
    }
    std::size_t k = 0;
    for (std::size_t i = 1; i < run.size(); ++i)
      if (std::abs(run[i].v) < std::abs(run[k].v)) k = i;
    if (k == 0 || k + 1 == run.size()) {
      run.erase(run.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      // Dropping an interior point leaves two equal signs side by side.
      const Candidate keep =
          std::abs(run[k - 1].v) >= std::abs(run[k + 1].v) ? run[k - 1] : run[k + 1];
      run.erase(run.begin() + static_cast<std::ptrdiff_t>(k - 1),
                run.begin() + static_cast<std::ptrdiff_t>(k + 2));
      run.insert(run.begin() + static_cast<std::ptrdiff_t>(k - 1), keep);
    }
  }
  return run;
}

bool strictly_increasing(const std::vector<double>& x) {
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] > x[i - 1])) return false;
  return true;
}

double project_into(const IntervalSet& set, double x) {
  double best = x, dist = std::numeric_limits<double>::infinity();
  for (const Band& b : set.bands()) {
    const double c = std::clamp(x, b.lo, b.hi);
    if (std::abs(c - x) < dist) {
      dist = std::abs(c - x);
      best = c;
    }
  }
  return best;
}

}  // namespace

double default_tolerance(int n) { return n <= 40 ? 1e-12 : 1e-10; }

LogValue ChebyshevResult::log_value(double x) const {
  if (expansion) return expansion->log_value(x);
  return product.log_value(x);
}

ChebyshevSolver::ChebyshevSolver(IntervalSet set, PotentialOptions popts) : set_(std::move(set)) {
  try {
    eq_ = std::make_shared<const EquilibriumData>(set_, popts);
  } catch (const Error&) {
    eq_.reset();
  }
}

ChebyshevSolver::ChebyshevSolver(std::shared_ptr<const EquilibriumData> eq)
    : set_(eq->set()), eq_(std::move(eq)) {}

void ChebyshevSolver::ensure_basis(int n) {
  if (basis_ && basis_->max_degree() >= n) return;
  const int target = std::max(n, basis_ ? 2 * basis_->max_degree() : 16);
  basis_ = OrthoBasis::build(set_, eq_.get(), target);
}

std::vector<double> ChebyshevSolver::initial_reference(int n) const {
  const Hull hull = set_.hull();
  std::vector<double> ref(n + 1);
  if (eq_) {
    ref[0] = hull.lo;
    ref[n] = hull.hi;
    for (int j = 1; j < n; ++j) ref[j] = eq_->quantile(static_cast<double>(j) / n);
    if (strictly_increasing(ref)) return ref;
  }
  for (int j = 0; j <= n; ++j)
    ref[j] = project_into(set_, hull.from_unit(-std::cos(kPi * j / n)));
  if (strictly_increasing(ref)) return ref;

  // Split the points over the bands in proportion to their lengths.
  const std::size_t p = set_.size();
  std::vector<int> count(p, 0);
  std::vector<double> frac(p);
  int used = 0;
  for (std::size_t k = 0; k < p; ++k) {
    const double share = (n + 1) * set_.band(k).length() / set_.total_length();
    count[k] = static_cast<int>(std::floor(share));
    frac[k] = share - count[k];
    used += count[k];
  }
  while (used < n + 1) {
    const std::size_t k = static_cast<std::size_t>(
        std::max_element(frac.begin(), frac.end()) - frac.begin());
    ++count[k];
    frac[k] = -1.0;
    ++used;
  }
  ref.clear();
  for (std::size_t k = 0; k < p; ++k) {
    const Band& b = set_.band(k);
    if (count[k] == 1) ref.push_back(b.mid());
    for (int i = 0; count[k] > 1 && i < count[k]; ++i)
      ref.push_back(b.mid() - b.half() * std::cos(kPi * i / (count[k] - 1)));
  }
  return ref;
}

ChebyshevResult ChebyshevSolver::solve(int n, double tol, int max_iterations) {
  if (n < 1) throw Error(Errc::InvalidArgument, "degree must be at least 1");
  if (tol <= 0.0) tol = default_tolerance(n);
  ensure_basis(n);
  const OrthoBasis& basis = *basis_;

  std::vector<double> ref = initial_reference(n);
  std::vector<double> pk(n + 1);
  double best = std::numeric_limits<double>::infinity();
  int since_best = 0;
  double rel = std::numeric_limits<double>::infinity();

  for (int it = 1; it <= max_iterations; ++it) {
    Eigen::MatrixXd a(n + 1, n + 1);
    Eigen::VectorXd rhs(n + 1);
    for (int j = 0; j <= n; ++j) {
      basis.values(ref[j], n, pk);
      for (int k = 0; k < n; ++k) a(j, k) = pk[k];
      a(j, n) = ((n - j) % 2 == 0) ? -1.0 : 1.0;
      rhs(j) = -pk[n];
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    const double rcond = lu.rcond();
    if (!(rcond > 1e-15))
      throw Error(Errc::IllConditioned,
                  "reference system condition number " + std::to_string(1.0 / rcond), rel);
    const Eigen::VectorXd sol = lu.solve(rhs);
    std::vector<double> d(n + 1);
    for (int k = 0; k < n; ++k) d[k] = sol(k);
    d[n] = 1.0;
    const double level = std::abs(sol(n));
    auto expansion = std::make_shared<const Expansion>(basis_, std::move(d));

    const std::vector<Candidate> cands = scan_extrema(*expansion, set_);
    double peak = 0.0;
    for (const Candidate& c : cands) peak = std::max(peak, std::abs(c.v));
    rel = level > 0.0 ? (peak - level) / level : std::numeric_limits<double>::infinity();
    const std::vector<Candidate> next = select_alternating(cands, n);

    if (rel <= tol) {
      ChebyshevResult r(set_, n);
      r.expansion = expansion;
      r.iterations = it;
      r.residual = std::max(rel, 0.0);
      r.log_norm = std::log(peak) + expansion->log_factor();
      r.norm = std::exp(r.log_norm);
      if (next.size() == static_cast<std::size_t>(n) + 1) {
        for (const Candidate& c : next) r.alternation.push_back(c.x);
      } else {
        r.alternation = ref;
      }
      // One zero between consecutive alternation points.
      const double hull_len = set_.hull().length();
      auto value = [&](double x) { return expansion->raw(x).value; };
      for (int j = 0; j < n; ++j) {
        const double lo = r.alternation[j], hi = r.alternation[j + 1];
        double z = quad::bisect(value, lo, hi);
        const Scaled<double> s = expansion->raw(z);
        if (s.value != 0.0) {
          if (s.deriv == 0.0)
            throw Error(Errc::RootPolishFailure, "flat derivative at a zero of T_n");
          const double step = s.value / s.deriv;
          if (!(std::abs(step) <= 1e-13 * hull_len))
            throw Error(Errc::RootPolishFailure, "Newton polish did not settle", std::abs(step));
          const double zn = z - step;
          if (zn > lo && zn < hi && std::abs(value(zn)) <= std::abs(s.value)) z = zn;
        }
        r.zeros.push_back(z);
      }
      r.product = RootedPoly(r.zeros, 0.0);
      auto f = [&](double x) { return expansion->log_value(x); };
      r.poly = Poly::interpolate(set_.hull(), n, f, true);
      return r;
    }

    if (next.size() < static_cast<std::size_t>(n) + 1)
      throw Error(Errc::NoConvergence, "exchange lost the alternation", rel);
    if (rel < best * (1.0 - 1e-3)) {
      best = rel;
      since_best = 0;
    } else if (++since_best > 25) {
      throw Error(Errc::NoConvergence, "exchange stagnated", rel);
    }
    for (int j = 0; j <= n; ++j) ref[j] = next[j].x;
  }
  throw Error(Errc::NoConvergence, "iteration limit reached", rel);
}

ChebyshevResult chebyshev(const IntervalSet& set, int n, double tol) {
  ChebyshevSolver solver(set);
  return solver.solve(n, tol);
}

CertificateResult alternation_certificate(const std::function<double(double)>& p, int n,
                                          const IntervalSet& set, double threshold) {
  const int grid = std::max(256, 64 * (n + 1));
  std::vector<Candidate> cands;
  std::vector<double> xs(grid), v(grid);
  constexpr double golden = 0.6180339887498949;
  for (const Band& b : set.bands()) {
    for (int i = 0; i < grid; ++i) {
      xs[i] = b.mid() - b.half() * std::cos(kPi * i / (grid - 1));
      v[i] = p(xs[i]);
    }
    xs.front() = b.lo;
    xs.back() = b.hi;
    v.front() = p(b.lo);
    v.back() = p(b.hi);
    cands.push_back({b.lo, v.front()});
    for (int i = 1; i + 1 < grid; ++i) {
      const bool is_max = v[i] >= v[i - 1] && v[i] >= v[i + 1] && v[i] > 0;
      const bool is_min = v[i] <= v[i - 1] && v[i] <= v[i + 1] && v[i] < 0;
      if (!is_max && !is_min) continue;
      // Golden-section search for the extremum of s * p on the neighbouring cells.
      const double s = is_max ? 1.0 : -1.0;
      double lo = xs[i - 1], hi = xs[i + 1];
      double x1 = hi - golden * (hi - lo), x2 = lo + golden * (hi - lo);
      double f1 = s * p(x1), f2 = s * p(x2);
      for (int it = 0; it < 100 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++it) {
        if (f1 < f2) {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + golden * (hi - lo);
          f2 = s * p(x2);
        } else {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - golden * (hi - lo);
          f1 = s * p(x1);
        }
      }
      Candidate c{xs[i], v[i]};
      const double xm = 0.5 * (lo + hi);
      const double vm = p(xm);
      if (s * vm > s * c.v) c = {xm, vm};
      cands.push_back(c);
    }
    cands.push_back({b.hi, v.back()});
  }

  double norm = 0.0;
  for (const Candidate& c : cands) norm = std::max(norm, std::abs(c.v));

  auto alternating = [&](double level, std::vector<double>* pts) {
    int count = 0, last = 0;
    for (const Candidate& c : cands) {
      const int s = sign_of(c.v);
      if (s == 0 || std::abs(c.v) < level || s == last) continue;
      ++count;
      last = s;
      if (pts) pts->push_back(c.x);
    }
    return count;
  };

  std::vector<double> levels;
  for (const Candidate& c : cands)
    if (c.v != 0.0) levels.push_back(std::abs(c.v));
  std::sort(levels.begin(), levels.end());
  // alternating() is non-increasing in the level; find the largest level with n+1.
  std::size_t lo = 0, hi = levels.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (alternating(levels[mid], nullptr) >= n + 1)
      lo = mid + 1;
    else
      hi = mid;
  }
  CertificateResult out{false, 1.0, norm, {}};
  if (lo == 0 || norm == 0.0) return out;
  const double level = levels[lo - 1];
  out.defect = (norm - level) / norm;
  out.is_chebyshev = out.defect <= threshold;
  alternating(level, &out.points);
  out.points.resize(std::min<std::size_t>(out.points.size(), n + 1));
  return out;
}

CertificateResult alternation_certificate(const Poly& poly, const IntervalSet& set,
                                          double threshold) {
  auto f = [&](double x) {
    const LogValue lv = poly.evaluate_log(x);
    return lv.sign == 0 ? 0.0 : lv.sign * std::exp(lv.log_abs - poly.log_scale());
  };
  CertificateResult out = alternation_certificate(f, poly.degree(), set, threshold);
  out.norm *= std::exp(poly.log_scale());
  return out;
}

CertificateResult alternation_certificate(const ChebyshevResult& r, double threshold) {
  auto f = [&](double x) {
    const LogValue lv = r.product.log_value(x);
    return lv.sign == 0 ? 0.0 : lv.sign * std::exp(lv.log_abs - r.log_norm);
  };
  CertificateResult out = alternation_certificate(f, r.n, r.set, threshold);
  out.norm *= std::exp(r.log_norm);
  return out;
}

Poly compose_chebyshev(const ChebyshevResult& base, int k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "composition order must be at least 1");
  const double log_norm = base.log_norm;
  auto f = [&](double x) -> LogValue {
    const LogValue t = base.product.log_value(x);
    const double u = t.sign == 0 ? 0.0 : t.sign * std::exp(t.log_abs - log_norm);
    double tkm1 = 1.0, tk = u;
    for (int j = 1; j < k; ++j) {
      const double next = 2.0 * u * tk - tkm1;
      tkm1 = tk;
      tk = next;
    }
    if (tk == 0.0) return {0.0, 0};
    return {k * log_norm + (1 - k) * std::log(2.0) + std::log(std::abs(tk)), tk > 0 ? 1 : -1};
  };
  return Poly::interpolate(base.set.hull(), k * base.n, f, true);
}

}  // namespace chebwidom
