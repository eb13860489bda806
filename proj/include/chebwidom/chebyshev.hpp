#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "chebwidom/orthobasis.hpp"
#include "chebwidom/poly.hpp"
#include "chebwidom/potential.hpp"
#include "chebwidom/realsets.hpp"
#include "chebwidom/rooted.hpp"

namespace chebwidom {

/// Default stopping tolerance: 1e-12 up to degree 40, 1e-10 above.
double default_tolerance(int n);

struct ChebyshevResult {
  ChebyshevResult(IntervalSet s, int degree) : set(std::move(s)), n(degree) {}

  IntervalSet set;
  int n = 0;
  Poly poly;              ///< hull Chebyshev basis, monic
  RootedPoly product;     ///< prod (x - zeros)
  double norm = 0.0;      ///< may underflow; log_norm is authoritative
  double log_norm = 0.0;
  std::vector<double> alternation;
  std::vector<double> zeros;
  int iterations = 0;
  double residual = 0.0;  ///< (max|T_n| - |h|) / |h| at the last reference
  std::shared_ptr<const Expansion> expansion;

  /// T_n(x) from the orthogonal expansion (most accurate on and near the set).
  LogValue log_value(double x) const;
  /// log T_n(z) from the product form; Re part is log|T_n(z)|.
  std::complex<double> log_value(std::complex<double> z) const { return product.log_value(z); }
};

struct CertificateResult {
  bool is_chebyshev;
  double defect;
  double norm;
  std::vector<double> points;  ///< an alternating set at the certified level
};

/// Remez exchange on a fixed set, reusable across degrees. Holds the
/// equilibrium data and an orthogonal basis grown on demand. Not thread safe
/// (solve mutates the cached basis); use one solver per thread.
class ChebyshevSolver {
 public:
  explicit ChebyshevSolver(IntervalSet set, PotentialOptions popts = {});
  ChebyshevSolver(std::shared_ptr<const EquilibriumData> eq);

  const IntervalSet& set() const { return set_; }
  /// Null when the equilibrium data could not be built (fallback weights used).
  const EquilibriumData* equilibrium() const { return eq_.get(); }
  std::shared_ptr<const EquilibriumData> equilibrium_ptr() const { return eq_; }

  /// tol <= 0 selects default_tolerance(n).
  ChebyshevResult solve(int n, double tol = 0.0, int max_iterations = 200);

 private:
  void ensure_basis(int n);
  std::vector<double> initial_reference(int n) const;

  IntervalSet set_;
  std::shared_ptr<const EquilibriumData> eq_;
  std::shared_ptr<const OrthoBasis> basis_;
};

ChebyshevResult chebyshev(const IntervalSet& set, int n, double tol = 0.0);

inline const std::vector<double>& zeros(const ChebyshevResult& r) { return r.zeros; }

/// Scans the set for n+1 alternating near-extremal points of a monic degree-n
/// polynomial given by an evaluator. The level is the largest L at which an
/// alternating set with |P| >= L exists; defect = (max|P| - L) / max|P|.
CertificateResult alternation_certificate(const std::function<double(double)>& p, int n,
                                          const IntervalSet& set, double threshold = 1e-8);
CertificateResult alternation_certificate(const Poly& poly, const IntervalSet& set,
                                          double threshold = 1e-8);
/// Uses the product form of the result, independent of the exchange iteration.
CertificateResult alternation_certificate(const ChebyshevResult& r, double threshold = 1e-8);

/// ||T_n||^k S_k(T_n / ||T_n||), S_k = 2^{1-k} cos(k arccos(.)), as a hull-basis Poly.
Poly compose_chebyshev(const ChebyshevResult& base, int k);

}  // namespace chebwidom
