#include <doctest.h>

#include <cmath>

#include "chebwidom/chebyshev.hpp"
#include "chebwidom/errors.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace chebwidom;

namespace {
const IntervalSet kInterval = IntervalSet::validate({{-1, 1}});
const IntervalSet kSym = IntervalSet::validate({{-1, -0.5}, {0.5, 1}});

void check_monomial(const Poly& p, std::vector<double> expect, double tol = 1e-12) {
  const auto m = p.monomial_coefficients();
  REQUIRE(m.size() == expect.size());
  for (std::size_t k = 0; k < m.size(); ++k) CHECK(std::abs(m[k] - expect[k]) < tol);
}
}  // namespace

TEST_CASE("closed forms on [-1, 1] and the symmetric pair") {
  const ChebyshevResult t3 = chebyshev(kInterval, 3, 1e-12);
  CHECK(t3.norm == doctest::Approx(0.25).epsilon(1e-13));
  check_monomial(t3.poly, {0, -0.75, 0, 1});
  CHECK(t3.poly(1.0) == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(std::abs(t3.poly(0.0)) < 1e-15);
  REQUIRE(t3.zeros.size() == 3);
  CHECK(t3.zeros[0] == doctest::Approx(-std::sqrt(3.0) / 2).epsilon(1e-14));
  CHECK(std::abs(t3.zeros[1]) < 1e-15);
  CHECK(t3.zeros[2] == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));

  const ChebyshevResult t1 = chebyshev(kInterval, 1, 1e-12);
  CHECK(t1.norm == doctest::Approx(1.0).epsilon(1e-14));
  check_monomial(t1.poly, {0, 1});
  CHECK(std::abs(t1.zeros.at(0)) < 1e-15);

  const ChebyshevResult s2 = chebyshev(kSym, 2, 1e-12);
  CHECK(s2.norm == doctest::Approx(0.375).epsilon(1e-13));
  check_monomial(s2.poly, {-0.625, 0, 1});
  CHECK(s2.poly(0.5) == doctest::Approx(-0.375).epsilon(1e-13));
  CHECK(s2.zeros.at(1) == doctest::Approx(std::sqrt(0.625)).epsilon(1e-14));

  // brute force: minimax of u - c over u in [1/4, 1]
  double best_c = 0.0, best = 1e9;
  for (int i = 0; i <= 100000; ++i) {
    const double c = 0.25 + 0.75 * i / 100000.0;
    const double worst = std::max(std::abs(0.25 - c), std::abs(1.0 - c));
    if (worst < best) best = worst, best_c = c;
  }
  CHECK(best_c == doctest::Approx(0.625).epsilon(1e-5));

  for (int n = 1; n <= 30; ++n) {
    const ChebyshevResult r = chebyshev(kInterval, n);
    CHECK(r.norm == doctest::Approx(oracle::interval_norm(n)).epsilon(1e-12));
  }
}

TEST_CASE("stored basis against monomials on well-scaled sets") {
  for (const IntervalSet& s : {kInterval, kSym, IntervalSet::validate({{-1, 0.2}, {0.6, 1}})}) {
    ChebyshevSolver solver(s);
    for (int n = 1; n <= 10; ++n) {
      const ChebyshevResult r = solver.solve(n);
      const auto mono = r.poly.monomial_coefficients();
      CHECK(mono.back() == doctest::Approx(1.0).epsilon(1e-13));
      for (double x : {s.hull().lo, s.hull().hi}) {
        double v = 0.0;
        for (auto it = mono.rbegin(); it != mono.rend(); ++it) v = v * x + *it;
        CHECK(r.poly(x) == doctest::Approx(v).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("alternation certificates") {
  const Poly good = Poly::from_monomial(Hull{-1, 1}, std::vector<double>{0, -0.75, 0, 1});
  const CertificateResult c = alternation_certificate(good, kInterval);
  CHECK(c.is_chebyshev);
  CHECK(c.defect <= 1e-12);
  CHECK(c.norm == doctest::Approx(0.25));
  const Poly cube = Poly::from_monomial(Hull{-1, 1}, std::vector<double>{0, 0, 0, 1});
  CHECK_FALSE(alternation_certificate(cube, kInterval).is_chebyshev);
  const Poly sym = Poly::from_monomial(Hull{-1, 1}, std::vector<double>{-0.625, 0, 1});
  const CertificateResult s = alternation_certificate(sym, kSym);
  CHECK(s.is_chebyshev);
  CHECK(s.defect <= 1e-12);
}

TEST_CASE("composition") {
  const ChebyshevResult t1 = chebyshev(kInterval, 1);
  check_monomial(compose_chebyshev(t1, 3), {0, -0.75, 0, 1});
  const ChebyshevResult s2 = chebyshev(kSym, 2);
  CHECK(relative_coefficient_error(compose_chebyshev(s2, 1), s2.poly) < 1e-14);
  check_monomial(compose_chebyshev(s2, 2), {25.0 / 64 - 9.0 / 128, 0, -1.25, 0, 1});
  CHECK(relative_coefficient_error(compose_chebyshev(s2, 3), chebyshev(kSym, 6).poly) < 1e-12);
}

TEST_CASE("errors") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::EmptyInput;
  };
  CHECK(code([] { chebyshev(kInterval, 0); }) == Errc::InvalidArgument);
  CHECK(code([&] { compose_chebyshev(chebyshev(kInterval, 2), 0); }) == Errc::InvalidArgument);
  CHECK(code([] { ChebyshevSolver(kSym).solve(6, 1e-12, 0); }) == Errc::NoConvergence);
  CHECK(code_name(Errc::IllConditioned) == "chebyshev.IllConditioned");
  CHECK(default_tolerance(40) == 1e-12);
  CHECK(default_tolerance(41) == 1e-10);
}

TEST_CASE("property: result invariants on random sets") {
  gen::Gen g(17);
  for (int trial = 0; trial < 25; ++trial) {
    const IntervalSet s = g.set(g.integer(1, 4));
    ChebyshevSolver solver(s);
    const double log_c = std::log(solver.equilibrium()->capacity());
    const double scale = s.hull().length();
    for (int n : {1, 2, 3, 5, 8, 13, 21}) {
      const ChebyshevResult r = solver.solve(n);
      CHECK(r.residual <= default_tolerance(n));
      // Schiefermayr
      CHECK(r.log_norm >= std::log(2.0) + n * log_c - 1e-8);
      // alternation set
      REQUIRE(r.alternation.size() == static_cast<std::size_t>(n + 1));
      for (int j = 0; j <= n; ++j) {
        const double x = r.alternation[j];
        CHECK(s.contains(x, 1e-12 * scale));
        if (j) CHECK(x > r.alternation[j - 1]);
        const double expect = ((n - j) % 2 ? -1.0 : 1.0) * r.norm;
        CHECK(r.log_value(x).value() == doctest::Approx(expect).epsilon(1e-10));
      }
      // one zero between consecutive alternation points
      REQUIRE(r.zeros.size() == static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        CHECK(r.zeros[j] > r.alternation[j]);
        CHECK(r.zeros[j] < r.alternation[j + 1]);
      }
      // no monic competitor does better at the alternation points
      for (int q = 0; q < 5; ++q) {
        std::vector<double> c(n);
        for (double& v : c) v = g.uniform(-1, 1) * r.norm;
        double worst = 0.0;
        for (double x : r.alternation) {
          double pert = 0.0;
          for (int k = n - 1; k >= 0; --k) pert = pert * (x - s.hull().mid()) / scale + c[k];
          worst = std::max(worst, std::abs(r.log_value(x).value() + pert));
        }
        CHECK(worst >= r.norm * (1 - 1e-10));
      }
      const CertificateResult cert = alternation_certificate(r);
      CHECK(cert.is_chebyshev);
    }
  }
}

TEST_CASE("property: affine covariance and parity") {
  gen::Gen g(23);
  for (int trial = 0; trial < 15; ++trial) {
    const IntervalSet s = g.set(g.integer(1, 3));
    const double alpha = g.uniform(0.3, 3.0), beta = g.uniform(-2, 2);
    const IntervalSet t = s.affine(alpha, beta);
    ChebyshevSolver ss(s), st(t);
    for (int n : {2, 5, 9}) {
      const ChebyshevResult rs = ss.solve(n), rt = st.solve(n);
      CHECK(rt.log_norm == doctest::Approx(rs.log_norm + n * std::log(alpha)).epsilon(1e-10).scale(1.0));
      for (int k = 0; k < 5; ++k) {
        const double x = g.uniform(s.hull().lo, s.hull().hi);
        CHECK(rt.log_value(alpha * x + beta).value() ==
              doctest::Approx(std::pow(alpha, n) * rs.log_value(x).value()).epsilon(1e-9).scale(rt.norm));
      }
      // stored basis against Horner on the monomial form, to within Horner's
      // own condition number sum |m_k x^k|
      const auto mono = rs.poly.monomial_coefficients();
      CHECK(mono.back() == doctest::Approx(1.0).epsilon(1e-12));
      for (double x : {s.hull().lo, s.hull().hi}) {
        double v = 0.0, cond = 0.0;
        for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
          v = v * x + *it;
          cond = cond * std::abs(x) + std::abs(*it);
        }
        CHECK(std::abs(rs.poly(x) - v) <= 1e-12 * cond);
      }
    }
  }
  for (const IntervalSet& s : {kSym, IntervalSet::validate({{-2, -1.2}, {-0.3, 0.3}, {1.2, 2}})}) {
    CHECK(s.symmetric());
    ChebyshevSolver solver(s);
    for (int n = 1; n <= 11; n += 2) {
      const ChebyshevResult r = solver.solve(n);
      for (double x : {0.1, 0.55, 0.9, 1.5})
        CHECK(std::abs(r.poly(x) + r.poly(-x)) <= 1e-10 * std::max(r.norm, std::abs(r.poly(x))));
    }
  }
}
