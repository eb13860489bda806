#include <doctest.h>

#include <cmath>
#include <numbers>

#include "chebwidom/poly.hpp"
#include "chebwidom/quadrature.hpp"
#include "chebwidom/rooted.hpp"
#include "generators.hpp"

using namespace chebwidom;

TEST_CASE("Gauss-Legendre integrates monomials exactly") {
  for (int n : {1, 4, 16, 64}) {
    const quad::Rule r = quad::gauss_legendre(n);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
    for (int k = 0; k < 2 * n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("cosine coefficients recover a trigonometric polynomial") {
  const int n = 64;
  const auto th = quad::chebyshev_angles(n);
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = 0.5 + 2.0 * std::cos(3 * th[i]) - std::cos(10 * th[i]);
  const auto c = quad::cosine_coefficients(g);
  CHECK(c[0] == doctest::Approx(0.5));
  CHECK(c[3] == doctest::Approx(2.0));
  CHECK(c[10] == doctest::Approx(-1.0));
  double rest = 0.0;
  for (int j = 0; j < n; ++j)
    if (j != 0 && j != 3 && j != 10) rest = std::max(rest, std::abs(c[j]));
  CHECK(rest < 1e-14);
}

TEST_CASE("Chebyshev interpolant of x^3") {
  const int n = 8;
  const auto th = quad::chebyshev_angles(n);
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = std::pow(std::cos(th[i]), 3);
  const auto c = quad::chebyshev_interpolant(v);
  // x^3 = (3 T_1 + T_3) / 4
  CHECK(c[1] == doctest::Approx(0.75));
  CHECK(c[3] == doctest::Approx(0.25));
  CHECK(std::abs(c[0]) < 1e-15);
  CHECK(std::abs(c[2]) < 1e-15);
}

TEST_CASE("bisect finds a bracketed root") {
  const double r = quad::bisect([](double x) { return std::cos(x) - x; }, 0.0, 1.0);
  CHECK(r == doctest::Approx(0.7390851332151607).epsilon(1e-15));
}

TEST_CASE("Poly from monomials evaluates consistently") {
  const std::vector<double> mono{1.0, -2.0, 0.0, 3.0};  // 1 - 2x + 3x^3
  const Poly p = Poly::from_monomial(Hull{-0.5, 2.0}, mono);
  for (double x : {-0.5, 0.1, 1.3, 2.0, 3.0}) {
    const double exact = 1.0 - 2.0 * x + 3.0 * x * x * x;
    CHECK(p(x) == doctest::Approx(exact).epsilon(1e-13));
    CHECK(p.evaluate_log(x).value() == doctest::Approx(exact).epsilon(1e-13));
  }
  const auto back = p.monomial_coefficients();
  for (std::size_t k = 0; k < mono.size(); ++k) CHECK(back[k] == doctest::Approx(mono[k]).scale(1.0));
  const Poly q = p.rebased(Hull{-3.0, 1.0});
  CHECK(q(0.7) == doctest::Approx(p(0.7)));
  CHECK(relative_coefficient_error(p, q) < 1e-14);
}

TEST_CASE("monic leading coefficient") {
  // On [-1, 1] the monic x^n has T_n coefficient 2^{1-n}.
  for (int n = 1; n < 10; ++n)
    CHECK(std::exp(log_monic_leading(Hull{-1, 1}, n)) == doctest::Approx(std::ldexp(1.0, 1 - n)));
  const Poly p = Poly::interpolate(
      Hull{0, 4}, 3, [](double x) { return LogValue{std::log(std::abs(x * x * x - 1)), x * x * x > 1 ? 1 : -1}; },
      true);
  CHECK(p(2.0) == doctest::Approx(7.0));
}

TEST_CASE("RootedPoly values, derivatives and critical points") {
  const RootedPoly p({-1.0, 0.5, 2.0}, std::log(3.0));
  auto exact = [](double x) { return 3.0 * (x + 1.0) * (x - 0.5) * (x - 2.0); };
  for (double x : {-2.0, 0.0, 1.0, 3.0}) {
    CHECK(p(x) == doctest::Approx(exact(x)));
    const double h = 1e-6;
    CHECK(p.log_derivative(x) ==
          doctest::Approx((exact(x + h) - exact(x - h)) / (2 * h) / exact(x)).epsilon(1e-7));
  }
  const std::complex<double> z(0.3, 1.1);
  const std::complex<double> pz = 3.0 * (z + 1.0) * (z - 0.5) * (z - 2.0);
  CHECK(std::abs(p(z) - pz) < 1e-13 * std::abs(pz));
  // 3 (x^3 - 1.5 x^2 - 1.5 x + 1)' = 3 (3x^2 - 3x - 1.5)
  const auto c = p.critical_points();
  REQUIRE(c.size() == 2);
  const double d = std::sqrt(9.0 + 18.0);
  CHECK(c[0] == doctest::Approx((3.0 - d) / 6.0));
  CHECK(c[1] == doctest::Approx((3.0 + d) / 6.0));
  const Poly q = p.to_poly(Hull{-1, 2});
  CHECK(q(1.5) == doctest::Approx(exact(1.5)));
  CHECK(p.scaled(std::log(2.0))(1.5) == doctest::Approx(2.0 * exact(1.5)));
}

TEST_CASE("property: critical points interlace the roots") {
  gen::Gen g(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = g.integer(2, 30);
    std::vector<double> r(n);
    for (double& v : r) v = g.uniform(-3, 3);
    std::sort(r.begin(), r.end());
    bool distinct = true;
    for (int k = 1; k < n; ++k) distinct = distinct && r[k] - r[k - 1] > 1e-6;
    if (!distinct) continue;
    const RootedPoly p(r, 0.0);
    const auto c = p.critical_points();
    REQUIRE(c.size() == static_cast<std::size_t>(n - 1));
    for (int k = 0; k + 1 < n; ++k) {
      CHECK(c[k] > r[k]);
      CHECK(c[k] < r[k + 1]);
      CHECK(std::abs(p.log_derivative(c[k])) * (r[k + 1] - r[k]) < 1e-8);
    }
  }
}
