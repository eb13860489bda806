#include <doctest.h>

#include <cmath>

#include "chebwidom/errors.hpp"
#include "chebwidom/jacobi.hpp"
#include "generators.hpp"

using namespace chebwidom;
using cd = std::complex<double>;

TEST_CASE("transfer matrices by hand") {
  const JacobiParams free{{1.0}, {0.0}};
  const Mat2 m = transfer_matrix(free, cd(0.3, 0.2));
  CHECK(std::abs(m.m00 - cd(0.3, 0.2)) < 1e-15);
  CHECK(std::abs(m.m01 + 1.0) < 1e-15);
  CHECK(std::abs(m.m10 - 1.0) < 1e-15);
  CHECK(std::abs(m.m11) < 1e-15);
  CHECK(std::abs(discriminant(free, 2.0) - 2.0) < 1e-15);

  const Mat2 two = transfer_matrix(JacobiParams{{1.0, 1.0}, {0.0, 0.0}}, 0.0);
  CHECK(std::abs(two.m00 + 1.0) < 1e-15);
  CHECK(std::abs(two.m01) < 1e-15);
  CHECK(std::abs(two.m10) < 1e-15);
  CHECK(std::abs(two.m11 + 1.0) < 1e-15);
}

TEST_CASE("discriminants by hand") {
  // a = [1, 1/2], b = 0: Delta = 2 z^2 - 5/2
  const JacobiParams p{{1.0, 0.5}, {0.0, 0.0}};
  for (double x : {-1.5, 0.0, 0.7, 2.0}) {
    CHECK(discriminant(p, x).real() == doctest::Approx(2 * x * x - 2.5));
    const auto [v, dv] = discriminant_with_derivative(p, x);
    CHECK(v == doctest::Approx(2 * x * x - 2.5));
    CHECK(dv == doctest::Approx(4 * x).scale(1.0));
  }
  // leading coefficient 2 by a second difference
  const double h = 0.5;
  const double second = (discriminant(p, 1 + h).real() - 2 * discriminant(p, 1.0).real() +
                         discriminant(p, 1 - h).real()) / (h * h);
  CHECK(second / 2 == doctest::Approx(2.0));
  const Poly d = discriminant_poly(p);
  CHECK(d.degree() == 2);
  const auto mono = d.monomial_coefficients();
  CHECK(mono[2] == doctest::Approx(2.0));
  CHECK(mono[0] == doctest::Approx(-2.5));
  const auto z = discriminant_zeros(p);
  REQUIRE(z.size() == 2);
  CHECK(z[1] == doctest::Approx(std::sqrt(1.25)).epsilon(1e-15));
}

TEST_CASE("spectra by hand") {
  const IntervalSet s1 = spectrum(JacobiParams{{1.0}, {0.0}});
  REQUIRE(s1.size() == 1);
  CHECK(s1.band(0).lo == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(s1.band(0).hi == doctest::Approx(2.0).epsilon(1e-15));

  const IntervalSet s2 = spectrum(JacobiParams{{0.5}, {0.0}});
  CHECK(s2.band(0).lo == doctest::Approx(-1.0).epsilon(1e-15));

  // Delta = z^2 - 3
  const IntervalSet s3 = spectrum(JacobiParams{{1.0, 1.0}, {1.0, -1.0}});
  REQUIRE(s3.size() == 2);
  CHECK(s3.band(0).lo == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-14));
  CHECK(s3.band(0).hi == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(s3.band(1).lo == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s3.band(1).hi == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
  CHECK(s3.symmetric(1e-14));

  // closed gap: Delta = z^2 - 2
  const BandStructure closed = spectrum_structure(JacobiParams{{1.0, 1.0}, {0.0, 0.0}});
  REQUIRE(closed.closed.size() == 1);
  CHECK(closed.closed[0]);
  REQUIRE(closed.bands.size() == 1);
  CHECK(closed.bands.band(0).hi == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("Chebyshev identity by hand") {
  const IdentityReport r1 = chebyshev_identity_check(JacobiParams{{0.5}, {0.0}}, 1e-8);
  CHECK(r1.pass);
  CHECK(r1.capacity_residual < 1e-14);
  const IdentityReport r2 = chebyshev_identity_check(JacobiParams{{1.0, 1.0}, {0.0, 0.0}}, 1e-8);
  CHECK(r2.pass);
  CHECK(r2.spectrum.size() == 1);
  const ChebyshevResult t2 = chebyshev(r2.spectrum, 2);
  const auto mono = t2.poly.monomial_coefficients();
  CHECK(mono[0] == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(std::abs(mono[1]) < 1e-12);
}

TEST_CASE("invalid parameters") {
  auto code = [](JacobiParams p) {
    try {
      p.validate();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::EmptyInput;
  };
  CHECK(code({{}, {}}) == Errc::InvalidArgument);
  CHECK(code({{1.0, 2.0}, {0.0}}) == Errc::InvalidArgument);
  CHECK(code({{0.0}, {0.0}}) == Errc::InvalidArgument);
  CHECK(code({{1.0}, {NAN}}) == Errc::InvalidArgument);
  CHECK(code({{1.0}, {0.0}}) == Errc::EmptyInput);
}

TEST_CASE("property: random periodic parameters") {
  gen::Gen g(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int p = 1 + trial % 4;
    const JacobiParams q = g.params(p);
    for (int k = 0; k < 50; ++k) {
      const cd z(g.uniform(-4, 4), g.uniform(-4, 4));
      const Mat2 m = transfer_matrix(q, z);
      CHECK(std::abs(m.det() - 1.0) <= 1e-12 * std::max(1.0, std::norm(m.m00) + std::norm(m.m01)));
    }
    CHECK(discriminant(q, 0.37).imag() == 0.0);
    const IntervalSet e = spectrum(q);
    CHECK(e.size() <= static_cast<std::size_t>(p));
    for (std::size_t k = 0; k + 1 < e.size(); ++k) CHECK(e.band(k).hi < e.band(k + 1).lo);
    // Delta' != 0 where |Delta| < 2
    for (const Band& b : e.bands())
      for (int i = 1; i < 200; ++i) {
        const double x = b.lo + b.length() * i / 200.0;
        const auto [v, dv] = discriminant_with_derivative(q, x);
        if (std::abs(v) < 2.0 - 1e-9) CHECK(dv != 0.0);
      }
    const IdentityReport r = chebyshev_identity_check(q, 1e-8);
    CHECK(r.pass);
    CHECK(r.coefficient_residual <= 1e-8);
    CHECK(r.capacity_residual <= 1e-6);
    CHECK(r.edge_residual <= 1e-8);
    // shifting b translates the spectrum
    JacobiParams shifted = q;
    for (double& v : shifted.b) v += 0.25;
    const IntervalSet es = spectrum(shifted);
    REQUIRE(es.size() == e.size());
    CHECK(es.band(0).lo == doctest::Approx(e.band(0).lo + 0.25).epsilon(1e-12));
  }
}
