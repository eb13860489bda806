#include <doctest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

#include "chebwidom/errors.hpp"
#include "chebwidom/jacobi.hpp"
#include "chebwidom/potential.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace chebwidom;
using std::numbers::pi;

namespace {

// Two-band oracles from tanh-sinh quadrature, independent of the library's
// moment system and cosine series.
struct TwoBand {
  double a1, b1, a2, b2;

  // int_lo^hi h(t) / sqrt|(t-a1)(t-b1)(t-a2)(t-b2)| dt, with exact distances to
  // the integration ends supplied by the two-argument tanh-sinh interface.
  template <class H>
  double integrate(H h, double lo, double hi) const {
    boost::math::quadrature::tanh_sinh<double> ts;
    const double mid = 0.5 * (lo + hi);
    auto f = [&](double t, double tc) {
      double r = 1.0;
      for (double e : {a1, b1, a2, b2}) {
        double d = t - e;
        if (e == lo && t < mid) d = -tc;
        if (e == hi && t > mid) d = -tc;
        r *= std::abs(d);
      }
      return h(t) / std::sqrt(r);
    };
    return ts.integrate(f, lo, hi, 1e-15);
  }

  double critical_point() const {
    double lo = b1, hi = a2;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double m = 0.5 * (lo + hi);
      (integrate([&](double t) { return t - m; }, b1, a2) > 0 ? lo : hi) = m;
    }
    return 0.5 * (lo + hi);
  }
  double first_band_measure(double c) const {
    return integrate([&](double t) { return std::abs(t - c); }, a1, b1) / pi;
  }
  double green_at(double c) const {
    return integrate([&](double t) { return std::abs(t - c); }, b1, c);
  }
};

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("single interval") {
  const EquilibriumData eq(IntervalSet::validate({{-1, 1}}));
  CHECK(eq.capacity() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(eq.robin() == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(eq.critical_points().empty());
  CHECK(eq.pw_sum() == 0.0);
  CHECK(eq.density(0.0) == doctest::Approx(1.0 / pi).epsilon(1e-13));
  CHECK(eq.density(0.5) == doctest::Approx(0.367552).epsilon(1e-6));
  CHECK(eq.band_measure(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eq.green(2.0) == doctest::Approx(1.316958).epsilon(1e-6));
  CHECK(eq.blaschke(2.0).real() == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-13));
  CHECK(std::abs(eq.blaschke(2.0).imag()) < 1e-14);
  gen::Gen g(3);
  for (int i = 0; i < 50; ++i) {
    const double x = g.uniform(-0.999, 0.999);
    CHECK(eq.cdf(x) == doctest::Approx(1.0 - std::acos(x) / pi).epsilon(1e-12));
    const auto z = g.off_hull(IntervalSet::validate({{-1, 1}}), 0.01, 4.0);
    CHECK(eq.green(z) == doctest::Approx(oracle::interval_green(-1, 1, z)).epsilon(1e-12));
  }
  CHECK(capacity(IntervalSet::validate({{0, 4}})).first == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("symmetric two-band set") {
  const oracle::Symmetric o{0.5};
  const EquilibriumData eq(IntervalSet::validate({{-1, -0.5}, {0.5, 1}}));
  CHECK(eq.capacity() == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-13));
  REQUIRE(eq.critical_points().size() == 1);
  CHECK(std::abs(eq.critical_points()[0]) < 1e-14);
  CHECK(eq.pw_sum() == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-12));
  CHECK(eq.band_measure(0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(eq.density(0.75) == doctest::Approx(o.density(0.75)).epsilon(1e-12));
  CHECK(eq.green(0.0) == doctest::Approx(0.549306).epsilon(1e-6));
  const double b15 = std::exp(-o.green(1.5));
  CHECK(eq.blaschke(1.5).real() == doctest::Approx(b15).epsilon(1e-12));
  CHECK(std::remainder(eq.winding_phase(std::vector<std::size_t>{0}) + pi, 2 * pi) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(std::remainder(eq.winding_phase(std::vector<std::size_t>{0, 1}), 2 * pi) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  gen::Gen g(4);
  for (int i = 0; i < 50; ++i) {
    const auto z = g.off_set(eq.set(), 3.0);
    CHECK(eq.green(z) == doctest::Approx(o.green(z)).epsilon(1e-11).scale(1.0));
  }
}

TEST_CASE("two bands against tanh-sinh quadrature") {
  for (const TwoBand t : {TwoBand{0, 1, 2, 3}, TwoBand{0, 1, 2, 3.5}, TwoBand{-1, -0.3, 0.1, 1}}) {
    const EquilibriumData eq(IntervalSet::validate({{t.a1, t.b1}, {t.a2, t.b2}}));
    const double c = t.critical_point();
    REQUIRE(eq.critical_points().size() == 1);
    CHECK(eq.critical_points()[0] == doctest::Approx(c).epsilon(1e-11));
    CHECK(eq.band_measure(0) == doctest::Approx(t.first_band_measure(c)).epsilon(1e-11));
    CHECK(eq.critical_values()[0] == doctest::Approx(t.green_at(c)).epsilon(1e-10));
    CHECK(eq.pw_sum() > 0.0);
  }
  // {[0,1],[2,3]} is symmetric about 3/2.
  const EquilibriumData eq(IntervalSet::validate({{0, 1}, {2, 3}}));
  CHECK(eq.critical_points()[0] == doctest::Approx(1.5).epsilon(1e-13));
  CHECK(eq.band_measure(0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(eq.capacity() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("capacities of periodic spectra") {
  // (a_1...a_p)^{1/p} is the capacity of the spectrum; independent of the moment system.
  gen::Gen g(21);
  for (int trial = 0; trial < 30; ++trial) {
    const JacobiParams p = g.params(2 + trial % 2);
    const IntervalSet e = spectrum(p);
    const EquilibriumData eq(e);
    CHECK(eq.capacity() == doctest::Approx(std::exp(p.log_a_product() / p.period())).epsilon(1e-10));
    for (double m : eq.band_measures()) {
      const double k = std::round(m * p.period());
      CHECK(m == doctest::Approx(k / p.period()).epsilon(1e-9));
    }
  }
  const JacobiParams p3{{1.0, 0.8, 1.2}, {0.6, -0.5, 0.1}};
  const EquilibriumData eq(spectrum(p3));
  CHECK(std::remainder(eq.winding_phase(std::vector<std::size_t>{1}) + 2 * pi / 3, 2 * pi) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
}

TEST_CASE("property: affine covariance, Green boundary values and asymptotics") {
  gen::Gen g(8);
  for (int trial = 0; trial < 25; ++trial) {
    const IntervalSet s = g.set(g.integer(2, 4));
    const double scale = g.uniform(0.3, 3.0), shift = g.uniform(-2, 2);
    const EquilibriumData eq(s), eqt(s.affine(scale, shift));
    CHECK(eqt.capacity() == doctest::Approx(scale * eq.capacity()).epsilon(1e-11));
    CHECK(eqt.pw_sum() == doctest::Approx(eq.pw_sum()).epsilon(1e-10));
    double total = 0.0;
    for (double m : eq.band_measures()) total += m;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t k = 0; k < s.size(); ++k) {
      const Band& b = s.band(k);
      const double x = b.lo + g.uniform(0.0, 1.0) * b.length();
      CHECK(std::abs(eq.green(x)) < 1e-8);
      CHECK(eq.green_value(x).g >= 0.0);
    }
    const auto cps = eq.critical_points();
    const auto gaps = s.gaps();
    REQUIRE(cps.size() == gaps.size());
    for (std::size_t j = 0; j < gaps.size(); ++j) {
      CHECK(cps[j] > gaps[j].left);
      CHECK(cps[j] < gaps[j].right);
    }
    const auto z = g.off_set(s, 3.0);
    CHECK(eq.green(z) > 0.0);
    CHECK(eq.green(std::conj(z)) == doctest::Approx(eq.green(z)).epsilon(1e-12));
    // mean value property of a harmonic function on a small circle
    const std::complex<double> w = g.off_hull(s, 0.3, 3.0);
    double mean = 0.0;
    for (int k = 0; k < 64; ++k) mean += eq.green(w + 0.1 * std::polar(1.0, 2 * pi * k / 64));
    CHECK(mean / 64 == doctest::Approx(eq.green(w)).epsilon(1e-10));
    // G(z) - log|z| + log C(e) = O(1/z)
    const double big = 1e12;
    CHECK(eq.green(big) - std::log(big) == doctest::Approx(-std::log(eq.capacity())).epsilon(1e-10));
    CHECK(1e6 * eq.blaschke(1e6).real() == doctest::Approx(eq.capacity()).epsilon(1e-5));
    const std::complex<double> zc(z.real(), z.imag() == 0.0 ? 0.5 : z.imag());
    CHECK(std::abs(eq.blaschke(zc)) == doctest::Approx(std::exp(-eq.green(zc))).epsilon(1e-10));
  }
}

TEST_CASE("error reporting") {
  const EquilibriumData eq(IntervalSet::validate({{-1, -0.5}, {0.5, 1}}));
  CHECK(code_of([&] { eq.density(0.0); }) == Errc::OutsideSupport);
  CHECK(code_of([&] { eq.density(-1.0); }) == Errc::OutsideSupport);
  CHECK(code_of([&] { eq.blaschke(0.2); }) == Errc::BranchDomain);
  CHECK(code_name(Errc::QuadratureFailure) == "potential.QuadratureFailure");
  CHECK(code_of([] { EquilibriumData(IntervalSet::validate({{0, 1}, {1 + 1e-15, 2}, {2 + 1e-15, 3}})); }) ==
        Errc::SingularSystem);
  CHECK(code_of([] { EquilibriumData(IntervalSet::validate({{0, 1}, {1 + 1e-12, 2}})); }) ==
        Errc::QuadratureFailure);
}
