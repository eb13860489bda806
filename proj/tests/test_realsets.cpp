#include <doctest.h>

#include "chebwidom/errors.hpp"
#include "chebwidom/realsets.hpp"
#include "generators.hpp"

using namespace chebwidom;

TEST_CASE("validate sorts and merges") {
  const IntervalSet s = IntervalSet::validate({{2, 3}, {-1, 0}, {0.5, 1}, {0.8, 1.5}});
  REQUIRE(s.size() == 3);
  CHECK(s.band(0) == Band{-1, 0});
  CHECK(s.band(1) == Band{0.5, 1.5});
  CHECK(s.band(2) == Band{2, 3});
  CHECK(s.hull() == Hull{-1, 3});
  const auto g = s.gaps();
  REQUIRE(g.size() == 2);
  CHECK(g[0] == Gap{0, 0.5});
  CHECK(g[1] == Gap{1.5, 2});
}

TEST_CASE("touching bands merge into one") {
  const IntervalSet s = IntervalSet::validate({{0, 1}, {1, 2}});
  REQUIRE(s.size() == 1);
  CHECK(s.band(0) == Band{0, 2});
  CHECK(s.gaps().empty());
}

TEST_CASE("validation errors") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  std::vector<std::pair<double, double>> none;
  CHECK(code([&] { IntervalSet::validate(none); }) == Errc::EmptyInput);
  CHECK(code([] { IntervalSet::validate({{1, 1}}); }) == Errc::DegenerateBand);
  CHECK(code([] { IntervalSet::validate({{2, 1}}); }) == Errc::DegenerateBand);
  CHECK(code([] { IntervalSet::validate({{0, NAN}}); }) == Errc::DegenerateBand);
  CHECK(code_name(Errc::DegenerateBand) == "realsets.DegenerateBand");
}

TEST_CASE("membership queries") {
  const IntervalSet s = IntervalSet::validate({{-1, -0.5}, {0.5, 1}});
  CHECK(s.contains(-0.75));
  CHECK(s.contains(0.5));
  CHECK_FALSE(s.contains(0.0));
  CHECK(s.contains(-0.49, 0.02));
  CHECK(s.band_of(0.7) == 1u);
  CHECK_FALSE(s.band_of(0.2).has_value());
  CHECK(s.gap_of(0.2) == 0u);
  CHECK_FALSE(s.gap_of(0.5).has_value());
  CHECK(s.total_length() == doctest::Approx(1.0));
  CHECK(s.symmetric());
  CHECK_FALSE(IntervalSet::validate({{-1, -0.5}, {0.4, 1}}).symmetric());
}

TEST_CASE("property: validate is idempotent and affine maps commute with queries") {
  gen::Gen g(11);
  for (int trial = 0; trial < 200; ++trial) {
    const IntervalSet s = g.set(g.integer(1, 5));
    const auto again = IntervalSet::validate(s.as_pairs());
    CHECK(again == s);
    const double scale = g.uniform(0.1, 5.0), shift = g.uniform(-3, 3);
    const IntervalSet t = s.affine(scale, shift);
    REQUIRE(t.size() == s.size());
    CHECK(t.total_length() == doctest::Approx(scale * s.total_length()));
    const double x = g.uniform(-2.5, 2.5);
    CHECK(t.contains(scale * x + shift) == s.contains(x));
    CHECK(s.gaps().size() + 1 == s.size());
  }
}
