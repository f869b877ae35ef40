#include <doctest.h>

#include <cmath>

#include "vcalc/errors.hpp"
#include "vcalc/integrate.hpp"

using namespace vc;

namespace {
const Settings kS{};
}

TEST_CASE("partition construction") {
  ExtendedPartition p = make_partition(0, 1, 4, {TagRule::Midpoint, 0});
  REQUIRE(p.points.size() == 5);
  CHECK(p.points[1] == doctest::Approx(0.25));
  CHECK(p.tags[0] == doctest::Approx(0.125));
  CHECK(p.tags[3] == doctest::Approx(0.875));
  CHECK(p.norm == doctest::Approx(0.25));

  // orientation: same carrier partition
  ExtendedPartition q = make_partition(1, 0, 4, {TagRule::Midpoint, 0});
  CHECK(q.points.front() == doctest::Approx(0.0));
  CHECK(q.points.back() == doctest::Approx(1.0));

  // single random cell: tag strictly interior
  ExtendedPartition r = make_partition(0, 1, 1, {TagRule::SeededRandom, 7});
  REQUIRE(r.tags.size() == 1);
  CHECK(r.tags[0] > 0.0);
  CHECK(r.tags[0] < 1.0);

  CHECK_THROWS_AS(make_partition(2, 2, 4, {TagRule::Midpoint, 0}), DegenerateIntervalError);
}

TEST_CASE("tags stay strictly interior under every scheme") {
  for (auto kind : {TagRule::Left, TagRule::Right, TagRule::Midpoint, TagRule::SeededRandom}) {
    ExtendedPartition p = make_partition(-2, 3, 13, {kind, 99});
    for (std::size_t i = 0; i < p.tags.size(); ++i) {
      CHECK(p.tags[i] > p.points[i]);
      CHECK(p.tags[i] < p.points[i + 1]);
    }
  }
}

TEST_CASE("riemann sums") {
  // f = x over [0,1] with midpoint tags: exactly 1/2 by symmetry
  CHECK(riemann_sum(parse_expr("x"), make_partition(0, 1, 4, {TagRule::Midpoint, 0})) ==
        doctest::Approx(0.5));
  // constant telescopes to k(b-a)
  CHECK(riemann_sum(parse_expr("3"), make_partition(2, 5, 7, {TagRule::SeededRandom, 1})) ==
        doctest::Approx(9.0));
  // direct 4-term oracle for x^2 with left-inward tags
  ExtendedPartition p = make_partition(0, 1, 4, {TagRule::Left, 0});
  double expected = 0;
  for (double z : {0.25 / 1000, 0.25 + 0.25 / 1000, 0.5 + 0.25 / 1000, 0.75 + 0.25 / 1000})
    expected += z * z * 0.25;
  CHECK(riemann_sum(parse_expr("x^2"), p) == doctest::Approx(expected));

  // midpoint tag of (-0.25, 0.75) with two cells lands exactly on 0
  CHECK_THROWS_AS(
      riemann_sum(parse_expr("1/x"), make_partition(-0.25, 0.75, 2, {TagRule::Midpoint, 0})),
      DomainError);
}

TEST_CASE("integration of polynomials") {
  IntegralReport r = integrate(parse_expr("x"), 0, 1, kS);
  CHECK(*r.value == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.verdict.is_holds());

  IntegralReport r2 = integrate(parse_expr("x^2"), 0, 1, kS);
  CHECK(*r2.value == doctest::Approx(1.0 / 3).epsilon(1e-6));
  CHECK(r2.verdict.is_holds());

  // orientation: reversed endpoints negate the value
  IntegralReport r3 = integrate(parse_expr("x"), 1, 0, kS);
  CHECK(*r3.value == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(r3.verdict.is_holds());

  // a = b
  IntegralReport r4 = integrate(parse_expr("exp(x)"), 3, 3, kS);
  CHECK(*r4.value == 0.0);
  CHECK(r4.verdict.is_holds());
}

TEST_CASE("integration against antiderivative oracles") {
  struct Case {
    const char* f;
    double a, b, expected;
  };
  const Case cases[] = {
      {"exp(x)", 0, 1, std::exp(1.0) - 1.0},
      {"cos(x)", 0, 1, std::sin(1.0)},
      {"1/x", 1, 2, std::log(2.0)},
      {"x^3 - x", -1, 2, (16.0 - 1.0) / 4.0 - (4.0 - 1.0) / 2.0},
  };
  for (const auto& c : cases) {
    IntegralReport r = integrate(parse_expr(c.f), c.a, c.b, kS);
    CHECK(*r.value == doctest::Approx(c.expected).epsilon(1e-8));
    CHECK(r.verdict.is_holds());
  }
}

TEST_CASE("linearity and interval additivity") {
  ExprPtr f = parse_expr("sin(x)");
  ExprPtr g = parse_expr("x^2");
  ExprPtr combo = parse_expr("2*sin(x) + 3*x^2");
  double lhs = *integrate(combo, 0, 2, kS).value;
  double rhs = 2 * *integrate(f, 0, 2, kS).value + 3 * *integrate(g, 0, 2, kS).value;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));

  double whole = *integrate(f, 0, 2, kS).value;
  double split = *integrate(f, 0, 0.7, kS).value + *integrate(f, 0.7, 2, kS).value;
  CHECK(whole == doctest::Approx(split).epsilon(1e-6));
}

TEST_CASE("scheme tails are reported") {
  IntegralReport r = integrate(parse_expr("x^2"), 0, 1, kS);
  REQUIRE(r.per_scheme.count("left"));
  REQUIRE(r.per_scheme.count("midpoint"));
  CHECK(r.per_scheme.at("midpoint").size() == 4);
  CHECK(r.depth == 8192);
}

TEST_CASE("ftc negligibility for exp") {
  FtcReport r = ftc_check(parse_expr("exp(x)"), 0, 0.5, kS);
  CHECK(r.verdict.is_holds());
  CHECK(r.deepest_ratio <= 1e-3);
}

TEST_CASE("ftc for a constant is exact") {
  FtcReport r = ftc_check(parse_expr("4"), 0, 1, kS);
  CHECK(r.verdict.is_holds());
  CHECK(r.deepest_ratio <= 1e-9);
}

TEST_CASE("geometry: straight segment arc length is sqrt(2)") {
  IntegralReport r = geom_measure(GeomKind::ArcLength, parse_expr("x"), 0, 1, kS);
  CHECK(*r.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(r.verdict.is_holds());
}

TEST_CASE("geometry: area under a constant") {
  IntegralReport r = geom_measure(GeomKind::Area, parse_expr("5"), 1, 3, kS);
  CHECK(*r.value == doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("geometry: volume of a cylinder") {
  IntegralReport r = geom_measure(GeomKind::VolumeRevolution, parse_expr("2"), 0, 3, kS);
  CHECK(*r.value == doctest::Approx(3.14159265358979323846 * 4 * 3).epsilon(1e-9));
}

TEST_CASE("geometry: sphere surface with endpoint insets") {
  const double h = 1e-6;
  IntegralReport r =
      geom_measure(GeomKind::SurfaceRevolution, parse_expr("sqrt(1 - x^2)"), -1 + h, 1 - h, kS);
  CHECK(*r.value == doctest::Approx(4 * 3.14159265358979323846 * (1 - h)).epsilon(1e-4));
  CHECK(r.verdict.is_holds());
}

TEST_CASE("geometry positivity guard") {
  CHECK_THROWS_AS(geom_measure(GeomKind::SurfaceRevolution, parse_expr("x"), -1, 1, kS),
                  NotPositiveError);
  CHECK_THROWS_AS(geom_measure(GeomKind::Area, parse_expr("x - 2"), 0, 1, kS),
                  NotPositiveError);
  // arc length needs no positivity
  CHECK(*geom_measure(GeomKind::ArcLength, parse_expr("x"), 0, 1, kS).value ==
        doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("element checks: right formulas hold, wrong formulas fail") {
  // length element of f = x: d(ell) = sqrt(2) dx; dx alone is not negligible
  ElementCheck wrong_len =
      element_negligibility(GeomKind::ArcLength, parse_expr("x"), 0.5, ElementCandidate::DxOnly, kS);
  CHECK(wrong_len.verdict.is_fails());
  CHECK(wrong_len.deepest_ratio > 0.1);  // (sqrt2-1)/sqrt2 ~ 0.293

  ElementCheck right_len =
      element_negligibility(GeomKind::ArcLength, parse_expr("x"), 0.5, ElementCandidate::Exact, kS);
  CHECK(right_len.verdict.is_holds());

  // surface element of the sloped line f = x + 1 around x = 0.5
  ElementCheck wrong_surf = element_negligibility(GeomKind::SurfaceRevolution,
                                                  parse_expr("x + 1"), 0.5,
                                                  ElementCandidate::TwoPiF, kS);
  CHECK(wrong_surf.verdict.is_fails());

  ElementCheck right_surf = element_negligibility(GeomKind::SurfaceRevolution,
                                                  parse_expr("x + 1"), 0.5,
                                                  ElementCandidate::Exact, kS);
  CHECK(right_surf.verdict.is_holds());
}
