#include <doctest.h>

#include <cmath>

#include "vcalc/classify.hpp"
#include "vcalc/errors.hpp"
#include "vcalc/expr.hpp"

using namespace vc;

namespace {
const Settings kS{};
VirtualNumber vdel() { return VirtualNumber::del(); }
VirtualNumber vinf() { return VirtualNumber::inf(); }
VirtualNumber vr(long long n) { return VirtualNumber::real(n); }
}  // namespace

TEST_CASE("infinitesimal predicate on the series tier") {
  CHECK(is_infinitesimal(vdel(), kS).is_holds());
  CHECK(is_infinitesimal(alternate_sign(vdel()), kS).is_holds());
  CHECK(is_infinitesimal(vr(3), kS).is_fails());
  CHECK(is_infinitesimal(vr(0), kS).is_holds());  // zero is the unique real infinitesimal
  CHECK(is_infinitesimal(vinf(), kS).is_fails());
}

TEST_CASE("sin(del) is infinitesimal") {
  VirtualNumber s = extend_apply(parse_expr("sin(x)"), vdel(), kS);
  CHECK(is_infinitesimal(s, kS).is_holds());
}

TEST_CASE("finite and infinite") {
  CHECK(is_finite(alternate_sign(vr(1)), kS).is_holds());
  CHECK(is_finite(vdel(), kS).is_holds());
  CHECK(is_infinite(vinf(), kS).is_holds());
  CHECK(is_infinite(alternate_sign(vinf()), kS).is_holds());
  CHECK(is_infinite(vr(7), kS).is_fails());
}

TEST_CASE("comparison against all reals") {
  CHECK(cmp_reals(vinf(), kS).cmp == RealComparison::AboveR);
  CHECK(cmp_reals(-vinf(), kS).cmp == RealComparison::BelowR);
  CHECK(cmp_reals(alternate_sign(vinf()), kS).cmp == RealComparison::Neither);
  CHECK(cmp_reals(vr(7), kS).cmp == RealComparison::Neither);
}

TEST_CASE("finitude classification tags") {
  CHECK(*classify_finitude(vdel(), kS).tag == FinitudeTag::Infinitesimal);
  CHECK(*classify_finitude(vr(5), kS).tag == FinitudeTag::FiniteNonInfinitesimal);
  CHECK(*classify_finitude(vinf(), kS).tag == FinitudeTag::InfiniteAboveR);
  CHECK(*classify_finitude(-vinf(), kS).tag == FinitudeTag::InfiniteBelowR);
  CHECK(*classify_finitude(alternate_sign(vinf()), kS).tag == FinitudeTag::InfiniteOscillating);
}

TEST_CASE("proximity") {
  CHECK(near(vr(10) + vdel(), vr(10), kS).is_holds());
  CHECK(near(vinf(), vinf() * vinf(), kS).is_fails());
  CHECK(near(vdel(), vr(0), kS).is_holds());
  CHECK(near(vr(2), vr(3), kS).is_fails());
}

TEST_CASE("neighbourliness") {
  CHECK(neighbour(vdel(), vr(0), kS).is_holds());
  CHECK(neighbour(vr(4), vr(4), kS).is_fails());  // alpha neq-bar alpha is false
  // del - del^2 has valuation 1 and nonzero leading term
  CHECK(neighbour(vdel(), vdel() * vdel(), kS).is_holds());
}

TEST_CASE("standard part") {
  auto sp = standard_part(vr(10) + vdel(), kS);
  REQUIRE(sp.value);
  CHECK(Scalar::equal(*sp.value, Scalar(10)));
  CHECK(sp.verdict.is_holds());

  CHECK(!standard_part(alternate_sign(vr(1)), kS).value);
  CHECK(standard_part(alternate_sign(vr(1)), kS).verdict.is_fails());
  CHECK(!standard_part(vinf(), kS).value);

  // infinitesimal part only: standard part 0
  auto sp0 = standard_part(vdel() * vdel(), kS);
  REQUIRE(sp0.value);
  CHECK(Scalar::equal(*sp0.value, Scalar(0)));
}

TEST_CASE("standard part on the sequence tier") {
  VirtualNumber conv = VirtualNumber::sequence(
      {[](long long n) { return 2.0 + 1.0 / static_cast<double>(n * n * n); }, "2+1/n^3"});
  auto sp = standard_part(conv, kS);
  REQUIRE(sp.value);
  CHECK(sp.value->to_double() == doctest::Approx(2.0).epsilon(1e-6));

  // slower decay needs a deeper schedule before the Cauchy proxy accepts
  VirtualNumber slow = VirtualNumber::sequence(
      {[](long long n) { return 2.0 + 1.0 / static_cast<double>(n * n); }, "2+1/n^2"});
  CHECK(!standard_part(slow, kS).value);
  Settings deep = kS;
  deep.depth = 20;
  auto sp2 = standard_part(slow, deep);
  REQUIRE(sp2.value);
  CHECK(sp2.value->to_double() == doctest::Approx(2.0).epsilon(1e-6));

  VirtualNumber osc = VirtualNumber::sequence(
      {[](long long n) { return n % 2 ? -1.0 : 1.0; }, "(+-)1"});
  CHECK(!standard_part(osc, kS).value);
}

TEST_CASE("between and reflexive confront") {
  VirtualNumber pm1 = alternate_sign(vr(1));
  VirtualNumber mp1 = alternate_sign_neg(vr(1));
  CHECK(between(vr(0), pm1, mp1, kS).is_holds());
  CHECK(confront(vr(2), vr(2), vr(2), kS).is_holds());
}

TEST_CASE("confront on a squeeze instance") {
  VirtualNumber alpha = vr(1);
  VirtualNumber gamma = vr(1) + vdel();
  VirtualNumber beta = vr(1) + (vdel() * VirtualNumber::from_scalar(Scalar(Rational(1, 2))));
  CHECK(confront(alpha, beta, gamma, kS).is_holds());
  // premise fails -> vacuous Holds
  CHECK(confront(vr(0), vr(5), vr(0) + vdel(), kS).is_holds());
}

TEST_CASE("interior points of interval unions") {
  CHECK(is_interior_point(Scalar(Rational(1, 2)), IntervalSet::closed(0, 1)).is_holds());
  CHECK(is_interior_point(Scalar(0), IntervalSet::closed(0, 1)).is_fails());
  CHECK(is_interior_point(Scalar(0), IntervalSet::parse("(-1,1)u(2,3)")).is_holds());
  CHECK(is_interior_point(Scalar(1), IntervalSet::parse("[0,1]u(1,2)")).is_holds());
  CHECK(is_interior_point(Scalar(1), IntervalSet::parse("[0,1)u(1,2)")).is_fails());
  CHECK(is_interior_point(Scalar(5), IntervalSet::reals()).is_holds());
  CHECK_THROWS_AS(IntervalSet::parse("{1,2}"), UnsupportedSetError);
}

TEST_CASE("sequence-tier heuristics on bounded oscillation") {
  VirtualNumber sin_seq = VirtualNumber::sequence(
      {[](long long n) { return std::sin(static_cast<double>(n)); }, "sin(inf)"});
  CHECK(is_finite(sin_seq, kS).is_holds());
  VirtualNumber growing = VirtualNumber::sequence(
      {[](long long n) { return std::exp(std::min(500.0, static_cast<double>(n) * 0.1)); },
       "exp(inf/10)"});
  CHECK(is_finite(growing, kS).is_fails());
}
