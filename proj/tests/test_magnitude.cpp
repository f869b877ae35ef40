#include <doctest.h>

#include "vcalc/errors.hpp"
#include "vcalc/expr.hpp"
#include "vcalc/magnitude.hpp"

using namespace vc;

namespace {
const Settings kS{};
VirtualNumber vdel() { return VirtualNumber::del(); }
VirtualNumber vinf() { return VirtualNumber::inf(); }
VirtualNumber vr(long long n) { return VirtualNumber::real(n); }
}  // namespace

TEST_CASE("order-of membership") {
  VirtualNumber sin_del = extend_apply(parse_expr("sin(x)"), vdel(), kS);
  CHECK(in_order_of(sin_del, vdel(), kS).is_holds());
  // del / del^2 = inf: not finite
  CHECK(in_order_of(vdel(), vdel() * vdel(), kS).is_fails());
  VirtualNumber a = vr(3) + vdel();
  CHECK(in_order_of(a, a, kS).is_holds());
  CHECK_THROWS_AS(in_order_of(vdel(), vr(0), kS), NotInvertibleError);
}

TEST_CASE("negligibility") {
  CHECK(negligible(vdel() * vdel(), vdel(), kS).is_holds());
  CHECK(negligible(vr(7), vinf(), kS).is_holds());
  CHECK(negligible(vdel(), vdel(), kS).is_fails());
  // negligible implies order-of, never conversely on same-order pairs
  CHECK(in_order_of(vdel() * vdel(), vdel(), kS).is_holds());
  CHECK(negligible(vdel(), vdel() * vr(2), kS).is_fails());
}

TEST_CASE("leading order profile") {
  VirtualNumber p = vdel() * vdel() - pow(vdel(), 5, kS) * vr(3);
  OrderProfile prof = leading_order(p);
  CHECK(*prof.val_even == 2);
  CHECK(*prof.val_odd == 2);
  CHECK(Scalar::equal(prof.leading_coeffs.first, Scalar(1)));

  VirtualNumber q = (vinf() + vdel()) * (vinf() + vdel());
  OrderProfile prof2 = leading_order(q);
  CHECK(*prof2.val_even == -2);

  OrderProfile prof3 = leading_order(alternate_sign(vdel()));
  CHECK(*prof3.val_even == 1);
  CHECK(*prof3.val_odd == 1);
  CHECK(Scalar::equal(prof3.leading_coeffs.first, Scalar(1)));
  CHECK(Scalar::equal(prof3.leading_coeffs.second, Scalar(-1)));
}

TEST_CASE("magnitude comparison") {
  CHECK(compare_magnitude(vdel() * vdel(), vdel(), kS).order == MagnitudeOrder::Smaller);
  CHECK(compare_magnitude(vdel(), vdel() * vdel(), kS).order == MagnitudeOrder::Larger);
  VirtualNumber sin_del = extend_apply(parse_expr("sin(x)"), vdel(), kS);
  CHECK(compare_magnitude(sin_del, vdel(), kS).order == MagnitudeOrder::SameOrder);
  CHECK(compare_magnitude(alternate_sign(vdel()), vdel(), kS).order ==
        MagnitudeOrder::SameOrder);
  // parity-split magnitude: even branch finite, odd branch infinitesimal
  VirtualNumber split = VirtualNumber::series(LaurentPolynomial::constant(Scalar(1)),
                                              LaurentPolynomial::monomial(2, Scalar(1)));
  auto cmp = compare_magnitude(split, vdel(), kS);
  CHECK(cmp.order == MagnitudeOrder::Incomparable);
  CHECK(cmp.verdict.is_holds());
}

TEST_CASE("valuation is additive under multiplication") {
  VirtualNumber a = vdel() * vr(3) + pow(vdel(), 4, kS);
  VirtualNumber b = vinf() * vr(2) + vr(5);
  OrderProfile pa = leading_order(a), pb = leading_order(b), pab = leading_order(a * b);
  CHECK(*pab.val_even == *pa.val_even + *pb.val_even);
}
