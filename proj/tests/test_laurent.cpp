#include <doctest.h>

#include "vcalc/errors.hpp"
#include "vcalc/laurent.hpp"

using vc::LaurentPolynomial;
using vc::Rational;
using vc::Scalar;

namespace {
LaurentPolynomial del_pow(int k) { return LaurentPolynomial::monomial(k, Scalar(1)); }
}  // namespace

TEST_CASE("ring operations on exact polynomials stay exact") {
  LaurentPolynomial x = del_pow(-1) + del_pow(1);  // inf + del
  LaurentPolynomial sq = x * x;
  CHECK(!sq.trunc());
  CHECK(Scalar::equal(sq.coeff(-2), Scalar(1)));
  CHECK(Scalar::equal(sq.coeff(0), Scalar(2)));
  CHECK(Scalar::equal(sq.coeff(2), Scalar(1)));
  CHECK(sq.terms().size() == 3);

  LaurentPolynomial expected = del_pow(-2) + LaurentPolynomial::constant(Scalar(2)) + del_pow(2);
  CHECK(LaurentPolynomial::same_terms(sq, expected));
}

TEST_CASE("del * inf = 1 exactly") {
  LaurentPolynomial p = del_pow(1) * del_pow(-1);
  CHECK(LaurentPolynomial::same_terms(p, LaurentPolynomial::constant(Scalar(1))));
  CHECK(!p.trunc());
}

TEST_CASE("valuation and eventual sign") {
  LaurentPolynomial p = del_pow(2).scaled(Scalar(Rational(1))) - del_pow(5).scaled(Scalar(3));
  CHECK(*p.valuation() == 2);
  CHECK(p.eventual_sign() == 1);
  CHECK((-p).eventual_sign() == -1);
  CHECK(LaurentPolynomial().eventual_sign() == 0);
  CHECK(!LaurentPolynomial().valuation());
}

TEST_CASE("exact monomial inversion is exact") {
  LaurentPolynomial inv_del = del_pow(1).inverse(16);
  CHECK(LaurentPolynomial::same_terms(inv_del, del_pow(-1)));
  CHECK(!inv_del.trunc());
}

TEST_CASE("series inversion: 1/(1 - 5 del^3)") {
  LaurentPolynomial d = LaurentPolynomial::constant(Scalar(1)) - del_pow(3).scaled(Scalar(5));
  LaurentPolynomial inv = d.inverse(16);
  // geometric series: 1 + 5 del^3 + 25 del^6 + ...
  CHECK(Scalar::equal(inv.coeff(0), Scalar(1)));
  CHECK(Scalar::equal(inv.coeff(3), Scalar(5)));
  CHECK(Scalar::equal(inv.coeff(6), Scalar(25)));
  CHECK(Scalar::equal(inv.coeff(9), Scalar(125)));
  CHECK(inv.trunc());
  CHECK(*inv.trunc() == 16);
  // multiplying back gives 1 up to the truncation
  LaurentPolynomial prod = d * inv;
  CHECK(LaurentPolynomial::known_equal(prod, LaurentPolynomial::constant(Scalar(1))));
}

TEST_CASE("inversion of zero is rejected") {
  CHECK_THROWS_AS(LaurentPolynomial().inverse(16), vc::NotInvertibleError);
  LaurentPolynomial zero_trunc = LaurentPolynomial().truncated(8);
  CHECK_THROWS_AS(zero_trunc.inverse(16), vc::NotInvertibleError);
}

TEST_CASE("truncation propagates through multiplication") {
  // A = del + O(del^11) times B = inf: product known only to del^10 * ... :
  // unknown tail of A times the leading inf shifts down by 1.
  LaurentPolynomial a = del_pow(1).truncated(10);
  LaurentPolynomial b = del_pow(-1);
  LaurentPolynomial p = a * b;
  REQUIRE(p.trunc());
  CHECK(*p.trunc() == 9);
  CHECK(Scalar::equal(p.coeff(0), Scalar(1)));

  // exact * exact stays exact
  CHECK(!(del_pow(2) * del_pow(-2)).trunc());
}

TEST_CASE("addition takes the weaker truncation") {
  LaurentPolynomial a = del_pow(1).truncated(5);
  LaurentPolynomial b = del_pow(2).truncated(9);
  LaurentPolynomial c = a + b;
  REQUIRE(c.trunc());
  CHECK(*c.trunc() == 5);
}

TEST_CASE("sequence evaluation of a branch") {
  LaurentPolynomial p = del_pow(-2);  // inf^2
  CHECK(p.eval_at_index(3) == doctest::Approx(9.0));
  LaurentPolynomial q = del_pow(1);
  CHECK(q.eval_at_index(4) == doctest::Approx(0.25));
}

TEST_CASE("integer powers") {
  LaurentPolynomial p = LaurentPolynomial::constant(Scalar(5)) + del_pow(1);
  LaurentPolynomial sq = p.pow(2, 16);
  CHECK(Scalar::equal(sq.coeff(0), Scalar(25)));
  CHECK(Scalar::equal(sq.coeff(1), Scalar(10)));
  CHECK(Scalar::equal(sq.coeff(2), Scalar(1)));
  LaurentPolynomial inv2 = p.pow(-1, 16);
  CHECK(Scalar::equal(inv2.coeff(0), Scalar(Rational(1, 5))));
  CHECK(Scalar::equal(inv2.coeff(1), Scalar(Rational(-1, 25))));
}
