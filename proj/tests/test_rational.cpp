#include <doctest.h>

#include "vcalc/rational.hpp"
#include "vcalc/scalar.hpp"

using vc::Rational;
using vc::Scalar;

TEST_CASE("rational normalization and arithmetic") {
  Rational a(10, 4);
  CHECK(a == Rational(5, 2));
  CHECK(a.to_string() == "5/2");
  CHECK((a + Rational(1, 2)) == Rational(3));
  CHECK((a * Rational(2, 5)) == Rational(1));
  CHECK((a - a).is_zero());
  CHECK((-a).sign() == -1);
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
}

TEST_CASE("rational division and powers") {
  Rational a(7, 3);
  CHECK(a.inverse() == Rational(3, 7));
  CHECK((a / a) == Rational(1));
  CHECK(a.pow(2) == Rational(49, 9));
  CHECK(a.pow(-2) == Rational(9, 49));
  CHECK(a.pow(0) == Rational(1));
  CHECK(Rational(2).pow(70) == Rational(2).pow(35) * Rational(2).pow(35));
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5) < Rational(-4));
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("rational parsing") {
  CHECK(*Rational::from_string("0.25") == Rational(1, 4));
  CHECK(*Rational::from_string("-4/5") == Rational(-4, 5));
  CHECK(*Rational::from_string("1e-3") == Rational(1, 1000));
  CHECK(*Rational::from_string("2.5e2") == Rational(250));
  CHECK(*Rational::from_string("123") == Rational(123));
  CHECK(!Rational::from_string("abc"));
  CHECK(!Rational::from_string(""));
  CHECK(!Rational::from_string("1/0"));
}

TEST_CASE("factorials stay exact past 64-bit range") {
  Rational f25 = Rational::factorial(25);
  CHECK(f25 == Rational::factorial(24) * Rational(25));
  CHECK(f25.to_string() == "15511210043330985984000000");
}

TEST_CASE("exact square roots") {
  CHECK(*Rational(9, 4).exact_sqrt() == Rational(3, 2));
  CHECK(*Rational(1).exact_sqrt() == Rational(1));
  CHECK(!Rational(2).exact_sqrt());
  CHECK(!Rational(-4).exact_sqrt());
}

TEST_CASE("scalar exactness propagation") {
  Scalar a(Rational(1, 3));
  Scalar b(Rational(2, 3));
  CHECK((a + b).is_exact());
  CHECK((a + b).is_zero() == false);
  CHECK(Scalar::equal(a + b, Scalar(1)));

  Scalar pi = Scalar::approx(3.141592653589793);
  CHECK((a * pi).is_approx());
  CHECK((a + pi).is_approx());
  CHECK(Scalar::equal(pi - pi, Scalar(0)));
}

TEST_CASE("scalar comparisons use tolerance only when approximate") {
  Scalar tiny(Rational(1, 1000000000000000LL));  // 1e-15 exact
  CHECK(Scalar::compare(tiny, Scalar(0)) == 1);  // exact: however small, still > 0
  Scalar tiny_approx = Scalar::approx(1e-15);
  CHECK(Scalar::compare(tiny_approx, Scalar(0)) == 0);  // approximate: within 1e-12
  CHECK(Scalar::compare(Scalar::approx(1e-9), Scalar(0)) == 1);
}
