#pragma once

#include <cmath>
#include <string>
#include <variant>

#include "vcalc/rational.hpp"
#include "vcalc/settings.hpp"

namespace vc {

// A real coefficient: exact rational, or approximate 64-bit float. Exact
// scalars survive ring operations exactly; any operation with an approximate
// operand yields an approximate result. Approximate scalars carry no error
// bound; comparisons involving them use kScalarTol.
class Scalar {
 public:
  Scalar() : v_(Rational()) {}
  Scalar(long long n) : v_(Rational(n)) {}
  Scalar(int n) : v_(Rational(n)) {}
  Scalar(Rational r) : v_(std::move(r)) {}
  static Scalar approx(double d) { return Scalar(d, ApproxTag{}); }

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  bool is_approx() const { return !is_exact(); }
  const Rational& rational() const { return std::get<Rational>(v_); }

  double to_double() const {
    return is_exact() ? rational().to_double() : std::get<double>(v_);
  }

  // Exact zero test: rational == 0, or float == 0.0 bit-for-bit.
  bool is_zero() const {
    return is_exact() ? rational().is_zero() : std::get<double>(v_) == 0.0;
  }
  // Zero up to the scalar policy: approximate values within tol count as zero.
  bool is_negligible(double tol = kScalarTol) const {
    return is_exact() ? rational().is_zero() : std::fabs(std::get<double>(v_)) <= tol;
  }
  int sign() const {
    if (is_exact()) return rational().sign();
    double d = std::get<double>(v_);
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return Scalar(a.rational() + b.rational());
    return approx(a.to_double() + b.to_double());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return Scalar(a.rational() - b.rational());
    return approx(a.to_double() - b.to_double());
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return Scalar(a.rational() * b.rational());
    return approx(a.to_double() * b.to_double());
  }
  friend Scalar operator-(const Scalar& a) {
    if (a.is_exact()) return Scalar(-a.rational());
    return approx(-a.to_double());
  }
  // Preconditions: divisor nonzero (callers guard; sequence tier guards per index).
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return Scalar(a.rational() / b.rational());
    return approx(a.to_double() / b.to_double());
  }

  Scalar abs() const {
    if (is_exact()) return Scalar(rational().abs());
    return approx(std::fabs(to_double()));
  }
  Scalar inverse() const {
    if (is_exact()) return Scalar(rational().inverse());
    return approx(1.0 / to_double());
  }
  Scalar pow(long e) const {
    if (is_exact()) return Scalar(rational().pow(e));
    return approx(std::pow(to_double(), static_cast<double>(e)));
  }

  // -1 / 0 / +1; exact when both operands are exact, tolerance-based otherwise.
  static int compare(const Scalar& a, const Scalar& b, double tol = kScalarTol) {
    if (a.is_exact() && b.is_exact()) {
      auto c = a.rational() <=> b.rational();
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    double da = a.to_double(), db = b.to_double();
    if (std::fabs(da - db) <= tol) return 0;
    return da < db ? -1 : 1;
  }
  static bool equal(const Scalar& a, const Scalar& b, double tol = kScalarTol) {
    return compare(a, b, tol) == 0;
  }

  std::string to_string() const;

 private:
  struct ApproxTag {};
  Scalar(double d, ApproxTag) : v_(d) {}
  std::variant<Rational, double> v_;
};

}  // namespace vc
