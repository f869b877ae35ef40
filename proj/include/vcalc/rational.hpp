#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace vc {

// Arbitrary-precision rational with value semantics over GMP's mpq_t.
// Always canonical: gcd(num, den) = 1, den > 0.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long long n) {
    mpq_init(q_);
    set_ll(mpq_numref(q_), n);
  }
  Rational(long long num, long long den);
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  // "123", "-4/5", "2.75", "1e-3", "2.5e2" — exact in every case.
  static std::optional<Rational> from_string(const std::string& text);

  static Rational pow10(long e);
  static Rational factorial(unsigned n);

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  // Division by zero is a precondition violation; callers guard.
  friend Rational operator/(const Rational& a, const Rational& b) {
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.q_, a.q_);
    return r;
  }
  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }

  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }
  Rational inverse() const;  // precondition: nonzero
  Rational pow(long e) const;

  // Exact square root when one exists (num and den both perfect squares).
  std::optional<Rational> exact_sqrt() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  double to_double() const { return mpq_get_d(q_); }
  std::string to_string() const;      // "p" or "p/q"
  std::string num_string() const;
  std::string den_string() const;

 private:
  static void set_ll(mpz_t z, long long v);
  mpq_t q_;
};

}  // namespace vc
