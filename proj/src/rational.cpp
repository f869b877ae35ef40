#include "vcalc/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <vector>

namespace vc {

void Rational::set_ll(mpz_t z, long long v) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 assumed");
  mpz_set_si(z, static_cast<long>(v));
}

Rational::Rational(long long num, long long den) {
  mpq_init(q_);
  set_ll(mpq_numref(q_), num);
  set_ll(mpq_denref(q_), den < 0 ? -den : den);
  if (den < 0) mpq_neg(q_, q_);
  mpq_canonicalize(q_);
}

std::optional<Rational> Rational::from_string(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::string s = text;
  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }
  std::string int_part, frac_part, exp_part;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) int_part += s[i++];
  if (i < s.size() && s[i] == '/') {
    // plain fraction p/q
    ++i;
    std::string den;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) den += s[i++];
    if (i != s.size() || int_part.empty() || den.empty()) return std::nullopt;
    Rational r;
    if (mpz_set_str(mpq_numref(r.q_), int_part.c_str(), 10) != 0) return std::nullopt;
    if (mpz_set_str(mpq_denref(r.q_), den.c_str(), 10) != 0) return std::nullopt;
    if (mpz_sgn(mpq_denref(r.q_)) == 0) return std::nullopt;
    mpq_canonicalize(r.q_);
    if (negative) mpq_neg(r.q_, r.q_);
    return r;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) frac_part += s[i++];
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) exp_part += s[i++];
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) exp_part += s[i++];
    if (exp_part.empty() || exp_part == "+" || exp_part == "-") return std::nullopt;
  }
  if (i != s.size()) return std::nullopt;
  if (int_part.empty() && frac_part.empty()) return std::nullopt;

  std::string digits = int_part + frac_part;
  Rational r;
  if (mpz_set_str(mpq_numref(r.q_), digits.empty() ? "0" : digits.c_str(), 10) != 0)
    return std::nullopt;
  long e = exp_part.empty() ? 0 : std::strtol(exp_part.c_str(), nullptr, 10);
  e -= static_cast<long>(frac_part.size());
  Rational result = r * pow10(e);
  if (negative) result = -result;
  return result;
}

Rational Rational::pow10(long e) {
  Rational r(1);
  mpz_t p;
  mpz_init(p);
  mpz_ui_pow_ui(p, 10, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0)
    mpz_set(mpq_numref(r.q_), p);
  else
    mpz_set(mpq_denref(r.q_), p);
  mpz_clear(p);
  return r;
}

Rational Rational::factorial(unsigned n) {
  Rational r(1);
  mpz_fac_ui(mpq_numref(r.q_), n);
  return r;
}

Rational Rational::inverse() const {
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  const Rational base = e < 0 ? inverse() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), k);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), k);
  return r;
}

std::optional<Rational> Rational::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (mpz_perfect_square_p(mpq_numref(q_)) == 0) return std::nullopt;
  if (mpz_perfect_square_p(mpq_denref(q_)) == 0) return std::nullopt;
  Rational r;
  mpz_sqrt(mpq_numref(r.q_), mpq_numref(q_));
  mpz_sqrt(mpq_denref(r.q_), mpq_denref(q_));
  return r;
}

static std::string mpz_to_string(const mpz_t z) {
  std::vector<char> buf(mpz_sizeinbase(z, 10) + 2);
  mpz_get_str(buf.data(), 10, z);
  return std::string(buf.data());
}

std::string Rational::to_string() const {
  if (is_integer()) return mpz_to_string(mpq_numref(q_));
  return mpz_to_string(mpq_numref(q_)) + "/" + mpz_to_string(mpq_denref(q_));
}

std::string Rational::num_string() const { return mpz_to_string(mpq_numref(q_)); }
std::string Rational::den_string() const { return mpz_to_string(mpq_denref(q_)); }

}  // namespace vc
