#include "vcalc/laurent.hpp"

#include <cmath>

#include "vcalc/errors.hpp"

namespace vc {

static std::optional<int> min_trunc(const std::optional<int>& a, const std::optional<int>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

void LaurentPolynomial::put(int exponent, Scalar c) {
  if (trunc_ && exponent > *trunc_) return;
  if (c.is_zero()) {
    terms_.erase(exponent);
    return;
  }
  terms_.insert_or_assign(exponent, std::move(c));
}

LaurentPolynomial LaurentPolynomial::constant(Scalar c) { return monomial(0, std::move(c)); }

LaurentPolynomial LaurentPolynomial::monomial(int exponent, Scalar c) {
  LaurentPolynomial p;
  p.put(exponent, std::move(c));
  return p;
}

Scalar LaurentPolynomial::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<int> LaurentPolynomial::valuation(double tol) const {
  for (const auto& [k, c] : terms_)
    if (!c.is_negligible(tol)) return k;
  return std::nullopt;
}

Scalar LaurentPolynomial::leading_coeff(double tol) const {
  auto v = valuation(tol);
  return v ? coeff(*v) : Scalar(0);
}

int LaurentPolynomial::eventual_sign(double tol) const {
  auto v = valuation(tol);
  return v ? coeff(*v).sign() : 0;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  r.trunc_ = min_trunc(a.trunc_, b.trunc_);
  for (const auto& [k, c] : a.terms_) r.put(k, c);
  for (const auto& [k, c] : b.terms_) r.put(k, r.coeff(k) + c);
  return r;
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
  LaurentPolynomial r;
  r.trunc_ = a.trunc_;
  for (const auto& [k, c] : a.terms_) r.put(k, -c);
  return r;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a + (-b);
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_true_zero() || b.is_true_zero()) return LaurentPolynomial();
  LaurentPolynomial r;
  // Known part of the product loses precision where one factor's unknown
  // tail meets the other's leading term.
  const int va = a.terms_.empty() ? *a.trunc_ + 1 : a.terms_.begin()->first;
  const int vb = b.terms_.empty() ? *b.trunc_ + 1 : b.terms_.begin()->first;
  std::optional<int> t;
  if (a.trunc_) t = min_trunc(t, vb + *a.trunc_);
  if (b.trunc_) t = min_trunc(t, va + *b.trunc_);
  r.trunc_ = t;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.put(ka + kb, r.coeff(ka + kb) + ca * cb);
  return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return LaurentPolynomial();  // 0 * O(del^k) = 0 exactly
  LaurentPolynomial r;
  r.trunc_ = trunc_;
  for (const auto& [k, v] : terms_) r.put(k, v * c);
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int dk) const {
  LaurentPolynomial r;
  if (trunc_) r.trunc_ = *trunc_ + dk;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k + dk, v);
  return r;
}

LaurentPolynomial LaurentPolynomial::truncated(int order) const {
  LaurentPolynomial r;
  r.trunc_ = min_trunc(trunc_, order);
  for (const auto& [k, v] : terms_)
    if (k <= order) r.terms_.emplace(k, v);
  return r;
}

LaurentPolynomial LaurentPolynomial::pruned(double tol) const {
  LaurentPolynomial r;
  r.trunc_ = trunc_;
  for (const auto& [k, v] : terms_)
    if (!v.is_negligible(tol)) r.terms_.emplace(k, v);
  return r;
}

LaurentPolynomial LaurentPolynomial::inverse(int default_rel_depth) const {
  auto v = valuation();
  if (!v)
    throw NotInvertibleError(is_true_zero() ? "division by zero"
                                            : "series is zero up to truncation");
  const Scalar lead = coeff(*v);

  // Exact monomial inverts exactly.
  if (!trunc_ && terms_.size() == 1)
    return monomial(-*v, lead.inverse());

  const int rel = trunc_ ? *trunc_ - *v : default_rel_depth;
  // N = this/(lead*del^v) - 1 has valuation >= 1; 1/(1+N) = sum (-N)^j.
  LaurentPolynomial n = shifted(-*v).scaled(lead.inverse()) - constant(Scalar(1));
  n = n.truncated(rel);
  LaurentPolynomial s = constant(Scalar(1));
  for (int j = 0; j < rel; ++j) s = (constant(Scalar(1)) - n * s).truncated(rel);
  LaurentPolynomial r = s.shifted(-*v).scaled(lead.inverse());
  return r.truncated(rel - *v);
}

LaurentPolynomial LaurentPolynomial::pow(int k, int default_rel_depth) const {
  if (k < 0) return inverse(default_rel_depth).pow(-k, default_rel_depth);
  LaurentPolynomial acc = constant(Scalar(1));
  LaurentPolynomial base = *this;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

double LaurentPolynomial::eval_at_index(long long n) const {
  double x = 0.0;
  const double dn = static_cast<double>(n);
  for (const auto& [k, c] : terms_) x += c.to_double() * std::pow(dn, -static_cast<double>(k));
  return x;
}

bool LaurentPolynomial::same_terms(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [k, c] : a.terms_) {
    auto it = b.terms_.find(k);
    if (it == b.terms_.end()) return false;
    if (c.is_exact() != it->second.is_exact()) return false;
    if (c.is_exact() && !(c.rational() == it->second.rational())) return false;
    if (!c.is_exact() && c.to_double() != it->second.to_double()) return false;
  }
  return true;
}

bool LaurentPolynomial::known_equal(const LaurentPolynomial& a, const LaurentPolynomial& b,
                                    double tol) {
  LaurentPolynomial d = a - b;
  for (const auto& [k, c] : d.terms_) {
    (void)k;
    if (!c.is_negligible(tol)) return false;
  }
  return true;
}

std::string LaurentPolynomial::debug_string() const {
  std::string s = "{";
  for (const auto& [k, c] : terms_) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(k) + ": " + c.to_string();
  }
  s += "}";
  if (trunc_) s += " + O(del^" + std::to_string(*trunc_ + 1) + ")";
  return s;
}

}  // namespace vc
