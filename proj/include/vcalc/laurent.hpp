#pragma once

#include <map>
#include <optional>
#include <string>

#include "vcalc/scalar.hpp"

namespace vc {

// Finite sum of coefficient * del^k (k in Z; negative k are powers of inf),
// plus a truncation order: exponents > trunc are unknown, absorbed into
// O(del^{trunc+1}). trunc == nullopt means the polynomial is exact — all
// higher coefficients are exactly zero. No zero coefficients are stored.
//
// Read as a sequence: the value at index n is sum of c_k * n^{-k}.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;  // exact zero

  static LaurentPolynomial constant(Scalar c);
  static LaurentPolynomial monomial(int exponent, Scalar c);

  const std::map<int, Scalar>& terms() const { return terms_; }
  const std::optional<int>& trunc() const { return trunc_; }

  bool is_true_zero() const { return terms_.empty() && !trunc_; }
  bool known_zero() const { return terms_.empty(); }

  Scalar coeff(int exponent) const;

  // Least exponent whose coefficient is significant (approximate
  // coefficients within tol are skipped). nullopt when all-known-zero.
  std::optional<int> valuation(double tol = kScalarTol) const;
  Scalar leading_coeff(double tol = kScalarTol) const;  // 0 when known-zero

  // Sign the represented sequence eventually has: sign of the leading
  // significant coefficient; 0 when zero up to truncation.
  int eventual_sign(double tol = kScalarTol) const;

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  LaurentPolynomial scaled(const Scalar& c) const;
  LaurentPolynomial shifted(int dk) const;  // multiply by del^dk
  // Geometric-series inversion about the leading term. When this value is
  // exact and not a monomial the expansion is cut at default_rel_depth
  // relative terms. Throws NotInvertibleError when zero up to truncation.
  LaurentPolynomial inverse(int default_rel_depth) const;
  LaurentPolynomial pow(int k, int default_rel_depth) const;

  LaurentPolynomial truncated(int order) const;
  // Drop approximate coefficients within tol of zero (exact terms stay).
  LaurentPolynomial pruned(double tol = kScalarTol) const;

  double eval_at_index(long long n) const;  // del = 1/n

  // Exact structural equality of the stored terms (trunc ignored).
  static bool same_terms(const LaurentPolynomial& a, const LaurentPolynomial& b);
  // Difference is zero up to truncation, approximate coefficients within tol.
  static bool known_equal(const LaurentPolynomial& a, const LaurentPolynomial& b,
                          double tol = kScalarTol);

  std::string debug_string() const;

 private:
  void put(int exponent, Scalar c);  // drops zero, respects trunc
  std::map<int, Scalar> terms_;
  std::optional<int> trunc_;
};

}  // namespace vc
