#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcalc/classify.hpp"
#include "vcalc/expr.hpp"

namespace vc {

// Derivatives via infinitesimal quotients, derivability/differentiability
// testers, Taylor expansion with remainder-order verification, and
// pointwise/uniform continuity checkers.
//
// Derivability quantifies over ALL neighbours of x, which is undecidable for
// black-box functions; these testers quantify over a fixed probe family plus
// sequence-tier probes and cross-check against the symbolic derivative.

// Probe increments: invertible infinitesimals (every member is a neighbour
// of zero).
struct InfinitesimalFamily {
  std::vector<std::pair<std::string, VirtualNumber>> probes;
  static InfinitesimalFamily defaults();  // del, del^2, -del, (+-)del, 3*del/2
};

struct DerivativeReport {
  std::optional<Scalar> value;
  std::optional<double> oracle;  // eval of the symbolic derivative
  std::vector<std::pair<std::string, std::optional<Scalar>>> per_probe;
  Verdict verdict;
  std::string note;
};

// Quotients (f(x+dx) - f(x))/dx over the probe family; the value is the
// common standard part, cross-checked against diff_expr. Functions with a
// removable gap at x take the extension value through f_at_x.
// Throws NotInteriorError when x is not interior to the (given or natural)
// domain of f.
DerivativeReport derivative_at(const ExprPtr& f, const Scalar& x,
                               const InfinitesimalFamily& family, const Settings& s = {},
                               std::optional<Scalar> f_at_x = {},
                               const std::optional<IntervalSet>& domain = {});

DerivativeReport derivative_at(const ExprPtr& f, const Scalar& x, const Settings& s = {});

// Differentiability: (a) two-point neighbour pairs around x must reproduce
// the derivative, and (b) the symbolic derivative must be continuous at x.
// Verdict conjunction; (b) unavailable caps Holds at Unknown.
Verdict check_differentiable_at(const ExprPtr& f, const Scalar& x, const Settings& s = {},
                                std::optional<Scalar> f_at_x = {});

struct TaylorResult {
  std::vector<Scalar> coeffs;  // c_0 .. c_n, c_k = f^(k)(x)/k!
  Verdict remainder;           // Holds iff f(x+del) - sum c_k del^k has valuation >= n+1
};

TaylorResult taylor_expand(const ExprPtr& f, const Scalar& x, int n, const Settings& s = {});

// f(x + eps) ~= f(x) for every probe eps (and the oscillating probe (+-)del).
// Probes that leave the domain of f are skipped: only arguments in the
// domain extension quantify.
Verdict check_continuity_at(const ExprPtr& f, const Scalar& x, const Settings& s = {},
                            std::optional<Scalar> f_at_x = {});

struct UniformContinuityReport {
  Verdict verdict;  // Holds = holds to the sampled depth
  std::optional<double> witness_point;
  std::optional<double> witness_gap;
  long long depth = 0;
};

// Semidecider for condition (i): sweep neighbour pairs (a, a +- 1/n) with a
// ranging over a grid of A (and a = +-n on unbounded components). Fails with
// a witness when the gap stays bounded away from zero.
UniformContinuityReport check_uniform_continuity(const ExprPtr& f, const IntervalSet& A,
                                                 const Settings& s = {});

// sin(eps)/eps ~= 1 together with the sandwich cos(eps) < sin(eps)/eps < 1.
// Throws NotInvertibleError when eps is not invertible; eps must be a
// neighbour of zero.
Verdict sine_quotient_check(const VirtualNumber& eps, const Settings& s = {});

}  // namespace vc
