#include "vcalc/classify.hpp"

#include <cmath>
#include <vector>

#include "vcalc/errors.hpp"

namespace vc {

std::string to_string(FinitudeTag t) {
  switch (t) {
    case FinitudeTag::Infinitesimal: return "infinitesimal";
    case FinitudeTag::FiniteNonInfinitesimal: return "finite";
    case FinitudeTag::InfiniteAboveR: return "infinite-above-R";
    case FinitudeTag::InfiniteBelowR: return "infinite-below-R";
    default: return "infinite-oscillating";
  }
}

namespace {

// Eventual magnitude class of one series branch against the exponent
// threshold: Holds when the branch is O(del^min_val)-small in the known
// range, i.e. valuation >= min_val (known-zero counts when the truncation
// still covers exponent min_val - 1).
Verdict branch_small(const LaurentPolynomial& b, int min_val) {
  auto v = b.valuation();
  if (v) return *v >= min_val ? Verdict::holds(0) : Verdict::fails(0);
  if (!b.trunc() || *b.trunc() >= min_val - 1) return Verdict::holds(0);
  return Verdict::unknown(0);
}

std::vector<double> samples_on_schedule(const VirtualNumber& a, const Settings& s) {
  std::vector<double> out;
  for (long long n : s.schedule()) out.push_back(a.sample(n));
  return out;
}

// Decay heuristic for "samples tend to zero": Holds when the last 4 |s| are
// strictly decreasing and the final one is below 1e-6; Fails when a tail of
// >= 4 points stays above 1e-3 without its envelope decaying (a slowly
// decreasing tail, like n^{-1/2}, is merely Unknown); otherwise Unknown.
Verdict seq_infinitesimal(const std::vector<double>& xs, long long depth) {
  const std::size_t n = xs.size();
  if (n < 4) return Verdict::unknown(depth);
  bool decreasing = true;
  for (std::size_t i = n - 4; i + 1 < n; ++i)
    if (!(std::fabs(xs[i]) > std::fabs(xs[i + 1]))) decreasing = false;
  if (decreasing && std::fabs(xs[n - 1]) < 1e-6) return Verdict::holds(depth);
  bool tail_above = true;
  for (std::size_t i = n - 4; i < n; ++i)
    if (!(std::fabs(xs[i]) > 1e-3)) tail_above = false;
  if (tail_above && n >= 8) {
    double last_env = 0, prev_env = 0;
    for (std::size_t i = n - 4; i < n; ++i) last_env = std::max(last_env, std::fabs(xs[i]));
    for (std::size_t i = n - 8; i < n - 4; ++i) prev_env = std::max(prev_env, std::fabs(xs[i]));
    if (last_env > 0.75 * prev_env) return Verdict::fails(depth);
  }
  return Verdict::unknown(depth);
}

// Boundedness heuristic: Fails (infinite) when the tail exceeds 1e9 and is
// nondecreasing in magnitude; Holds (finite) when everything stays under 1e6.
Verdict seq_finite(const std::vector<double>& xs, long long depth) {
  const std::size_t n = xs.size();
  bool all_small = true;
  for (double x : xs)
    if (!(std::fabs(x) <= 1e6)) all_small = false;
  if (all_small) return Verdict::holds(depth);
  if (n >= 4) {
    bool growing = true, huge = true;
    for (std::size_t i = n - 4; i < n; ++i) {
      if (!(std::fabs(xs[i]) > 1e9)) huge = false;
      if (i + 1 < n && !(std::fabs(xs[i]) <= std::fabs(xs[i + 1]))) growing = false;
    }
    if (huge && growing) return Verdict::fails(depth);
  }
  return Verdict::unknown(depth);
}

}  // namespace

Verdict is_infinitesimal(const VirtualNumber& a, const Settings& s) {
  if (a.is_series())
    return conj(branch_small(a.even_branch(), 1), branch_small(a.odd_branch(), 1));
  auto xs = samples_on_schedule(a, s);
  return seq_infinitesimal(xs, s.schedule().back());
}

Verdict is_finite(const VirtualNumber& a, const Settings& s) {
  if (a.is_series())
    return conj(branch_small(a.even_branch(), 0), branch_small(a.odd_branch(), 0));
  auto xs = samples_on_schedule(a, s);
  return seq_finite(xs, s.schedule().back());
}

Verdict is_infinite(const VirtualNumber& a, const Settings& s) {
  return is_finite(a, s).negate();
}

RealComparisonReport cmp_reals(const VirtualNumber& a, const Settings& s) {
  if (a.is_series()) {
    const auto& e = a.even_branch();
    const auto& o = a.odd_branch();
    auto ve = e.valuation(), vo = o.valuation();
    bool e_up = ve && *ve < 0 && e.leading_coeff().sign() > 0;
    bool o_up = vo && *vo < 0 && o.leading_coeff().sign() > 0;
    bool e_dn = ve && *ve < 0 && e.leading_coeff().sign() < 0;
    bool o_dn = vo && *vo < 0 && o.leading_coeff().sign() < 0;
    if (e_up && o_up) return {RealComparison::AboveR, Verdict::holds(0)};
    if (e_dn && o_dn) return {RealComparison::BelowR, Verdict::holds(0)};
    return {RealComparison::Neither, Verdict::holds(0)};
  }
  auto xs = samples_on_schedule(a, s);
  const long long depth = s.schedule().back();
  const std::size_t n = xs.size();
  if (n >= 6) {
    bool up = true, down = true;
    for (std::size_t i = n - 6; i < n; ++i) {
      if (!(xs[i] > 1e6) || (i + 1 < n && !(xs[i] <= xs[i + 1]))) up = false;
      if (!(xs[i] < -1e6) || (i + 1 < n && !(xs[i] >= xs[i + 1]))) down = false;
    }
    if (up) return {RealComparison::AboveR, Verdict::holds(depth)};
    if (down) return {RealComparison::BelowR, Verdict::holds(depth)};
  }
  bool bounded = true;
  for (double x : xs)
    if (!(std::fabs(x) <= 1e6)) bounded = false;
  if (bounded) return {RealComparison::Neither, Verdict::holds(depth)};
  // Unbounded tail with mixed signs oscillates past every real.
  bool mixed = false;
  for (std::size_t i = n >= 6 ? n - 6 : 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (xs[i] * xs[j] < 0 && std::fabs(xs[i]) > 1e6 && std::fabs(xs[j]) > 1e6) mixed = true;
  if (mixed) return {RealComparison::Neither, Verdict::holds(depth)};
  return {RealComparison::Neither, Verdict::unknown(depth)};
}

FinitudeReport classify_finitude(const VirtualNumber& a, const Settings& s) {
  Verdict inf_v = is_infinitesimal(a, s);
  if (inf_v.is_holds()) return {FinitudeTag::Infinitesimal, inf_v};
  Verdict fin_v = is_finite(a, s);
  if (fin_v.is_holds())
    return {FinitudeTag::FiniteNonInfinitesimal,
            inf_v.is_fails() ? fin_v : Verdict::unknown(fin_v.depth)};
  if (fin_v.is_fails()) {
    auto cr = cmp_reals(a, s);
    FinitudeTag tag = cr.cmp == RealComparison::AboveR   ? FinitudeTag::InfiniteAboveR
                      : cr.cmp == RealComparison::BelowR ? FinitudeTag::InfiniteBelowR
                                                         : FinitudeTag::InfiniteOscillating;
    return {tag, conj(fin_v.negate(), cr.verdict)};
  }
  return {std::nullopt, Verdict::unknown(std::max(inf_v.depth, fin_v.depth))};
}

Verdict near(const VirtualNumber& a, const VirtualNumber& b, const Settings& s) {
  return is_infinitesimal(a - b, s);
}

Verdict neighbour(const VirtualNumber& a, const VirtualNumber& b, const Settings& s) {
  return conj(near(a, b, s), rel_ext(ExtRelation::Neq, {a, b}, s));
}

namespace {

// Standard part of one branch: the exponent-0 coefficient when the branch is
// finite and that coefficient is known.
struct BranchPart {
  std::optional<Scalar> value;
  Truth truth;
};

BranchPart branch_standard_part(const LaurentPolynomial& b) {
  if (b.trunc() && *b.trunc() < 0) return {std::nullopt, Truth::Unknown};
  auto v = b.valuation();
  if (v && *v < 0) return {std::nullopt, Truth::Fails};  // infinite branch
  return {b.coeff(0), Truth::Holds};
}

}  // namespace

StandardPartResult standard_part(const VirtualNumber& a, const Settings& s) {
  if (a.is_series()) {
    BranchPart e = branch_standard_part(a.even_branch());
    BranchPart o = branch_standard_part(a.odd_branch());
    if (e.truth == Truth::Fails || o.truth == Truth::Fails)
      return {std::nullopt, Verdict::fails(0)};
    if (e.truth == Truth::Unknown || o.truth == Truth::Unknown)
      return {std::nullopt, Verdict::unknown(0)};
    if (!Scalar::equal(*e.value, *o.value)) return {std::nullopt, Verdict::fails(0)};
    return {*e.value, Verdict::holds(0)};
  }

  // Cauchy-style tail estimate: mean of the last 5 samples, accepted when
  // they sit within 1e-6 of the mean and the window mean is stable under a
  // one-point shift within 1e-8.
  auto xs = samples_on_schedule(a, s);
  const long long depth = s.schedule().back();
  Verdict fin = seq_finite(xs, depth);
  if (fin.is_fails()) return {std::nullopt, Verdict::fails(depth)};
  const std::size_t n = xs.size();
  if (n < 6) return {std::nullopt, Verdict::unknown(depth)};
  auto mean = [&](std::size_t lo, std::size_t hi) {
    double m = 0;
    for (std::size_t i = lo; i < hi; ++i) m += xs[i];
    return m / static_cast<double>(hi - lo);
  };
  double m1 = mean(n - 5, n);
  double m2 = mean(n - 6, n - 1);
  bool tight = true;
  for (std::size_t i = n - 5; i < n; ++i)
    if (std::fabs(xs[i] - m1) > 1e-6) tight = false;
  if (tight && std::fabs(m1 - m2) <= 1e-8)
    return {Scalar::approx(m1), Verdict::holds(depth)};
  return {std::nullopt, Verdict::unknown(depth)};
}

Verdict between(const VirtualNumber& mid, const VirtualNumber& lo, const VirtualNumber& hi,
                const Settings& s) {
  return rel_ext(ExtRelation::Between, {lo, mid, hi}, s);
}

Verdict confront(const VirtualNumber& alpha, const VirtualNumber& beta,
                 const VirtualNumber& gamma, const Settings& s) {
  Verdict premise = conj(between(beta, alpha, gamma, s), near(alpha, gamma, s));
  return implies(premise, near(alpha, beta, s));
}

Verdict is_interior_point(const Scalar& x, const IntervalSet& B) {
  if (B.empty()) return Verdict::fails(0);
  double xd = x.to_double();
  bool inside = B.contains(xd) && B.extends_right_of(xd) && B.extends_left_of(xd);
  return inside ? Verdict::holds(0) : Verdict::fails(0);
}

}  // namespace vc
