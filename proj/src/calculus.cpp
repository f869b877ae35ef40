#include "vcalc/calculus.hpp"

#include <algorithm>
#include <cmath>

#include "vcalc/errors.hpp"

namespace vc {

InfinitesimalFamily InfinitesimalFamily::defaults() {
  VirtualNumber d = VirtualNumber::del();
  InfinitesimalFamily f;
  f.probes.emplace_back("del", d);
  f.probes.emplace_back("del^2", d * d);
  f.probes.emplace_back("-del", -d);
  f.probes.emplace_back("(+-)del", alternate_sign(d));
  f.probes.emplace_back("3*del/2", d * VirtualNumber::from_scalar(Scalar(Rational(3, 2))));
  return f;
}

namespace {

Scalar value_at(const ExprPtr& f, const Scalar& x, const std::optional<Scalar>& supplied) {
  if (supplied) return *supplied;
  return eval_scalar(f, x);
}

// Natural-domain interiority: f is defined at x (possibly by extension) and
// on both sides of it, virtually — f(x +- del) must evaluate.
void require_interior(const ExprPtr& f, const Scalar& x, const std::optional<Scalar>& f_at_x,
                      const std::optional<IntervalSet>& domain, const Settings& s) {
  if (domain) {
    if (!is_interior_point(x, *domain).is_holds())
      throw NotInteriorError("x is not interior to the given domain");
    return;
  }
  try {
    value_at(f, x, f_at_x);
    VirtualNumber vx = VirtualNumber::from_scalar(x);
    (void)extend_apply(f, vx + VirtualNumber::del(), s);
    (void)extend_apply(f, vx - VirtualNumber::del(), s);
  } catch (const DomainError& e) {
    throw NotInteriorError(std::string("x is not interior to the domain of f: ") + e.what());
  }
}

}  // namespace

DerivativeReport derivative_at(const ExprPtr& f, const Scalar& x,
                               const InfinitesimalFamily& family, const Settings& s,
                               std::optional<Scalar> f_at_x,
                               const std::optional<IntervalSet>& domain) {
  require_interior(f, x, f_at_x, domain, s);
  DerivativeReport report;
  const Scalar fx = value_at(f, x, f_at_x);
  const VirtualNumber vx = VirtualNumber::from_scalar(x);
  const VirtualNumber vfx = VirtualNumber::from_scalar(fx);

  bool any_fails = false, any_unknown = false, any_sampled = false;
  std::optional<Scalar> agreed;
  bool disagree = false;
  long long depth = 0;
  for (const auto& [name, dx] : family.probes) {
    VirtualNumber q = div(extend_apply(f, vx + dx, s) - vfx, dx, s);
    StandardPartResult sp = standard_part(q, s);
    depth = std::max(depth, sp.verdict.depth);
    report.per_probe.emplace_back(name, sp.value);
    if (sp.verdict.is_fails()) {
      any_fails = true;
    } else if (!sp.value) {
      any_unknown = true;
    } else {
      if (sp.verdict.depth > 0) any_sampled = true;
      if (!agreed) {
        agreed = sp.value;
      } else {
        // Sampled estimates certify only to the Cauchy window width; exact
        // series parts agree to the report tolerance.
        double slack = (any_sampled || sp.verdict.depth > 0) ? 2e-6 : s.tol;
        if (Scalar::compare(*agreed, *sp.value, std::max(s.tol, slack)) != 0) disagree = true;
      }
    }
  }

  if (any_fails || disagree) {
    report.verdict = Verdict::fails(depth);
    report.note = "NotDerivable: probe quotients have no common standard part";
    return report;
  }
  report.value = agreed;

  try {
    report.oracle = eval_real(diff_expr(f), x.to_double());
  } catch (const Error&) {
    // no usable symbolic oracle at x
  }

  if (!agreed || any_unknown) {
    report.verdict = Verdict::unknown(depth);
    report.note = "probe standard parts undecided at this depth";
    return report;
  }
  if (!report.oracle) {
    report.verdict = Verdict::unknown(depth);
    report.note = "holds for the probe family; no symbolic oracle to confirm";
    return report;
  }
  if (std::fabs(agreed->to_double() - *report.oracle) <= s.tol) {
    report.verdict = Verdict::holds(depth);
    report.note = "holds for the probe family, confirmed by symbolic oracle";
  } else {
    report.verdict = Verdict::fails(depth);
    report.note = "probe consensus disagrees with the symbolic derivative";
  }
  return report;
}

DerivativeReport derivative_at(const ExprPtr& f, const Scalar& x, const Settings& s) {
  return derivative_at(f, x, InfinitesimalFamily::defaults(), s);
}

namespace {

// One two-point differentiability probe: alpha = x + da, beta = x + da + db,
// a neighbour pair straddling x.
Verdict two_point_probe(const ExprPtr& f, const VirtualNumber& vx, const VirtualNumber& da,
                        const VirtualNumber& db, double m, const Settings& s) {
  VirtualNumber alpha = vx + da;
  VirtualNumber beta = alpha + db;
  VirtualNumber q = div(extend_apply(f, alpha, s) - extend_apply(f, beta, s),
                        alpha - beta, s);
  StandardPartResult sp = standard_part(q, s);
  if (sp.verdict.is_fails()) return Verdict::fails(sp.verdict.depth);
  if (sp.value) {
    bool match = std::fabs(sp.value->to_double() - m) <= std::max(s.tol, 1e-9);
    return match ? Verdict::holds(sp.verdict.depth) : Verdict::fails(sp.verdict.depth);
  }
  // Uncertified: look for persistent separation from m along the tail.
  auto sched = s.schedule();
  int separated = 0;
  for (std::size_t i = sched.size() >= 5 ? sched.size() - 5 : 0; i < sched.size(); ++i) {
    if (std::fabs(q.sample(sched[i]) - m) > 1e-3) ++separated;
  }
  if (separated == 5) return Verdict::fails(sched.back());
  return Verdict::unknown(sched.back());
}

}  // namespace

Verdict check_differentiable_at(const ExprPtr& f, const Scalar& x, const Settings& s,
                                std::optional<Scalar> f_at_x) {
  DerivativeReport d = derivative_at(f, x, InfinitesimalFamily::defaults(), s, f_at_x);
  if (d.verdict.is_fails()) return d.verdict;
  if (!d.value) return Verdict::unknown(d.verdict.depth);
  const double m = d.value->to_double();

  // (a) two-point neighbour pairs
  const VirtualNumber vx = VirtualNumber::from_scalar(x);
  const VirtualNumber del = VirtualNumber::del();
  const VirtualNumber del2 = del * del;
  const VirtualNumber del3 = del2 * del;
  std::vector<std::pair<VirtualNumber, VirtualNumber>> pairs = {
      {del, del2},
      {-del, del2},
      {del * VirtualNumber::real(2), -(del3 * VirtualNumber::real(3))},
      {alternate_sign(del), del2},
  };
  Verdict a = Verdict::holds(0);
  for (const auto& [da, db] : pairs) a = conj(a, two_point_probe(f, vx, da, db, m, s));

  // (b) continuity of the symbolic derivative at x; its value at a removable
  // gap is the derivative just computed.
  Verdict b = Verdict::unknown(0);
  bool have_symbolic = true;
  ExprPtr df;
  try {
    df = diff_expr(f);
  } catch (const Error&) {
    have_symbolic = false;
  }
  if (have_symbolic) {
    std::optional<Scalar> df_at_x;
    try {
      eval_scalar(df, x);
    } catch (const DomainError&) {
      df_at_x = *d.value;
    }
    b = check_continuity_at(df, x, s, df_at_x);
  }
  return conj(a, b);
}

TaylorResult taylor_expand(const ExprPtr& f, const Scalar& x, int n, const Settings& s) {
  require_interior(f, x, {}, {}, s);
  TaylorResult result;
  ExprPtr g = f;
  for (int k = 0; k <= n; ++k) {
    Scalar ck = eval_scalar(g, x) / Scalar(Rational::factorial(static_cast<unsigned>(k)));
    result.coeffs.push_back(ck);
    g = diff_expr(g);  // NonSmoothError propagates
  }

  Settings deep = s;
  deep.trunc = std::max(s.trunc, n + 2);
  VirtualNumber lifted =
      extend_apply(f, VirtualNumber::from_scalar(x) + VirtualNumber::del(), deep);
  LaurentPolynomial poly;
  for (int k = 0; k <= n; ++k)
    poly = poly + LaurentPolynomial::monomial(k, result.coeffs[static_cast<std::size_t>(k)]);
  if (!lifted.is_series()) {
    result.remainder = Verdict::unknown(0);
    return result;
  }
  LaurentPolynomial rem = (lifted.even_branch() - poly).pruned();
  auto v = rem.valuation();
  // The remainder is in O(del^{n+1}) iff nothing significant survives below
  // exponent n+1. An exactly-zero remainder counts.
  result.remainder = (!v || *v >= n + 1) ? Verdict::holds(0) : Verdict::fails(0);
  return result;
}

Verdict check_continuity_at(const ExprPtr& f, const Scalar& x, const Settings& s,
                            std::optional<Scalar> f_at_x) {
  const Scalar fx = value_at(f, x, f_at_x);
  const VirtualNumber vx = VirtualNumber::from_scalar(x);
  const VirtualNumber vfx = VirtualNumber::from_scalar(fx);
  Verdict out = Verdict::holds(0);
  int probes_used = 0;
  for (const auto& [name, eps] : InfinitesimalFamily::defaults().probes) {
    (void)name;
    VirtualNumber value;
    try {
      value = extend_apply(f, vx + eps, s);
    } catch (const DomainError&) {
      continue;  // the probe left the domain of f: it does not quantify
    }
    ++probes_used;
    out = conj(out, near(value, vfx, s));
  }
  if (probes_used == 0) return Verdict::unknown(0);
  return out;
}

UniformContinuityReport check_uniform_continuity(const ExprPtr& f, const IntervalSet& A,
                                                 const Settings& s) {
  constexpr int kGridPerComponent = 64;
  constexpr double kGapBound = 1e-3;

  std::vector<double> grid;
  bool unbounded_above = false, unbounded_below = false;
  for (const auto& c : A.components()) {
    const bool lo_inf = std::isinf(c.lo), hi_inf = std::isinf(c.hi);
    if (lo_inf) unbounded_below = true;
    if (hi_inf) unbounded_above = true;
    double lo = lo_inf ? -10.0 : c.lo;
    double hi = hi_inf ? 10.0 : c.hi;
    for (int i = 0; i <= kGridPerComponent; ++i)
      grid.push_back(lo + (hi - lo) * i / kGridPerComponent);
  }

  const auto schedule = s.schedule();
  std::vector<double> gaps;
  double deepest_witness = 0, deepest_gap = 0;
  for (long long n : schedule) {
    const double h = 1.0 / static_cast<double>(n);
    std::vector<double> points = grid;
    // endpoints-approach probes and the unbounded sweep a_n = +-n
    if (unbounded_above) points.push_back(static_cast<double>(n));
    if (unbounded_below) points.push_back(-static_cast<double>(n));
    for (const auto& c : A.components()) {
      if (!std::isinf(c.lo)) points.push_back(c.lo + h);
      if (!std::isinf(c.hi)) points.push_back(c.hi - h);
    }
    double gap = 0, at = 0;
    for (double a : points) {
      if (!A.contains(a)) continue;
      double b;
      if (A.contains(a + h))
        b = a + h;
      else if (A.contains(a - h))
        b = a - h;
      else
        continue;
      double g = std::fabs(eval_real(f, b) - eval_real(f, a));
      if (g > gap) {
        gap = g;
        at = a;
      }
    }
    gaps.push_back(gap);
    deepest_witness = at;
    deepest_gap = gap;
  }

  UniformContinuityReport report;
  report.depth = schedule.back();
  const std::size_t m = gaps.size();
  bool tail_big = m >= 5;
  for (std::size_t i = m >= 5 ? m - 5 : 0; i < m; ++i)
    if (!(gaps[i] > kGapBound)) tail_big = false;
  const double base = m >= 5 ? gaps[m - 5] : gaps.front();
  const bool decaying = gaps.back() <= 0.5 * base;

  if (tail_big && !decaying) {
    report.verdict = Verdict::fails(report.depth);
    report.witness_point = deepest_witness;
    report.witness_gap = deepest_gap;
  } else if (gaps.back() <= kGapBound || decaying) {
    report.verdict = Verdict::holds(report.depth);
  } else {
    report.verdict = Verdict::unknown(report.depth);
    report.witness_point = deepest_witness;
    report.witness_gap = deepest_gap;
  }
  return report;
}

Verdict sine_quotient_check(const VirtualNumber& eps, const Settings& s) {
  if (!rel_ext(ExtRelation::Neq, {eps, VirtualNumber::real(0)}, s).is_holds())
    throw NotInvertibleError("probe must be an invertible infinitesimal");
  if (!is_infinitesimal(eps, s).is_holds())
    throw Error("sine_quotient_check: probe is not infinitesimal");
  ExprPtr sin_x = Expr::sin(Expr::variable());
  ExprPtr cos_x = Expr::cos(Expr::variable());
  VirtualNumber q = div(extend_apply(sin_x, eps, s), eps, s);
  VirtualNumber cos_eps = extend_apply(cos_x, eps, s);
  VirtualNumber one = VirtualNumber::real(1);
  Verdict near_one = near(q, one, s);
  Verdict sandwich_lo = rel_ext(ExtRelation::Lt, {cos_eps, q}, s);
  Verdict sandwich_hi = rel_ext(ExtRelation::Lt, {q, one}, s);
  return conj(near_one, conj(sandwich_lo, sandwich_hi));
}

}  // namespace vc
