#include "vcalc/props.hpp"

#include <cmath>
#include <functional>

#include "vcalc/calculus.hpp"
#include "vcalc/classify.hpp"
#include "vcalc/errors.hpp"
#include "vcalc/integrate.hpp"
#include "vcalc/magnitude.hpp"

namespace vc {

// ---------------------------------------------------------------------------
// Generators

Rational ValueGen::small_rational(bool nonzero) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  int n = num(rng_);
  while (nonzero && n == 0) n = num(rng_);
  return Rational(n, den(rng_));
}

Scalar ValueGen::coeff(bool nonzero) { return Scalar(small_rational(nonzero)); }

LaurentPolynomial ValueGen::poly(int vmin, int vmax, int max_terms, bool lead_positive) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> expd(vmin, vmax);
  LaurentPolynomial p = LaurentPolynomial::monomial(vmin, lead_positive
                                                              ? Scalar(small_rational(true).abs())
                                                              : coeff(true));
  int extra = nterms(rng_);
  for (int i = 0; i < extra; ++i) {
    int k = expd(rng_);
    if (k == vmin) continue;  // keep the chosen leading term in charge
    p = p + LaurentPolynomial::monomial(k, coeff());
  }
  return p;
}

VirtualNumber ValueGen::infinitesimal() {
  std::uniform_int_distribution<int> v(1, 4);
  std::uniform_int_distribution<int> parity(0, 2);
  int val = v(rng_);
  VirtualNumber base = VirtualNumber::series(poly(val, val + 4, 3));
  if (parity(rng_) == 0)
    base = base + alternate_sign(VirtualNumber::series(poly(val + 1, val + 4, 2)));
  return base;
}

VirtualNumber ValueGen::finite() {
  std::uniform_int_distribution<int> v(0, 3);
  std::uniform_int_distribution<int> parity(0, 2);
  int val = v(rng_);
  VirtualNumber base = VirtualNumber::series(poly(val, val + 4, 3));
  if (parity(rng_) == 0)
    base = base + alternate_sign(VirtualNumber::series(poly(std::max(1, val), val + 4, 2)));
  return base;
}

VirtualNumber ValueGen::infinite() {
  std::uniform_int_distribution<int> pick(0, 2);
  switch (pick(rng_)) {
    case 0: return above_reals();
    case 1: return below_reals();
    default: {
      // oscillating: opposite leading signs on the two branches
      VirtualNumber a = above_reals();
      return alternate_sign(a);
    }
  }
}

VirtualNumber ValueGen::above_reals() {
  std::uniform_int_distribution<int> v(-4, -1);
  int val = v(rng_);
  return VirtualNumber::series(poly(val, val + 5, 3, /*lead_positive=*/true));
}

VirtualNumber ValueGen::below_reals() { return -above_reals(); }

VirtualNumber ValueGen::invertible_infinitesimal() {
  std::uniform_int_distribution<int> v(1, 3);
  int val = v(rng_);
  // same valuation on both branches, nonzero leading coefficients
  LaurentPolynomial even = poly(val, val + 3, 2);
  std::uniform_int_distribution<int> parity(0, 1);
  if (parity(rng_) == 0) return VirtualNumber::series(even);
  return VirtualNumber::series(even, -even);
}

VirtualNumber ValueGen::any() {
  std::uniform_int_distribution<int> pick(0, 3);
  switch (pick(rng_)) {
    case 0: return infinitesimal();
    case 1: return finite();
    case 2: return infinite();
    default: return VirtualNumber::from_scalar(coeff());
  }
}

// ---------------------------------------------------------------------------
// Suite machinery

namespace {

using Check = std::function<bool(ValueGen&, std::string&)>;

PropResult run_prop(const std::string& name, const Settings& s, int instances,
                    const Check& check) {
  PropResult r;
  r.name = name;
  r.pass = true;
  ValueGen gen(s.seed ^ std::hash<std::string>{}(name));
  for (int i = 0; i < instances; ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = check(gen, detail);
    } catch (const Error& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) {
      r.pass = false;
      r.detail = "instance " + std::to_string(i) + ": " + detail;
      break;
    }
  }
  return r;
}

PropResult run_once(const std::string& name, const Settings& s, const Check& check) {
  return run_prop(name, s, 1, check);
}

std::string show(const VirtualNumber& v) { return normal_form(v); }

// ---------------------------------------------------------------------------
// finitude: closure laws of the absolute-finitude classes

SuiteResult suite_finitude(const Settings& s, int instances) {
  SuiteResult suite{"finitude", {}};
  auto& out = suite.results;

  out.push_back(run_prop("sum of two infinitesimals is infinitesimal", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber a = g.infinitesimal(), b = g.infinitesimal();
                           if (is_infinitesimal(a + b, s).is_holds()) return true;
                           d = show(a) + " , " + show(b);
                           return false;
                         }));
  out.push_back(run_prop("infinitesimal times finite is infinitesimal", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber a = g.infinitesimal(), b = g.finite();
                           if (is_infinitesimal(a * b, s).is_holds()) return true;
                           d = show(a) + " , " + show(b);
                           return false;
                         }));
  out.push_back(run_prop("sum and product of finites are finite", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber a = g.finite(), b = g.finite();
                           if (is_finite(a + b, s).is_holds() && is_finite(a * b, s).is_holds())
                             return true;
                           d = show(a) + " , " + show(b);
                           return false;
                         }));
  out.push_back(run_prop("infinite plus finite is infinite", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber w = g.infinite(), l = g.finite();
                           if (is_infinite(w + l, s).is_holds()) return true;
                           d = show(w) + " , " + show(l);
                           return false;
                         }));
  out.push_back(run_prop("infinite times nonzero real is infinite", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber w = g.infinite();
                           VirtualNumber r = VirtualNumber::from_scalar(g.coeff(true));
                           if (is_infinite(w * r, s).is_holds()) return true;
                           d = show(w) + " , " + show(r);
                           return false;
                         }));
  out.push_back(run_prop("inverse of a one-sided infinite value is infinitesimal", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber w = g.rng()() % 2 ? g.above_reals() : g.below_reals();
                           if (is_infinitesimal(inv(w, s), s).is_holds()) return true;
                           d = show(w);
                           return false;
                         }));
  out.push_back(run_prop("closure of > R and < R under + and *", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber w = g.above_reals(), p = g.above_reals();
                           VirtualNumber u = g.below_reals(), v = g.below_reals();
                           bool ok =
                               cmp_reals(w + p, s).cmp == RealComparison::AboveR &&
                               cmp_reals(w * p, s).cmp == RealComparison::AboveR &&
                               cmp_reals(u + v, s).cmp == RealComparison::BelowR &&
                               cmp_reals(u * v, s).cmp == RealComparison::AboveR &&
                               cmp_reals(w * u, s).cmp == RealComparison::BelowR;
                           if (ok) return true;
                           d = show(w) + " , " + show(p) + " , " + show(u) + " , " + show(v);
                           return false;
                         }));
  out.push_back(run_prop("zero is the unique real infinitesimal; all reals finite", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber r = VirtualNumber::from_scalar(g.coeff(true));
                           bool ok = is_infinitesimal(r, s).is_fails() &&
                                     is_finite(r, s).is_holds() &&
                                     is_infinitesimal(VirtualNumber::real(0), s).is_holds();
                           if (ok) return true;
                           d = show(r);
                           return false;
                         }));
  out.push_back(run_prop("finitude tags are invariant under proximity", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber a = g.any();
                           VirtualNumber b = a + g.infinitesimal();
                           bool ok =
                               is_infinitesimal(a, s).truth == is_infinitesimal(b, s).truth &&
                               is_finite(a, s).truth == is_finite(b, s).truth &&
                               is_infinite(a, s).truth == is_infinite(b, s).truth;
                           if (ok) return true;
                           d = show(a) + " ~= " + show(b);
                           return false;
                         }));
  return suite;
}

// ---------------------------------------------------------------------------
// proximity: preservation laws and worked examples

SuiteResult suite_proximity(const Settings& s, int instances) {
  SuiteResult suite{"proximity", {}};
  auto& out = suite.results;

  out.push_back(run_prop("proximity is reflexive and symmetric", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber a = g.any();
                           VirtualNumber b = a + g.infinitesimal();
                           bool ok = near(a, a, s).is_holds() &&
                                     near(a, b, s).truth == near(b, a, s).truth;
                           if (ok) return true;
                           d = show(a);
                           return false;
                         }));
  out.push_back(run_prop("proximity is transitive", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber a = g.any();
                           VirtualNumber b = a + g.infinitesimal();
                           VirtualNumber c = b + g.infinitesimal();
                           if (near(a, b, s).is_holds() && near(b, c, s).is_holds() &&
                               near(a, c, s).is_holds())
                             return true;
                           d = show(a) + " , " + show(b) + " , " + show(c);
                           return false;
                         }));
  out.push_back(run_prop("addition preserves proximity", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber a1 = g.any(), b1 = g.any();
                           VirtualNumber a2 = a1 + g.infinitesimal();
                           VirtualNumber b2 = b1 + g.infinitesimal();
                           if (near(a1 + b1, a2 + b2, s).is_holds()) return true;
                           d = show(a1) + " , " + show(b1);
                           return false;
                         }));
  out.push_back(run_prop("multiplication preserves proximity on finite factors", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber l1 = g.finite(), m2 = g.finite();
                           VirtualNumber l2 = l1 + g.infinitesimal();
                           VirtualNumber m1 = m2 + g.infinitesimal();
                           if (near(l1 * m1, l2 * m2, s).is_holds()) return true;
                           d = show(l1) + " , " + show(m1);
                           return false;
                         }));
  out.push_back(run_once("infinite factor counterexample breaks the product law", s,
                         [&](ValueGen&, std::string& d) {
                           VirtualNumber l1 = VirtualNumber::real(1);
                           VirtualNumber l2 = l1 + VirtualNumber::del();
                           VirtualNumber mu = VirtualNumber::inf();
                           Verdict v = near(l1 * mu, l2 * mu, s);
                           if (v.is_fails()) return true;  // the law must fail here
                           d = "product proximity unexpectedly " + to_string(v);
                           return false;
                         }));
  out.push_back(run_prop("inversion preserves proximity near a nonzero real", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           Scalar x = g.coeff(true);
                           VirtualNumber alpha =
                               VirtualNumber::from_scalar(x) + g.infinitesimal();
                           VirtualNumber inv_x = VirtualNumber::from_scalar(x.inverse());
                           if (near(inv(alpha, s), inv_x, s).is_holds()) return true;
                           d = "x = " + x.to_string() + ", alpha = " + show(alpha);
                           return false;
                         }));
  out.push_back(run_prop("standard part is the unique nearby real", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           Scalar x = g.coeff();
                           VirtualNumber alpha =
                               VirtualNumber::from_scalar(x) + g.infinitesimal();
                           auto sp = standard_part(alpha, s);
                           if (!sp.value || !Scalar::equal(*sp.value, x)) {
                             d = "standard part of " + show(alpha);
                             return false;
                           }
                           for (int dr = 1; dr <= 3; ++dr) {
                             Scalar other = x + Scalar(Rational(dr, 2));
                             if (!near(alpha, VirtualNumber::from_scalar(other), s).is_fails()) {
                               d = show(alpha) + " near " + other.to_string();
                               return false;
                             }
                           }
                           return true;
                         }));
  out.push_back(run_once("worked example: 10 + del ~= 10", s, [&](ValueGen&, std::string& d) {
    Verdict v = near(VirtualNumber::real(10) + VirtualNumber::del(), VirtualNumber::real(10), s);
    d = to_string(v);
    return v.is_holds();
  }));
  out.push_back(run_once("worked example: inf not ~= inf^2", s, [&](ValueGen&, std::string& d) {
    Verdict v = near(VirtualNumber::inf(), VirtualNumber::inf() * VirtualNumber::inf(), s);
    d = to_string(v);
    return v.is_fails();
  }));
  out.push_back(
      run_once("worked example: ((5+del)^2-25)/del ~= 10", s, [&](ValueGen&, std::string& d) {
        VirtualNumber q = parse_virtual("((5 + del)^2 - 25)/del", s);
        d = show(q);
        return near(q, VirtualNumber::real(10), s).is_holds();
      }));
  out.push_back(run_once("worked example: rational function of inf has standard part 2", s,
                         [&](ValueGen&, std::string& d) {
                           VirtualNumber q =
                               parse_virtual("(2*inf^3 + 4*inf^2 - 1)/(inf^3 - 5)", s);
                           auto sp = standard_part(q, s);
                           d = show(q);
                           return sp.value && sp.value->is_exact() &&
                                  sp.value->rational() == Rational(2);
                         }));
  out.push_back(run_once("worked example: inf ~= sqrt(inf^2 + 1)", s,
                         [&](ValueGen&, std::string& d) {
                           VirtualNumber r = parse_virtual("sqrt(inf^2 + 1)", s);
                           d = show(r);
                           return near(VirtualNumber::inf(), r, s).is_holds();
                         }));
  return suite;
}

// ---------------------------------------------------------------------------
// confront: squeeze arguments

SuiteResult suite_confront(const Settings& s, int instances) {
  SuiteResult suite{"confront", {}};
  auto& out = suite.results;

  out.push_back(run_prop("confront theorem on random squeezes", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber alpha = g.finite();
                           VirtualNumber gamma = alpha + g.infinitesimal();
                           // beta = alpha + t (gamma - alpha), t in [0,1]
                           std::uniform_int_distribution<int> td(0, 4);
                           Scalar t(Rational(td(g.rng()), 4));
                           VirtualNumber beta =
                               alpha + (gamma - alpha) * VirtualNumber::from_scalar(t);
                           Verdict v = confront(alpha, beta, gamma, s);
                           if (v.is_holds()) return true;
                           d = show(alpha) + " , " + show(beta) + " , " + show(gamma) + " -> " +
                               to_string(v);
                           return false;
                         }));
  out.push_back(run_once("zero is between (+-)1 and (-+)1", s, [&](ValueGen&, std::string& d) {
    VirtualNumber pm1 = alternate_sign(VirtualNumber::real(1));
    Verdict v = between(VirtualNumber::real(0), pm1, -pm1, s);
    d = to_string(v);
    return v.is_holds();
  }));
  out.push_back(run_once("sandwich: sin(eps)/eps between cos(eps) and 1 forces ~= 1", s,
                         [&](ValueGen&, std::string& d) {
                           VirtualNumber eps = VirtualNumber::del();
                           VirtualNumber q =
                               div(extend_apply(parse_expr("sin(x)"), eps, s), eps, s);
                           VirtualNumber c = extend_apply(parse_expr("cos(x)"), eps, s);
                           VirtualNumber one = VirtualNumber::real(1);
                           bool premise = between(q, c, one, s).is_holds() &&
                                          near(c, one, s).is_holds();
                           bool conclusion = confront(one, q, c, s).is_holds();
                           d = show(q);
                           return premise && conclusion;
                         }));
  return suite;
}

// ---------------------------------------------------------------------------
// continuity: closure under +, *, /, composition

const char* kSmoothPool[] = {
    "sin(x)", "cos(x)", "exp(x)", "x^2 - 1", "x^3 + x", "1/(2 + x^2)", "sqrt(4 + x^2)",
};

SuiteResult suite_continuity(const Settings& s, int instances) {
  SuiteResult suite{"continuity", {}};
  auto& out = suite.results;

  auto pick_pair = [](ValueGen& g, ExprPtr& f, ExprPtr& h, Scalar& x) {
    std::uniform_int_distribution<int> pool(0, 6);
    std::uniform_int_distribution<int> xd(-8, 8);
    f = parse_expr(kSmoothPool[pool(g.rng())]);
    h = parse_expr(kSmoothPool[pool(g.rng())]);
    x = Scalar(Rational(xd(g.rng()), 4));
  };

  out.push_back(run_prop("sum of continuous functions is continuous", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           ExprPtr f, h;
                           Scalar x;
                           pick_pair(g, f, h, x);
                           bool parts = check_continuity_at(f, x, s).is_holds() &&
                                        check_continuity_at(h, x, s).is_holds();
                           bool sum = check_continuity_at(Expr::add(f, h), x, s).is_holds();
                           if (parts && sum) return true;
                           d = to_string(f) + " + " + to_string(h) + " at " + x.to_string();
                           return false;
                         }));
  out.push_back(run_prop("product of continuous functions is continuous", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           ExprPtr f, h;
                           Scalar x;
                           pick_pair(g, f, h, x);
                           if (check_continuity_at(Expr::mul(f, h), x, s).is_holds()) return true;
                           d = to_string(f) + " * " + to_string(h) + " at " + x.to_string();
                           return false;
                         }));
  out.push_back(run_prop("quotient is continuous where the denominator is nonzero", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           ExprPtr f, h;
                           Scalar x;
                           pick_pair(g, f, h, x);
                           Scalar hx = eval_scalar(h, x);
                           if (hx.is_negligible(1e-3)) return true;  // resample-free skip
                           if (check_continuity_at(Expr::div(f, h), x, s).is_holds()) return true;
                           d = to_string(f) + " / " + to_string(h) + " at " + x.to_string();
                           return false;
                         }));
  out.push_back(run_prop("composition of continuous functions is continuous", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           ExprPtr f, h;
                           Scalar x;
                           pick_pair(g, f, h, x);
                           if (check_continuity_at(compose(f, h), x, s).is_holds()) return true;
                           d = to_string(f) + " o " + to_string(h) + " at " + x.to_string();
                           return false;
                         }));
  out.push_back(run_prop("|cos a - cos b| <= |a - b| transfers to sampled virtuals", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber xi = g.finite();
                           VirtualNumber up = xi + g.infinitesimal();
                           for (long long n : s.schedule()) {
                             double a = xi.sample(n), b = up.sample(n);
                             if (std::fabs(std::cos(a) - std::cos(b)) >
                                 std::fabs(a - b) + 1e-15) {
                               d = "index " + std::to_string(n);
                               return false;
                             }
                           }
                           return true;
                         }));
  return suite;
}

// ---------------------------------------------------------------------------
// derivation-rules: sum/product/reciprocal rules

SuiteResult suite_derivation_rules(const Settings& s, int instances) {
  SuiteResult suite{"derivation-rules", {}};
  auto& out = suite.results;

  auto pick = [](ValueGen& g, ExprPtr& f, ExprPtr& h, Scalar& x) {
    std::uniform_int_distribution<int> pool(0, 6);
    std::uniform_int_distribution<int> xd(-6, 6);
    f = parse_expr(kSmoothPool[pool(g.rng())]);
    h = parse_expr(kSmoothPool[pool(g.rng())]);
    x = Scalar(Rational(xd(g.rng()), 4));
  };
  auto deriv = [&s](const ExprPtr& f, const Scalar& x) {
    DerivativeReport r = derivative_at(f, x, s);
    if (!r.value) throw Error("no derivative at " + x.to_string());
    return r.value->to_double();
  };

  out.push_back(run_prop("sum rule", s, instances, [&](ValueGen& g, std::string& d) {
    ExprPtr f, h;
    Scalar x;
    pick(g, f, h, x);
    double lhs = deriv(Expr::add(f, h), x);
    double rhs = deriv(f, x) + deriv(h, x);
    if (std::fabs(lhs - rhs) <= 1e-9) return true;
    d = "(" + to_string(f) + " + " + to_string(h) + ")' at " + x.to_string();
    return false;
  }));
  out.push_back(run_prop("product rule", s, instances, [&](ValueGen& g, std::string& d) {
    ExprPtr f, h;
    Scalar x;
    pick(g, f, h, x);
    double lhs = deriv(Expr::mul(f, h), x);
    double rhs = deriv(f, x) * eval_real(h, x.to_double()) +
                 eval_real(f, x.to_double()) * deriv(h, x);
    if (std::fabs(lhs - rhs) <= 1e-9) return true;
    d = "(" + to_string(f) + " * " + to_string(h) + ")' at " + x.to_string();
    return false;
  }));
  out.push_back(run_prop("reciprocal rule", s, instances, [&](ValueGen& g, std::string& d) {
    ExprPtr f, h;
    Scalar x;
    pick(g, f, h, x);
    double hx = eval_real(h, x.to_double());
    if (std::fabs(hx) < 1e-2) return true;  // keep clear of the pole
    double lhs = deriv(Expr::div(Expr::constant(Scalar(1)), h), x);
    double rhs = -deriv(h, x) / (hx * hx);
    if (std::fabs(lhs - rhs) <= 1e-9) return true;
    d = "(1/" + to_string(h) + ")' at " + x.to_string();
    return false;
  }));
  out.push_back(run_prop("probe consensus equals the symbolic derivative", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           ExprPtr f, h;
                           Scalar x;
                           pick(g, f, h, x);
                           DerivativeReport r = derivative_at(f, x, s);
                           if (r.verdict.is_holds() &&
                               std::fabs(r.value->to_double() - *r.oracle) <= 1e-9)
                             return true;
                           d = to_string(f) + " at " + x.to_string();
                           return false;
                         }));
  return suite;
}

// ---------------------------------------------------------------------------
// magnitude: order-of calculus

SuiteResult suite_magnitude(const Settings& s, int instances) {
  SuiteResult suite{"magnitude", {}};
  auto& out = suite.results;

  out.push_back(run_prop("negligible implies order-of", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber alpha = g.invertible_infinitesimal();
                           VirtualNumber gamma = alpha * g.infinitesimal();
                           if (negligible(gamma, alpha, s).is_holds() &&
                               in_order_of(gamma, alpha, s).is_holds())
                             return true;
                           d = show(gamma) + " << " + show(alpha);
                           return false;
                         }));
  out.push_back(run_prop("order-of does not imply negligible on same-order pairs", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber alpha = g.invertible_infinitesimal();
                           VirtualNumber beta =
                               alpha * VirtualNumber::from_scalar(g.coeff(true));
                           if (in_order_of(beta, alpha, s).is_holds() &&
                               negligible(beta, alpha, s).is_fails())
                             return true;
                           d = show(beta) + " vs " + show(alpha);
                           return false;
                         }));
  out.push_back(run_prop("negligibility is transitive", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber alpha = g.invertible_infinitesimal();
                           VirtualNumber beta = alpha * g.invertible_infinitesimal();
                           VirtualNumber gamma = beta * g.invertible_infinitesimal();
                           if (negligible(gamma, alpha, s).is_holds()) return true;
                           d = show(gamma) + " << " + show(beta) + " << " + show(alpha);
                           return false;
                         }));
  out.push_back(run_prop("order-of is closed under + and finite scaling", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber alpha = g.invertible_infinitesimal();
                           VirtualNumber b1 = alpha * g.finite();
                           VirtualNumber b2 = alpha * g.finite();
                           VirtualNumber lam = g.finite();
                           if (in_order_of(b1 + b2, alpha, s).is_holds() &&
                               in_order_of(b1 * lam, alpha, s).is_holds())
                             return true;
                           d = show(b1) + " , " + show(b2) + " in O(" + show(alpha) + ")";
                           return false;
                         }));
  out.push_back(run_prop("valuation is additive under multiplication", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber a = g.invertible_infinitesimal();
                           VirtualNumber b = g.above_reals();
                           OrderProfile pa = leading_order(a), pb = leading_order(b),
                                        pab = leading_order(a * b);
                           if (pa.val_even && pb.val_even && pab.val_even &&
                               *pab.val_even == *pa.val_even + *pb.val_even &&
                               *pab.val_odd == *pa.val_odd + *pb.val_odd)
                             return true;
                           d = show(a) + " * " + show(b);
                           return false;
                         }));
  out.push_back(run_prop("any infinitesimal is negligible next to a nonzero real", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber eps = g.infinitesimal();
                           VirtualNumber r = VirtualNumber::from_scalar(g.coeff(true));
                           if (negligible(eps, r, s).is_holds()) return true;
                           d = show(eps);
                           return false;
                         }));
  out.push_back(run_prop("any finite is negligible next to inf", s, instances,
                         [&](ValueGen& g, std::string& d) {
                           VirtualNumber lam = g.finite();
                           if (negligible(lam, VirtualNumber::inf(), s).is_holds()) return true;
                           d = show(lam);
                           return false;
                         }));
  out.push_back(run_once("sin(eps) is of order eps", s, [&](ValueGen&, std::string& d) {
    VirtualNumber eps = VirtualNumber::del();
    Verdict v = in_order_of(extend_apply(parse_expr("sin(x)"), eps, s), eps, s);
    d = to_string(v);
    return v.is_holds();
  }));
  return suite;
}

// ---------------------------------------------------------------------------
// ftc

SuiteResult suite_ftc(const Settings& s, int) {
  SuiteResult suite{"ftc", {}};
  auto& out = suite.results;
  out.push_back(run_once("exp on [0, x], x = 0.5", s, [&](ValueGen&, std::string& d) {
    FtcReport r = ftc_check(parse_expr("exp(x)"), 0, 0.5, s);
    d = "deepest ratio " + std::to_string(r.deepest_ratio);
    return r.verdict.is_holds() && r.deepest_ratio <= 1e-3;
  }));
  out.push_back(run_once("constant integrand has exact elements", s,
                         [&](ValueGen&, std::string& d) {
                           FtcReport r = ftc_check(parse_expr("4"), 0, 1, s);
                           d = "deepest ratio " + std::to_string(r.deepest_ratio);
                           return r.verdict.is_holds() && r.deepest_ratio <= 1e-9;
                         }));
  out.push_back(run_once("cos on [0, 1]", s, [&](ValueGen&, std::string& d) {
    FtcReport r = ftc_check(parse_expr("cos(x)"), 0, 1, s);
    d = "deepest ratio " + std::to_string(r.deepest_ratio);
    return r.verdict.is_holds();
  }));
  return suite;
}

// ---------------------------------------------------------------------------
// geometry

SuiteResult suite_geometry(const Settings& s, int instances) {
  SuiteResult suite{"geometry", {}};
  auto& out = suite.results;

  out.push_back(run_once("arc length of the unit segment of f = x", s,
                         [&](ValueGen&, std::string& d) {
                           IntegralReport r =
                               geom_measure(GeomKind::ArcLength, parse_expr("x"), 0, 1, s);
                           d = "value " + std::to_string(*r.value);
                           return std::fabs(*r.value - std::sqrt(2.0)) <= 1e-9 &&
                                  r.verdict.is_holds();
                         }));
  out.push_back(run_once("sphere surface with endpoint insets", s,
                         [&](ValueGen&, std::string& d) {
                           const double h = 1e-6;
                           IntegralReport r = geom_measure(
                               GeomKind::SurfaceRevolution, parse_expr("sqrt(1 - x^2)"),
                               -1 + h, 1 - h, s);
                           d = "value " + std::to_string(*r.value);
                           return std::fabs(*r.value - 4 * 3.14159265358979323846 * (1 - h)) <=
                                      1e-4 &&
                                  r.verdict.is_holds();
                         }));
  out.push_back(run_once("wrong length formula: dx is not negligible next to d(ell)", s,
                         [&](ValueGen&, std::string& d) {
                           ElementCheck c = element_negligibility(
                               GeomKind::ArcLength, parse_expr("x"), 0.5,
                               ElementCandidate::DxOnly, s);
                           double wrong = 1.0;  // integral of dx over [0,1]
                           double right =
                               *geom_measure(GeomKind::ArcLength, parse_expr("x"), 0, 1, s).value;
                           d = "ratio " + std::to_string(c.deepest_ratio);
                           return c.verdict.is_fails() && std::fabs(right - wrong) > 0.4;
                         }));
  out.push_back(run_once("wrong surface formula: 2 pi f dx is not negligible next to ds", s,
                         [&](ValueGen&, std::string& d) {
                           ElementCheck c = element_negligibility(
                               GeomKind::SurfaceRevolution, parse_expr("x + 1"), 0.5,
                               ElementCandidate::TwoPiF, s);
                           d = "ratio " + std::to_string(c.deepest_ratio);
                           return c.verdict.is_fails();
                         }));
  out.push_back(run_once("right elements are negligible approximations", s,
                         [&](ValueGen&, std::string& d) {
                           ElementCheck len = element_negligibility(
                               GeomKind::ArcLength, parse_expr("x"), 0.5,
                               ElementCandidate::Exact, s);
                           ElementCheck surf = element_negligibility(
                               GeomKind::SurfaceRevolution, parse_expr("x + 1"), 0.5,
                               ElementCandidate::Exact, s);
                           d = "ratios " + std::to_string(len.deepest_ratio) + ", " +
                               std::to_string(surf.deepest_ratio);
                           return len.verdict.is_holds() && surf.verdict.is_holds();
                         }));
  out.push_back(run_prop("scheme independence on smooth integrands", s,
                         std::max(1, instances / 20), [&](ValueGen& g, std::string& d) {
                           std::uniform_int_distribution<int> pool(0, 6);
                           ExprPtr f = parse_expr(kSmoothPool[pool(g.rng())]);
                           IntegralReport r = integrate(f, -1, 2, s);
                           if (r.verdict.is_holds()) return true;
                           d = to_string(f) + " -> " + to_string(r.verdict);
                           return false;
                         }));
  out.push_back(run_once("zero-length interval integrates to zero", s,
                         [&](ValueGen&, std::string& d) {
                           IntegralReport r = integrate(parse_expr("exp(x)"), 2, 2, s);
                           d = "value " + std::to_string(*r.value);
                           return *r.value == 0.0 && r.verdict.is_holds();
                         }));
  out.push_back(run_once("orientation antisymmetry", s, [&](ValueGen&, std::string& d) {
    double ab = *integrate(parse_expr("x^2"), 0, 1, s).value;
    double ba = *integrate(parse_expr("x^2"), 1, 0, s).value;
    d = std::to_string(ab) + " vs " + std::to_string(ba);
    return ab == -ba;
  }));
  return suite;
}

}  // namespace

const std::vector<std::string>& prop_suite_names() {
  static const std::vector<std::string> names = {
      "finitude", "proximity", "confront", "continuity",
      "derivation-rules", "magnitude", "ftc", "geometry"};
  return names;
}

SuiteResult run_prop_suite(const std::string& name, const Settings& s, int instances) {
  if (name == "finitude") return suite_finitude(s, instances);
  if (name == "proximity") return suite_proximity(s, instances);
  if (name == "confront") return suite_confront(s, instances);
  if (name == "continuity") return suite_continuity(s, instances);
  if (name == "derivation-rules") return suite_derivation_rules(s, instances);
  if (name == "magnitude") return suite_magnitude(s, instances);
  if (name == "ftc") return suite_ftc(s, instances);
  if (name == "geometry") return suite_geometry(s, instances);
  throw UnknownSuiteError("unknown property suite: " + name);
}

std::vector<SuiteResult> run_all_prop_suites(const Settings& s, int instances) {
  std::vector<SuiteResult> out;
  for (const auto& n : prop_suite_names()) out.push_back(run_prop_suite(n, s, instances));
  return out;
}

}  // namespace vc
