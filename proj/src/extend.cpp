#include <cmath>
#include <functional>
#include <variant>

#include "vcalc/errors.hpp"
#include "vcalc/expr.hpp"

namespace vc {

namespace {

// Marker: the branch has no Laurent form (sin of an infinite argument,
// sqrt/ln producing fractional or logarithmic growth); sample it instead.
struct NeedSeq {};
using LiftResult = std::variant<LaurentPolynomial, NeedSeq>;

LaurentPolynomial lp_const(Scalar c) { return LaurentPolynomial::constant(std::move(c)); }

// sum_{j=0..J} coeff(j) * u^j, Horner, truncated to order T throughout.
LaurentPolynomial taylor_sum(const std::function<Scalar(unsigned)>& coeff,
                             const LaurentPolynomial& u, int J, int T) {
  LaurentPolynomial acc = lp_const(coeff(static_cast<unsigned>(J)));
  for (int j = J - 1; j >= 0; --j)
    acc = (acc * u + lp_const(coeff(static_cast<unsigned>(j)))).truncated(T);
  return acc.truncated(T);
}

// g^{(j)}(c) / j! for g in {sin, cos, exp}; exact at c = 0.
Scalar cyclic_taylor_coeff(NodeKind kind, const Scalar& c, unsigned j) {
  if (c.is_exact() && c.is_zero()) {
    static const int sin_pat[4] = {0, 1, 0, -1};
    static const int cos_pat[4] = {1, 0, -1, 0};
    int sgn = kind == NodeKind::Sin   ? sin_pat[j % 4]
              : kind == NodeKind::Cos ? cos_pat[j % 4]
                                      : 1;
    if (sgn == 0) return Scalar(0);
    return Scalar(Rational(sgn)) / Scalar(Rational::factorial(j));
  }
  const double cd = c.to_double();
  double d = 0;
  switch (kind) {
    case NodeKind::Sin:
      switch (j % 4) {
        case 0: d = std::sin(cd); break;
        case 1: d = std::cos(cd); break;
        case 2: d = -std::sin(cd); break;
        default: d = -std::cos(cd); break;
      }
      break;
    case NodeKind::Cos:
      switch (j % 4) {
        case 0: d = std::cos(cd); break;
        case 1: d = -std::sin(cd); break;
        case 2: d = -std::cos(cd); break;
        default: d = std::sin(cd); break;
      }
      break;
    default:
      d = std::exp(cd);
      break;
  }
  return Scalar::approx(d) / Scalar(Rational::factorial(j));
}

int taylor_terms(const LaurentPolynomial& u, int T) {
  auto w = u.valuation();
  if (!w) return 0;
  int step = std::max(1, *w);
  return std::max(0, T / step);
}

LiftResult lift_branch(NodeKind kind, const LaurentPolynomial& raw, const Settings& s) {
  const LaurentPolynomial L = raw.pruned();
  const int T = s.trunc;

  switch (kind) {
    case NodeKind::Sin:
    case NodeKind::Cos:
    case NodeKind::Exp: {
      if (L.trunc() && *L.trunc() < 0) return NeedSeq{};  // center unknown
      auto v = L.valuation();
      if (v && *v < 0) return NeedSeq{};  // infinite argument: no Laurent form
      const Scalar c = L.coeff(0);
      LaurentPolynomial u = L - lp_const(c);
      LaurentPolynomial sum = taylor_sum(
          [&](unsigned j) { return cyclic_taylor_coeff(kind, c, j); }, u, taylor_terms(u, T),
          T);
      if (u.trunc()) sum = sum.truncated(*u.trunc());
      return sum;
    }

    case NodeKind::Ln: {
      if (L.trunc() && *L.trunc() < 0) return NeedSeq{};
      const int sign = L.eventual_sign();
      if (sign < 0) throw DomainError("ln of an eventually negative value");
      if (sign == 0) {
        if (L.is_true_zero()) throw DomainError("ln of zero");
        return NeedSeq{};  // zero up to truncation: value sign unknown
      }
      if (*L.valuation() != 0) return NeedSeq{};  // ln(del^v ...) grows like log n
      const Scalar c = L.coeff(0);
      LaurentPolynomial u = L.scaled(c.inverse()) - lp_const(Scalar(1));
      const Scalar ln_c = (c.is_exact() && c.rational().is_one())
                              ? Scalar(0)
                              : Scalar::approx(std::log(c.to_double()));
      auto coeff = [&](unsigned j) {
        if (j == 0) return ln_c;
        return Scalar(Rational(j % 2 ? 1 : -1, static_cast<long long>(j)));
      };
      LaurentPolynomial sum = taylor_sum(coeff, u, taylor_terms(u, T), T);
      if (u.trunc()) sum = sum.truncated(*u.trunc());
      return sum;
    }

    case NodeKind::Sqrt: {
      const int sign = L.eventual_sign();
      if (sign < 0) throw DomainError("sqrt of an eventually negative value");
      if (sign == 0) {
        if (L.is_true_zero()) return LaurentPolynomial();
        return NeedSeq{};
      }
      const int v = *L.valuation();
      if (v % 2 != 0) return NeedSeq{};  // n^{v/2} is not a Laurent term
      // Factor out the even power: L = del^v * B with B finite, center > 0.
      LaurentPolynomial b = L.shifted(-v);
      const Scalar c = b.coeff(0);
      LaurentPolynomial u = b.scaled(c.inverse()) - lp_const(Scalar(1));
      Scalar sqrt_c = Scalar::approx(std::sqrt(c.to_double()));
      if (c.is_exact())
        if (auto root = c.rational().exact_sqrt()) sqrt_c = Scalar(*root);
      // binomial series (1+u)^{1/2}: b_0 = 1, b_j = b_{j-1} (3/2 - j)/j
      std::vector<Scalar> bin(static_cast<std::size_t>(T) + 1, Scalar(0));
      bin[0] = Scalar(1);
      for (int j = 1; j <= T; ++j)
        bin[static_cast<std::size_t>(j)] =
            bin[static_cast<std::size_t>(j - 1)] *
            Scalar(Rational(3 - 2 * static_cast<long long>(j), 2 * static_cast<long long>(j)));
      LaurentPolynomial sum = taylor_sum(
          [&](unsigned j) { return bin[j]; }, u, taylor_terms(u, T), T);
      if (u.trunc()) sum = sum.truncated(*u.trunc());
      return sum.scaled(sqrt_c).shifted(v / 2);
    }

    case NodeKind::Abs: {
      const int sign = L.eventual_sign();
      if (sign > 0) return L;
      if (sign < 0) return -L;
      if (L.is_true_zero()) return L;
      return NeedSeq{};  // sign unknown below the truncation
    }

    default:
      throw Error("lift_branch: not an elementary node");
  }
}

const char* func_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Sin: return "sin";
    case NodeKind::Cos: return "cos";
    case NodeKind::Exp: return "exp";
    case NodeKind::Ln: return "ln";
    case NodeKind::Sqrt: return "sqrt";
    default: return "abs";
  }
}

VirtualNumber apply_pointwise(NodeKind kind, const VirtualNumber& arg) {
  SequenceGen g = arg.to_seq();
  auto rule = [g, kind](long long n) {
    double v = g.rule(n);
    switch (kind) {
      case NodeKind::Sin: return std::sin(v);
      case NodeKind::Cos: return std::cos(v);
      case NodeKind::Exp: return std::exp(v);
      case NodeKind::Ln:
        if (v <= 0.0)
          throw DomainError("ln of a non-positive sample at index " + std::to_string(n));
        return std::log(v);
      case NodeKind::Sqrt:
        if (v < 0.0)
          throw DomainError("sqrt of a negative sample at index " + std::to_string(n));
        return std::sqrt(v);
      default: return std::fabs(v);
    }
  };
  return VirtualNumber::sequence(
      {rule, std::string(func_name(kind)) + "(" + g.description + ")"});
}

VirtualNumber elementary_apply(NodeKind kind, const VirtualNumber& arg, const Settings& s) {
  if (arg.is_series()) {
    LiftResult even = lift_branch(kind, arg.even_branch(), s);
    LiftResult odd = lift_branch(kind, arg.odd_branch(), s);
    if (std::holds_alternative<LaurentPolynomial>(even) &&
        std::holds_alternative<LaurentPolynomial>(odd)) {
      return VirtualNumber::series(std::get<LaurentPolynomial>(even),
                                   std::get<LaurentPolynomial>(odd));
    }
  }
  return apply_pointwise(kind, arg);
}

VirtualNumber eval_node(const ExprPtr& e, const VirtualNumber* x, const Settings& s) {
  switch (e->kind) {
    case NodeKind::Constant: return VirtualNumber::from_scalar(e->value);
    case NodeKind::Variable:
      if (!x) throw Error("free variable x in a ground expression");
      return *x;
    case NodeKind::Add: return eval_node(e->a, x, s) + eval_node(e->b, x, s);
    case NodeKind::Mul: return eval_node(e->a, x, s) * eval_node(e->b, x, s);
    case NodeKind::Div:
      try {
        return div(eval_node(e->a, x, s), eval_node(e->b, x, s), s);
      } catch (const NotInvertibleError& err) {
        throw DomainError(std::string("division: ") + err.what());
      }
    case NodeKind::Pow:
      try {
        return pow(eval_node(e->a, x, s), e->exponent, s);
      } catch (const NotInvertibleError& err) {
        throw DomainError(std::string("negative power: ") + err.what());
      }
    case NodeKind::Neg: return -eval_node(e->a, x, s);
    case NodeKind::Sin:
    case NodeKind::Cos:
    case NodeKind::Exp:
    case NodeKind::Ln:
    case NodeKind::Sqrt:
    case NodeKind::Abs: return elementary_apply(e->kind, eval_node(e->a, x, s), s);
    case NodeKind::DelConst: return VirtualNumber::del();
    case NodeKind::InfConst: return VirtualNumber::inf();
    case NodeKind::AltSign: return alternate_sign(eval_node(e->a, x, s));
    case NodeKind::AltSignNeg: return alternate_sign_neg(eval_node(e->a, x, s));
    case NodeKind::TruncTag: {
      LaurentPolynomial z = LaurentPolynomial().truncated(e->exponent - 1);
      return VirtualNumber::series(z);
    }
  }
  throw Error("eval_node: unhandled node");
}

}  // namespace

VirtualNumber extend_apply(const ExprPtr& f, const VirtualNumber& x, const Settings& s) {
  return eval_node(f, &x, s);
}

VirtualNumber eval_virtual(const ExprPtr& e, const Settings& s) {
  return eval_node(e, nullptr, s);
}

VirtualNumber parse_virtual(const std::string& text, const Settings& s) {
  return eval_virtual(parse_expr(text), s);
}

}  // namespace vc
