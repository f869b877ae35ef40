#include "vcalc/expr.hpp"

#include <cctype>
#include <cmath>

#include "vcalc/errors.hpp"

namespace vc {

ExprPtr make_node(NodeKind k, Scalar v, int e, ExprPtr a, ExprPtr b) {
  return ExprPtr(new Expr(k, std::move(v), e, std::move(a), std::move(b)));
}

namespace {
bool is_const(const ExprPtr& e) { return e->kind == NodeKind::Constant; }
bool is_const_value(const ExprPtr& e, long long v) {
  return is_const(e) && e->value.is_exact() && e->value.rational() == Rational(v);
}
}  // namespace

ExprPtr Expr::constant(Scalar c) { return make_node(NodeKind::Constant, std::move(c), 0, {}, {}); }
ExprPtr Expr::variable() { return make_node(NodeKind::Variable, Scalar(0), 0, {}, {}); }
ExprPtr Expr::pi() { return constant(Scalar::approx(3.14159265358979323846)); }
ExprPtr Expr::euler() { return constant(Scalar::approx(2.71828182845904523536)); }

ExprPtr Expr::add(ExprPtr l, ExprPtr r) {
  if (is_const_value(l, 0)) return r;
  if (is_const_value(r, 0)) return l;
  if (is_const(l) && is_const(r)) return constant(l->value + r->value);
  return make_node(NodeKind::Add, Scalar(0), 0, std::move(l), std::move(r));
}

ExprPtr Expr::sub(ExprPtr l, ExprPtr r) { return add(std::move(l), neg(std::move(r))); }

ExprPtr Expr::mul(ExprPtr l, ExprPtr r) {
  if (is_const_value(l, 0) || is_const_value(r, 0)) return constant(Scalar(0));
  if (is_const_value(l, 1)) return r;
  if (is_const_value(r, 1)) return l;
  if (is_const(l) && is_const(r)) return constant(l->value * r->value);
  return make_node(NodeKind::Mul, Scalar(0), 0, std::move(l), std::move(r));
}

ExprPtr Expr::div(ExprPtr l, ExprPtr r) {
  if (is_const_value(r, 1)) return l;
  return make_node(NodeKind::Div, Scalar(0), 0, std::move(l), std::move(r));
}

ExprPtr Expr::pow(ExprPtr base, int k) {
  if (k == 1) return base;
  if (k == 0) return constant(Scalar(1));
  if (is_const(base) && base->value.is_exact())
    return constant(base->value.pow(k));
  return make_node(NodeKind::Pow, Scalar(0), k, std::move(base), {});
}

ExprPtr Expr::neg(ExprPtr e) {
  if (is_const(e)) return constant(-e->value);
  if (e->kind == NodeKind::Neg) return e->a;
  return make_node(NodeKind::Neg, Scalar(0), 0, std::move(e), {});
}

ExprPtr Expr::sin(ExprPtr e) { return make_node(NodeKind::Sin, Scalar(0), 0, std::move(e), {}); }
ExprPtr Expr::cos(ExprPtr e) { return make_node(NodeKind::Cos, Scalar(0), 0, std::move(e), {}); }
ExprPtr Expr::exp(ExprPtr e) { return make_node(NodeKind::Exp, Scalar(0), 0, std::move(e), {}); }
ExprPtr Expr::ln(ExprPtr e) { return make_node(NodeKind::Ln, Scalar(0), 0, std::move(e), {}); }
ExprPtr Expr::sqrt(ExprPtr e) { return make_node(NodeKind::Sqrt, Scalar(0), 0, std::move(e), {}); }
ExprPtr Expr::abs(ExprPtr e) { return make_node(NodeKind::Abs, Scalar(0), 0, std::move(e), {}); }
ExprPtr Expr::del() { return make_node(NodeKind::DelConst, Scalar(0), 0, {}, {}); }
ExprPtr Expr::inf() { return make_node(NodeKind::InfConst, Scalar(0), 0, {}, {}); }
ExprPtr Expr::alt_sign(ExprPtr e) {
  return make_node(NodeKind::AltSign, Scalar(0), 0, std::move(e), {});
}
ExprPtr Expr::alt_sign_neg(ExprPtr e) {
  return make_node(NodeKind::AltSignNeg, Scalar(0), 0, std::move(e), {});
}
ExprPtr Expr::trunc_tag(int order) {
  return make_node(NodeKind::TruncTag, Scalar(0), order, {}, {});
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
  enum Type { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen,
              AltSign, AltSignNeg, End } type;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }
  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= src_.size()) {
      cur_ = {Token::End, "", start};
      return;
    }
    char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i_;
      while (j < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[j])) || src_[j] == '.'))
        ++j;
      // exponent part of a numeric literal: 1e-3, 2.5E2
      if (j < src_.size() && (src_[j] == 'e' || src_[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
        if (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) {
          ++k;
          while (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) ++k;
          j = k;
        }
      }
      cur_ = {Token::Number, src_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < src_.size() && std::isalnum(static_cast<unsigned char>(src_[j]))) ++j;
      cur_ = {Token::Ident, src_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    if (c == '(' && src_.compare(i_, 4, "(+-)") == 0) {
      cur_ = {Token::AltSign, "(+-)", start};
      i_ += 4;
      return;
    }
    if (c == '(' && src_.compare(i_, 4, "(-+)") == 0) {
      cur_ = {Token::AltSignNeg, "(-+)", start};
      i_ += 4;
      return;
    }
    ++i_;
    switch (c) {
      case '+': cur_ = {Token::Plus, "+", start}; return;
      case '-': cur_ = {Token::Minus, "-", start}; return;
      case '*': cur_ = {Token::Star, "*", start}; return;
      case '/': cur_ = {Token::Slash, "/", start}; return;
      case '^': cur_ = {Token::Caret, "^", start}; return;
      case '(': cur_ = {Token::LParen, "(", start}; return;
      case ')': cur_ = {Token::RParen, ")", start}; return;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

  const std::string& src_;
  std::size_t i_ = 0;
  Token cur_{Token::End, "", 0};
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (lex_.peek().type != Token::End)
      throw ParseError("trailing input '" + lex_.peek().text + "'", lex_.peek().pos);
    return e;
  }

 private:
  ExprPtr expr() {
    ExprPtr e;
    if (lex_.peek().type == Token::Minus) {
      lex_.take();
      e = Expr::neg(term());
    } else {
      e = term();
    }
    while (lex_.peek().type == Token::Plus || lex_.peek().type == Token::Minus) {
      bool plus = lex_.take().type == Token::Plus;
      ExprPtr rhs = term();
      e = plus ? Expr::add(e, rhs) : Expr::sub(e, rhs);
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (lex_.peek().type == Token::Star || lex_.peek().type == Token::Slash) {
      bool star = lex_.take().type == Token::Star;
      ExprPtr rhs = factor();
      e = star ? Expr::mul(e, rhs) : Expr::div(e, rhs);
    }
    return e;
  }

  ExprPtr factor() {
    ExprPtr e = base();
    if (lex_.peek().type == Token::Caret) {
      lex_.take();
      e = Expr::pow(e, integer());
    }
    return e;
  }

  int integer() {
    bool negate = false;
    if (lex_.peek().type == Token::Minus) {
      lex_.take();
      negate = true;
    }
    Token t = lex_.take();
    if (t.type != Token::Number) throw ParseError("expected integer exponent", t.pos);
    for (char c : t.text)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("exponent must be an integer", t.pos);
    int v = std::stoi(t.text);
    return negate ? -v : v;
  }

  ExprPtr expect_parenthesized() {
    Token t = lex_.take();
    if (t.type != Token::LParen) throw ParseError("expected '('", t.pos);
    ExprPtr e = expr();
    Token r = lex_.take();
    if (r.type != Token::RParen) throw ParseError("expected ')'", r.pos);
    return e;
  }

  // O(1) | O(del^k) | O(inf^k): a zero known only up to that order.
  ExprPtr order_tag(std::size_t at) {
    Token t = lex_.take();
    if (t.type != Token::LParen) throw ParseError("expected '(' after O", t.pos);
    Token body = lex_.take();
    int order;
    if (body.type == Token::Number && body.text == "1") {
      order = 0;
    } else if (body.type == Token::Ident && (body.text == "del" || body.text == "inf")) {
      int k = 1;
      if (lex_.peek().type == Token::Caret) {
        lex_.take();
        k = integer();
      }
      order = body.text == "del" ? k : -k;
    } else {
      throw ParseError("expected 1, del^k or inf^k inside O(...)", body.pos);
    }
    Token r = lex_.take();
    if (r.type != Token::RParen) throw ParseError("expected ')'", r.pos);
    (void)at;
    return Expr::trunc_tag(order);
  }

  ExprPtr base() {
    Token t = lex_.peek();
    switch (t.type) {
      case Token::Number: {
        lex_.take();
        auto r = Rational::from_string(t.text);
        if (!r) throw ParseError("bad number '" + t.text + "'", t.pos);
        return Expr::constant(Scalar(*r));
      }
      case Token::AltSign:
        lex_.take();
        return Expr::alt_sign(factor());
      case Token::AltSignNeg:
        lex_.take();
        return Expr::alt_sign_neg(factor());
      case Token::LParen: {
        lex_.take();
        ExprPtr e = expr();
        Token r = lex_.take();
        if (r.type != Token::RParen) throw ParseError("expected ')'", r.pos);
        return e;
      }
      case Token::Ident: {
        lex_.take();
        const std::string& id = t.text;
        if (id == "x") return Expr::variable();
        if (id == "pi") return Expr::pi();
        if (id == "e") return Expr::euler();
        if (id == "inf") return Expr::inf();
        if (id == "del") return Expr::del();
        if (id == "sin") return Expr::sin(expect_parenthesized());
        if (id == "cos") return Expr::cos(expect_parenthesized());
        if (id == "exp") return Expr::exp(expect_parenthesized());
        if (id == "ln") return Expr::ln(expect_parenthesized());
        if (id == "sqrt") return Expr::sqrt(expect_parenthesized());
        if (id == "abs") return Expr::abs(expect_parenthesized());
        if (id == "O") return order_tag(t.pos);
        throw UnknownIdentifierError("unknown identifier '" + id + "'", t.pos);
      }
      default:
        throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }
  }

  Lexer lex_;
};

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

// Precedence levels: 1 sum, 2 product, 3 unary/power, 4 atom.
int precedence(const ExprPtr& e) {
  switch (e->kind) {
    case NodeKind::Add: return 1;
    case NodeKind::Mul:
    case NodeKind::Div: return 2;
    case NodeKind::Neg:
    case NodeKind::Pow: return 3;
    default: return 4;
  }
}

std::string print(const ExprPtr& e, int parent_prec) {
  std::string s;
  int prec = precedence(e);
  switch (e->kind) {
    case NodeKind::Constant: {
      s = e->value.to_string();
      if (e->value.sign() < 0) prec = 3;
      break;
    }
    case NodeKind::Variable: s = "x"; break;
    case NodeKind::Add: {
      // render x + (-y) as x - y
      const ExprPtr& r = e->b;
      if (r->kind == NodeKind::Neg)
        s = print(e->a, 1) + " - " + print(r->a, 2);
      else if (r->kind == NodeKind::Constant && r->value.sign() < 0)
        s = print(e->a, 1) + " - " + (-r->value).to_string();
      else
        s = print(e->a, 1) + " + " + print(r, 1);
      break;
    }
    case NodeKind::Mul: s = print(e->a, 2) + "*" + print(e->b, 3); break;
    case NodeKind::Div: s = print(e->a, 2) + "/" + print(e->b, 3); break;
    case NodeKind::Pow: s = print(e->a, 4) + "^" + std::to_string(e->exponent); break;
    case NodeKind::Neg: s = "-" + print(e->a, 3); break;
    case NodeKind::Sin: s = "sin(" + print(e->a, 0) + ")"; break;
    case NodeKind::Cos: s = "cos(" + print(e->a, 0) + ")"; break;
    case NodeKind::Exp: s = "exp(" + print(e->a, 0) + ")"; break;
    case NodeKind::Ln: s = "ln(" + print(e->a, 0) + ")"; break;
    case NodeKind::Sqrt: s = "sqrt(" + print(e->a, 0) + ")"; break;
    case NodeKind::Abs: s = "abs(" + print(e->a, 0) + ")"; break;
    case NodeKind::DelConst: s = "del"; break;
    case NodeKind::InfConst: s = "inf"; break;
    case NodeKind::AltSign: s = "(+-)" + print(e->a, 3); break;
    case NodeKind::AltSignNeg: s = "(-+)" + print(e->a, 3); break;
    case NodeKind::TruncTag: {
      int m = e->exponent;
      if (m == 0) s = "O(1)";
      else if (m > 0) s = "O(del" + (m == 1 ? std::string() : "^" + std::to_string(m)) + ")";
      else s = "O(inf" + (m == -1 ? std::string() : "^" + std::to_string(-m)) + ")";
      break;
    }
  }
  if (prec < parent_prec) return "(" + s + ")";
  return s;
}

}  // namespace

std::string to_string(const ExprPtr& e) { return print(e, 0); }

// ---------------------------------------------------------------------------
// Structure queries

namespace {
template <typename Pred>
bool any_node(const ExprPtr& e, Pred p) {
  if (!e) return false;
  if (p(e)) return true;
  return any_node(e->a, p) || any_node(e->b, p);
}
}  // namespace

bool depends_on_variable(const ExprPtr& e) {
  return any_node(e, [](const ExprPtr& n) { return n->kind == NodeKind::Variable; });
}

bool contains_abs(const ExprPtr& e) {
  return any_node(e, [](const ExprPtr& n) { return n->kind == NodeKind::Abs; });
}

bool contains_virtual_literal(const ExprPtr& e) {
  return any_node(e, [](const ExprPtr& n) {
    switch (n->kind) {
      case NodeKind::DelConst:
      case NodeKind::InfConst:
      case NodeKind::AltSign:
      case NodeKind::AltSignNeg:
      case NodeKind::TruncTag: return true;
      default: return false;
    }
  });
}

ExprPtr compose(const ExprPtr& f, const ExprPtr& g) {
  if (!f) return f;
  if (f->kind == NodeKind::Variable) return g;
  if (!f->a && !f->b) return f;
  ExprPtr a = f->a ? compose(f->a, g) : nullptr;
  ExprPtr b = f->b ? compose(f->b, g) : nullptr;
  return make_node(f->kind, f->value, f->exponent, std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Real evaluation

double eval_real(const ExprPtr& e, double x) {
  switch (e->kind) {
    case NodeKind::Constant: return e->value.to_double();
    case NodeKind::Variable: return x;
    case NodeKind::Add: return eval_real(e->a, x) + eval_real(e->b, x);
    case NodeKind::Mul: return eval_real(e->a, x) * eval_real(e->b, x);
    case NodeKind::Div: {
      double d = eval_real(e->b, x);
      if (d == 0.0) throw DomainError("division by zero");
      return eval_real(e->a, x) / d;
    }
    case NodeKind::Pow: {
      double b = eval_real(e->a, x);
      if (b == 0.0 && e->exponent < 0) throw DomainError("zero to a negative power");
      return std::pow(b, e->exponent);
    }
    case NodeKind::Neg: return -eval_real(e->a, x);
    case NodeKind::Sin: return std::sin(eval_real(e->a, x));
    case NodeKind::Cos: return std::cos(eval_real(e->a, x));
    case NodeKind::Exp: return std::exp(eval_real(e->a, x));
    case NodeKind::Ln: {
      double v = eval_real(e->a, x);
      if (v <= 0.0) throw DomainError("ln of a non-positive value");
      return std::log(v);
    }
    case NodeKind::Sqrt: {
      double v = eval_real(e->a, x);
      if (v < 0.0) throw DomainError("sqrt of a negative value");
      return std::sqrt(v);
    }
    case NodeKind::Abs: return std::fabs(eval_real(e->a, x));
    default:
      throw VirtualOnlyError("virtual literal in a real-only evaluation");
  }
}

Scalar eval_scalar(const ExprPtr& e, const Scalar& x) {
  switch (e->kind) {
    case NodeKind::Constant: return e->value;
    case NodeKind::Variable: return x;
    case NodeKind::Add: return eval_scalar(e->a, x) + eval_scalar(e->b, x);
    case NodeKind::Mul: return eval_scalar(e->a, x) * eval_scalar(e->b, x);
    case NodeKind::Div: {
      Scalar d = eval_scalar(e->b, x);
      if (d.is_zero()) throw DomainError("division by zero");
      return eval_scalar(e->a, x) / d;
    }
    case NodeKind::Pow: {
      Scalar b = eval_scalar(e->a, x);
      if (b.is_zero() && e->exponent < 0) throw DomainError("zero to a negative power");
      return b.pow(e->exponent);
    }
    case NodeKind::Neg: return -eval_scalar(e->a, x);
    case NodeKind::Sin: {
      Scalar v = eval_scalar(e->a, x);
      if (v.is_zero() && v.is_exact()) return Scalar(0);
      return Scalar::approx(std::sin(v.to_double()));
    }
    case NodeKind::Cos: {
      Scalar v = eval_scalar(e->a, x);
      if (v.is_zero() && v.is_exact()) return Scalar(1);
      return Scalar::approx(std::cos(v.to_double()));
    }
    case NodeKind::Exp: {
      Scalar v = eval_scalar(e->a, x);
      if (v.is_zero() && v.is_exact()) return Scalar(1);
      return Scalar::approx(std::exp(v.to_double()));
    }
    case NodeKind::Ln: {
      Scalar v = eval_scalar(e->a, x);
      if (v.sign() <= 0) throw DomainError("ln of a non-positive value");
      if (v.is_exact() && v.rational().is_one()) return Scalar(0);
      return Scalar::approx(std::log(v.to_double()));
    }
    case NodeKind::Sqrt: {
      Scalar v = eval_scalar(e->a, x);
      if (v.sign() < 0) throw DomainError("sqrt of a negative value");
      if (v.is_exact())
        if (auto root = v.rational().exact_sqrt()) return Scalar(*root);
      return Scalar::approx(std::sqrt(v.to_double()));
    }
    case NodeKind::Abs: return eval_scalar(e->a, x).abs();
    default:
      throw VirtualOnlyError("virtual literal in a real-only evaluation");
  }
}

// ---------------------------------------------------------------------------
// Symbolic differentiation

ExprPtr diff_expr(const ExprPtr& e) {
  switch (e->kind) {
    case NodeKind::Constant: return Expr::constant(Scalar(0));
    case NodeKind::Variable: return Expr::constant(Scalar(1));
    case NodeKind::Add: return Expr::add(diff_expr(e->a), diff_expr(e->b));
    case NodeKind::Mul:
      return Expr::add(Expr::mul(diff_expr(e->a), e->b), Expr::mul(e->a, diff_expr(e->b)));
    case NodeKind::Div:
      return Expr::div(
          Expr::sub(Expr::mul(diff_expr(e->a), e->b), Expr::mul(e->a, diff_expr(e->b))),
          Expr::pow(e->b, 2));
    case NodeKind::Pow:
      return Expr::mul(Expr::mul(Expr::constant(Scalar(e->exponent)),
                                 Expr::pow(e->a, e->exponent - 1)),
                       diff_expr(e->a));
    case NodeKind::Neg: return Expr::neg(diff_expr(e->a));
    case NodeKind::Sin: return Expr::mul(Expr::cos(e->a), diff_expr(e->a));
    case NodeKind::Cos: return Expr::neg(Expr::mul(Expr::sin(e->a), diff_expr(e->a)));
    case NodeKind::Exp: return Expr::mul(Expr::exp(e->a), diff_expr(e->a));
    case NodeKind::Ln: return Expr::div(diff_expr(e->a), e->a);
    case NodeKind::Sqrt:
      return Expr::div(diff_expr(e->a),
                       Expr::mul(Expr::constant(Scalar(2)), Expr::sqrt(e->a)));
    case NodeKind::Abs:
      throw NonSmoothError("abs is not differentiable at 0");
    default:
      throw VirtualOnlyError("cannot differentiate a virtual literal");
  }
}

}  // namespace vc
