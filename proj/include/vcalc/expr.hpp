#pragma once

#include <memory>
#include <string>

#include "vcalc/virtual_number.hpp"

namespace vc {

// Expression tree over the elementary real functions, plus the virtual-only
// literals of the CLI language (inf, del, (+-), (-+), O(...)). Trees are
// immutable and shared; smart constructors fold constants and drop trivial
// units so symbolic derivatives stay readable.
//
// Grammar (parse_expr):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' integer)?
//   base   := number | 'x' | 'pi' | 'e' | 'inf' | 'del'
//           | '(+-)' factor | '(-+)' factor
//           | func '(' expr ')' | '(' expr ')' | 'O' '(' order ')'
//   func   := sin | cos | exp | ln | sqrt | abs

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class NodeKind {
  Constant,
  Variable,
  Add,
  Mul,
  Div,
  Pow,
  Neg,
  Sin,
  Cos,
  Exp,
  Ln,
  Sqrt,
  Abs,
  DelConst,
  InfConst,
  AltSign,     // (+-)
  AltSignNeg,  // (-+)
  TruncTag,    // O(del^k): zero known only up to order k-1
};

class Expr {
 public:
  NodeKind kind;
  Scalar value;      // Constant
  int exponent = 0;  // Pow; TruncTag order
  ExprPtr a, b;

  static ExprPtr constant(Scalar c);
  static ExprPtr variable();
  static ExprPtr pi();
  static ExprPtr euler();
  static ExprPtr add(ExprPtr l, ExprPtr r);
  static ExprPtr sub(ExprPtr l, ExprPtr r);
  static ExprPtr mul(ExprPtr l, ExprPtr r);
  static ExprPtr div(ExprPtr l, ExprPtr r);
  static ExprPtr pow(ExprPtr base, int k);
  static ExprPtr neg(ExprPtr e);
  static ExprPtr sin(ExprPtr e);
  static ExprPtr cos(ExprPtr e);
  static ExprPtr exp(ExprPtr e);
  static ExprPtr ln(ExprPtr e);
  static ExprPtr sqrt(ExprPtr e);
  static ExprPtr abs(ExprPtr e);
  static ExprPtr del();
  static ExprPtr inf();
  static ExprPtr alt_sign(ExprPtr e);
  static ExprPtr alt_sign_neg(ExprPtr e);
  static ExprPtr trunc_tag(int order);

 private:
  friend ExprPtr make_node(NodeKind k, Scalar v, int e, ExprPtr a, ExprPtr b);
  Expr(NodeKind k, Scalar v, int e, ExprPtr a_, ExprPtr b_)
      : kind(k), value(std::move(v)), exponent(e), a(std::move(a_)), b(std::move(b_)) {}
};

// Throws ParseError / UnknownIdentifierError with the offending position.
ExprPtr parse_expr(const std::string& text);

std::string to_string(const ExprPtr& e);

bool depends_on_variable(const ExprPtr& e);
bool contains_abs(const ExprPtr& e);
bool contains_virtual_literal(const ExprPtr& e);

// Substitute g for the variable in f.
ExprPtr compose(const ExprPtr& f, const ExprPtr& g);

// Standard elementary evaluation; DomainError on guard violations
// (division by zero, ln of non-positive, sqrt of negative),
// VirtualOnlyError when a virtual literal reaches this path.
double eval_real(const ExprPtr& e, double x);

// Scalar-aware evaluation: rational data stays exact through ring
// operations and at the exact special points (sin 0, cos 0, exp 0, ln 1,
// sqrt of a perfect square); everything else becomes approximate.
Scalar eval_scalar(const ExprPtr& e, const Scalar& x);

// Symbolic derivative; NonSmoothError on abs, VirtualOnlyError on
// virtual literals.
ExprPtr diff_expr(const ExprPtr& e);

// Virtual extension applied at a virtual argument. Series arguments lift
// elementary nodes through truncated Taylor expansions about the propagated
// center (with even-power factorization for sqrt of infinite arguments);
// nodes that have no Laurent form fall back to the sequence tier.
VirtualNumber extend_apply(const ExprPtr& f, const VirtualNumber& x, const Settings& s = {});

// Evaluate a ground (variable-free) expression to a virtual number.
VirtualNumber eval_virtual(const ExprPtr& e, const Settings& s = {});

// Parse + eval_virtual: the reader side of the normal-form round trip.
VirtualNumber parse_virtual(const std::string& text, const Settings& s = {});

}  // namespace vc
