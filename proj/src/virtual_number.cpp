#include "vcalc/virtual_number.hpp"

#include <cmath>

#include "vcalc/errors.hpp"

namespace vc {

VirtualNumber VirtualNumber::from_scalar(Scalar c) {
  return series(LaurentPolynomial::constant(std::move(c)));
}

VirtualNumber VirtualNumber::inf() {
  return series(LaurentPolynomial::monomial(-1, Scalar(1)));
}

VirtualNumber VirtualNumber::del() {
  return series(LaurentPolynomial::monomial(1, Scalar(1)));
}

VirtualNumber VirtualNumber::series(LaurentPolynomial both) {
  VirtualNumber v;
  v.rep_ = SeriesRep{both, both};
  return v;
}

VirtualNumber VirtualNumber::series(LaurentPolynomial even, LaurentPolynomial odd) {
  VirtualNumber v;
  v.rep_ = SeriesRep{std::move(even), std::move(odd)};
  return v;
}

VirtualNumber VirtualNumber::sequence(SequenceGen gen) {
  VirtualNumber v;
  v.rep_ = std::move(gen);
  return v;
}

bool VirtualNumber::parity_split() const {
  if (!is_series()) return false;
  return !LaurentPolynomial::known_equal(even_branch(), odd_branch());
}

double VirtualNumber::sample(long long n) const {
  if (is_series()) {
    const auto& branch = (n % 2 == 0) ? even_branch() : odd_branch();
    return branch.eval_at_index(n);
  }
  return gen().rule(n);
}

SequenceGen VirtualNumber::to_seq() const {
  if (is_seq()) return gen();
  VirtualNumber copy = *this;
  return SequenceGen{[copy](long long n) { return copy.sample(n); }, describe()};
}

std::string VirtualNumber::describe() const {
  return is_series() ? normal_form(*this) : "seq:" + gen().description;
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

using Branches = VirtualNumber::SeriesRep;

VirtualNumber binary_op(const VirtualNumber& a, const VirtualNumber& b,
                        LaurentPolynomial (*op)(const LaurentPolynomial&,
                                                const LaurentPolynomial&),
                        double (*fop)(double, double), const char* sym) {
  if (a.is_series() && b.is_series()) {
    return VirtualNumber::series(op(a.even_branch(), b.even_branch()),
                                 op(a.odd_branch(), b.odd_branch()));
  }
  SequenceGen ga = a.to_seq(), gb = b.to_seq();
  std::string d = "(" + ga.description + " " + sym + " " + gb.description + ")";
  return VirtualNumber::sequence(
      {[ga, gb, fop](long long n) { return fop(ga.rule(n), gb.rule(n)); }, d});
}

}  // namespace

VirtualNumber operator+(const VirtualNumber& a, const VirtualNumber& b) {
  return binary_op(
      a, b, +[](const LaurentPolynomial& x, const LaurentPolynomial& y) { return x + y; },
      +[](double x, double y) { return x + y; }, "+");
}

VirtualNumber operator-(const VirtualNumber& a) {
  if (a.is_series()) return VirtualNumber::series(-a.even_branch(), -a.odd_branch());
  SequenceGen g = a.to_seq();
  return VirtualNumber::sequence(
      {[g](long long n) { return -g.rule(n); }, "(-" + g.description + ")"});
}

VirtualNumber operator-(const VirtualNumber& a, const VirtualNumber& b) {
  return binary_op(
      a, b, +[](const LaurentPolynomial& x, const LaurentPolynomial& y) { return x - y; },
      +[](double x, double y) { return x - y; }, "-");
}

VirtualNumber operator*(const VirtualNumber& a, const VirtualNumber& b) {
  return binary_op(
      a, b, +[](const LaurentPolynomial& x, const LaurentPolynomial& y) { return x * y; },
      +[](double x, double y) { return x * y; }, "*");
}

VirtualNumber alternate_sign(const VirtualNumber& a) {
  if (a.is_series()) return VirtualNumber::series(a.even_branch(), -a.odd_branch());
  SequenceGen g = a.to_seq();
  return VirtualNumber::sequence({[g](long long n) { return n % 2 ? -g.rule(n) : g.rule(n); },
                                  "(+-)" + g.description});
}

VirtualNumber alternate_sign_neg(const VirtualNumber& a) { return -alternate_sign(a); }

VirtualNumber inv(const VirtualNumber& a, const Settings& s) {
  if (a.is_series()) {
    return VirtualNumber::series(a.even_branch().inverse(s.trunc),
                                 a.odd_branch().inverse(s.trunc));
  }
  SequenceGen g = a.to_seq();
  return VirtualNumber::sequence({[g](long long n) {
                                    double v = g.rule(n);
                                    if (v == 0.0) throw PointwiseZeroError(n);
                                    return 1.0 / v;
                                  },
                                  "(1/" + g.description + ")"});
}

VirtualNumber div(const VirtualNumber& a, const VirtualNumber& b, const Settings& s) {
  if (a.is_series() && b.is_series()) return a * inv(b, s);
  SequenceGen ga = a.to_seq(), gb = b.to_seq();
  return VirtualNumber::sequence(
      {[ga, gb](long long n) {
         double d = gb.rule(n);
         if (d == 0.0) throw PointwiseZeroError(n);
         return ga.rule(n) / d;
       },
       "(" + ga.description + " / " + gb.description + ")"});
}

VirtualNumber pow(const VirtualNumber& a, int k, const Settings& s) {
  if (a.is_series()) {
    return VirtualNumber::series(a.even_branch().pow(k, s.trunc),
                                 a.odd_branch().pow(k, s.trunc));
  }
  SequenceGen g = a.to_seq();
  return VirtualNumber::sequence(
      {[g, k](long long n) {
         double v = g.rule(n);
         if (v == 0.0 && k < 0) throw PointwiseZeroError(n);
         return std::pow(v, k);
       },
       "(" + g.description + ")^" + std::to_string(k)});
}

// ---------------------------------------------------------------------------
// Extended relations

namespace {

// Eventual outcome of "rel holds pointwise" on one series branch pair.
bool branch_eventually(ExtRelation rel, const LaurentPolynomial& x,
                       const LaurentPolynomial& y, const LaurentPolynomial* z) {
  switch (rel) {
    case ExtRelation::Eq:
      return (x - y).eventual_sign() == 0;
    case ExtRelation::Neq:
      return (x - y).eventual_sign() != 0;
    case ExtRelation::Lt:
      return (x - y).eventual_sign() < 0;
    case ExtRelation::Le:
      return (x - y).eventual_sign() <= 0;
    case ExtRelation::Between: {
      // y between x and z  <=>  (y-x)(z-y) >= 0 eventually
      LaurentPolynomial p = (y - x) * (*z - y);
      return p.eventual_sign() >= 0;
    }
  }
  return false;
}

bool pointwise_holds(ExtRelation rel, double x, double y, const double* z) {
  auto nearly_eq = [](double u, double v) {
    return std::fabs(u - v) <= kScalarTol * std::max({1.0, std::fabs(u), std::fabs(v)});
  };
  switch (rel) {
    case ExtRelation::Eq:
      return nearly_eq(x, y);
    case ExtRelation::Neq:
      return !nearly_eq(x, y);
    case ExtRelation::Lt:
      return x < y && !nearly_eq(x, y);
    case ExtRelation::Le:
      return x < y || nearly_eq(x, y);
    case ExtRelation::Between: {
      double p = (y - x) * (*z - y);
      double scale = std::max({1.0, x * x, y * y, z ? *z * *z : 1.0});
      return p >= -kScalarTol * scale;
    }
  }
  return false;
}

constexpr int kTailRun = 6;

}  // namespace

Verdict rel_ext(ExtRelation rel, const std::vector<VirtualNumber>& args, const Settings& s) {
  const std::size_t arity = rel == ExtRelation::Between ? 3 : 2;
  if (args.size() != arity) throw Error("rel_ext: arity mismatch");

  bool all_series = true;
  for (const auto& a : args) all_series = all_series && a.is_series();

  if (all_series) {
    // Decided exactly: both parity branches must eventually satisfy the
    // relation for Holds; any branch that eventually violates it gives
    // infinitely many failing indices, hence Fails.
    const LaurentPolynomial* ze = arity == 3 ? &args[2].even_branch() : nullptr;
    const LaurentPolynomial* zo = arity == 3 ? &args[2].odd_branch() : nullptr;
    bool even_ok, odd_ok;
    if (rel == ExtRelation::Between) {
      even_ok = branch_eventually(rel, args[0].even_branch(), args[1].even_branch(), ze);
      odd_ok = branch_eventually(rel, args[0].odd_branch(), args[1].odd_branch(), zo);
    } else {
      even_ok = branch_eventually(rel, args[0].even_branch(), args[1].even_branch(), nullptr);
      odd_ok = branch_eventually(rel, args[0].odd_branch(), args[1].odd_branch(), nullptr);
    }
    return even_ok && odd_ok ? Verdict::holds(0) : Verdict::fails(0);
  }

  // Sequence tier: sample the schedule. Early failures are irrelevant for
  // eventually-true semantics; only the tail is conclusive.
  std::vector<SequenceGen> gens;
  gens.reserve(args.size());
  for (const auto& a : args) gens.push_back(a.to_seq());
  const auto schedule = s.schedule();
  std::vector<bool> ok;
  ok.reserve(schedule.size());
  std::optional<long long> last_fail;
  for (long long n : schedule) {
    double x = gens[0].rule(n);
    double y = gens[1].rule(n);
    double z = arity == 3 ? gens[2].rule(n) : 0.0;
    bool h;
    if (rel == ExtRelation::Between)
      h = pointwise_holds(rel, x, y, &z);
    else
      h = pointwise_holds(rel, x, y, nullptr);
    ok.push_back(h);
    if (!h) last_fail = n;
  }
  const long long depth = schedule.back();
  if (!last_fail) return Verdict::holds(depth);

  int hold_run = 0;
  for (auto it = ok.rbegin(); it != ok.rend() && *it; ++it) ++hold_run;
  if (hold_run >= kTailRun) return Verdict::holds(depth);
  int fail_run = 0;
  for (auto it = ok.rbegin(); it != ok.rend() && !*it; ++it) ++fail_run;
  if (fail_run >= kTailRun) return Verdict::fails(depth, last_fail);
  return Verdict::unknown(depth, last_fail);
}

// ---------------------------------------------------------------------------
// Normal form

namespace {

std::string exponent_base(int k) {
  if (k == 1) return "del";
  if (k > 1) return "del^" + std::to_string(k);
  if (k == -1) return "inf";
  return "inf^" + std::to_string(-k);
}

// Renders |c| * del^k, assuming c != 0; the sign is handled by the caller.
std::string term_string(int k, const Scalar& c) {
  Scalar a = c.abs();
  if (k == 0) return a.to_string();
  std::string base = exponent_base(k);
  if (a.is_exact()) {
    const Rational& r = a.rational();
    std::string num = r.num_string();
    std::string den = r.den_string();
    std::string out = num == "1" ? base : num + "*" + base;
    if (den != "1") out += "/" + den;
    return out;
  }
  if (a.to_double() == 1.0) return base;
  return a.to_string() + "*" + base;
}

std::string trunc_marker(int trunc) {
  int m = trunc + 1;
  if (m > 0) return "O(" + exponent_base(m) + ")";
  if (m == 0) return "O(1)";
  return "O(" + exponent_base(m) + ")";
}

struct Piece {
  bool negative;
  std::string text;
};

void append_pieces(const LaurentPolynomial& p, std::vector<Piece>& out) {
  for (const auto& [k, c] : p.terms()) out.push_back({c.sign() < 0, term_string(k, c)});
}

std::string assemble(std::vector<Piece> pieces) {
  if (pieces.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0)
      s += pieces[i].negative ? "-" : "";
    else
      s += pieces[i].negative ? " - " : " + ";
    s += pieces[i].text;
  }
  return s;
}

}  // namespace

std::string normal_form(const VirtualNumber& v) {
  if (v.is_seq()) return "seq:" + v.gen().description;
  const auto& e = v.even_branch();
  const auto& o = v.odd_branch();
  const Scalar half(Rational(1, 2));
  LaurentPolynomial common = (e + o).scaled(half);
  LaurentPolynomial alternating = (e - o).scaled(half);

  std::vector<Piece> pieces;
  append_pieces(common, pieces);

  if (!alternating.known_zero()) {
    const auto& terms = alternating.terms();
    if (terms.size() == 1) {
      const auto& [k, c] = *terms.begin();
      // A single alternating term renders with its sign folded into the
      // operator: +c -> (+-), -c -> (-+).
      pieces.push_back({false, std::string(c.sign() < 0 ? "(-+)" : "(+-)") + term_string(k, c)});
    } else {
      std::vector<Piece> inner;
      append_pieces(alternating, inner);
      pieces.push_back({false, "(+-)(" + assemble(inner) + ")"});
    }
  }

  std::optional<int> t = e.trunc();
  if (o.trunc() && (!t || *o.trunc() < *t)) t = o.trunc();
  std::string s = assemble(pieces);
  if (t) {
    if (s == "0")
      s = trunc_marker(*t);
    else
      s += " + " + trunc_marker(*t);
  }
  return s;
}

}  // namespace vc
