#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "vcalc/laurent.hpp"
#include "vcalc/settings.hpp"
#include "vcalc/verdict.hpp"

namespace vc {

// Deterministic index -> value rule (index >= 1). Rules must be pure: the
// same index always yields the same value.
struct SequenceGen {
  std::function<double(long long)> rule;
  std::string description;
};

// A virtual number: an element of the extension of the reals built from
// real sequences identified up to eventual agreement. Two carriers:
//   - Series: a pair of Laurent polynomials in del = <1, 1/2, 1/3, ...>,
//     one for even indices and one for odd (equal branches for parity-free
//     values). Everything here is decided exactly.
//   - Seq: a sampled sequence rule; relations on this tier are semidecided
//     on a sampling schedule.
// Mixed arithmetic coerces Series -> Seq, never the other way.
class VirtualNumber {
 public:
  struct SeriesRep {
    LaurentPolynomial even, odd;
  };

  VirtualNumber() : rep_(SeriesRep{}) {}

  static VirtualNumber from_scalar(Scalar c);
  static VirtualNumber real(long long n) { return from_scalar(Scalar(n)); }
  static VirtualNumber inf();  // class of <1, 2, 3, ...>, i.e. del^{-1}
  static VirtualNumber del();  // class of <1, 1/2, 1/3, ...>
  static VirtualNumber series(LaurentPolynomial both);
  static VirtualNumber series(LaurentPolynomial even, LaurentPolynomial odd);
  static VirtualNumber sequence(SequenceGen gen);

  bool is_series() const { return std::holds_alternative<SeriesRep>(rep_); }
  bool is_seq() const { return !is_series(); }
  const SeriesRep& series_rep() const { return std::get<SeriesRep>(rep_); }
  const LaurentPolynomial& even_branch() const { return series_rep().even; }
  const LaurentPolynomial& odd_branch() const { return series_rep().odd; }
  const SequenceGen& gen() const { return std::get<SequenceGen>(rep_); }
  bool parity_split() const;  // series with branches that differ in known terms

  // Value of the representative sequence at index n (parity branch, del = 1/n).
  double sample(long long n) const;
  SequenceGen to_seq() const;

  std::string describe() const;

 private:
  std::variant<SeriesRep, SequenceGen> rep_;
};

VirtualNumber operator+(const VirtualNumber& a, const VirtualNumber& b);
VirtualNumber operator-(const VirtualNumber& a);
VirtualNumber operator-(const VirtualNumber& a, const VirtualNumber& b);
VirtualNumber operator*(const VirtualNumber& a, const VirtualNumber& b);

// (+-)a: values at odd indices negated, even kept. An involution.
VirtualNumber alternate_sign(const VirtualNumber& a);
// (-+)a = -((+-)a)
VirtualNumber alternate_sign_neg(const VirtualNumber& a);

// Multiplicative inverse. Series: throws NotInvertibleError when a branch is
// zero up to truncation. Seq: applied pointwise; sampling an exactly-zero
// value throws PointwiseZeroError.
VirtualNumber inv(const VirtualNumber& a, const Settings& s = {});
VirtualNumber div(const VirtualNumber& a, const VirtualNumber& b, const Settings& s = {});

VirtualNumber pow(const VirtualNumber& a, int k, const Settings& s = {});

enum class ExtRelation { Eq, Neq, Lt, Le, Between };

// Extended ("barred") relations, with eventually-true semantics: the verdict
// Holds iff the pointwise real relation holds at all but finitely many
// indices. Series tier decides exactly per branch (depth 0); the sequence
// tier samples the schedule and may return UnknownAtDepth.
// Between is ternary with the middle value second: rel_ext(Between, a, b, c)
// asks whether b is between a and c.
Verdict rel_ext(ExtRelation rel, const std::vector<VirtualNumber>& args,
                const Settings& s = {});

// Textual normal form for series values, e.g. "inf^2 + 2 + del^2",
// "10 + del", "(+-)1", "del - del^3/6 + O(del^5)". Round-trips through
// parse_virtual(). Sequence-tier values render as "seq:<description>".
std::string normal_form(const VirtualNumber& v);

}  // namespace vc
