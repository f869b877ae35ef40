#pragma once

#include <optional>
#include <string>

#include "vcalc/interval_set.hpp"
#include "vcalc/virtual_number.hpp"

namespace vc {

// Absolute-finitude predicates, the proximity (~=) and neighbourliness (~)
// relations, standard part, and the interior-point predicate on the real
// line. Series-tier answers are exact; sequence-tier answers are calibrated
// heuristics with an explicit Unknown.

enum class FinitudeTag {
  Infinitesimal,
  FiniteNonInfinitesimal,
  InfiniteAboveR,
  InfiniteBelowR,
  InfiniteOscillating,
};

std::string to_string(FinitudeTag t);

struct FinitudeReport {
  std::optional<FinitudeTag> tag;
  Verdict verdict;  // confidence in the tag; depth 0 on the series tier
};

// |a| less than each positive real, eventually.
Verdict is_infinitesimal(const VirtualNumber& a, const Settings& s = {});
// |a| less than some real, eventually.
Verdict is_finite(const VirtualNumber& a, const Settings& s = {});
Verdict is_infinite(const VirtualNumber& a, const Settings& s = {});

enum class RealComparison { AboveR, BelowR, Neither };
struct RealComparisonReport {
  RealComparison cmp = RealComparison::Neither;
  Verdict verdict;
};
// a > R (above every real), a < R, or neither.
RealComparisonReport cmp_reals(const VirtualNumber& a, const Settings& s = {});

FinitudeReport classify_finitude(const VirtualNumber& a, const Settings& s = {});

// Proximity: a ~= b when a - b is infinitesimal.
Verdict near(const VirtualNumber& a, const VirtualNumber& b, const Settings& s = {});

// Neighbourliness: a ~ b when a ~= b and a neq-bar b.
Verdict neighbour(const VirtualNumber& a, const VirtualNumber& b, const Settings& s = {});

struct StandardPartResult {
  std::optional<Scalar> value;  // absent: no standard part (or undecided)
  Verdict verdict;              // Holds: value is it; Fails: provably none; Unknown
};
// The unique real infinitely close to the value, when there is one.
StandardPartResult standard_part(const VirtualNumber& a, const Settings& s = {});

// mid between lo and hi, in the extended ternary sense.
Verdict between(const VirtualNumber& mid, const VirtualNumber& lo, const VirtualNumber& hi,
                const Settings& s = {});

// Confront ("squeeze") instance: if beta is between alpha and gamma and
// alpha ~= gamma, then alpha ~= beta. Returns the verdict of the implication.
Verdict confront(const VirtualNumber& alpha, const VirtualNumber& beta,
                 const VirtualNumber& gamma, const Settings& s = {});

// x interior to B: every virtual infinitely close to x lies in B-bar.
// Decided for finite interval unions by membership of x and of x +- del.
Verdict is_interior_point(const Scalar& x, const IntervalSet& B);

}  // namespace vc
