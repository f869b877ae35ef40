#pragma once

#include <optional>
#include <string>
#include <utility>

#include "vcalc/virtual_number.hpp"

namespace vc {

// Relative finitude: order-of O(alpha), negligibility <<, and leading-order
// comparison of infinitesimals and infinites by direct quotient
// classification.

struct OrderProfile {
  std::optional<int> val_even, val_odd;  // nullopt only for a zero branch
  std::pair<Scalar, Scalar> leading_coeffs;
};

// beta in O(alpha): the quotient beta/alpha is finite.
// Throws NotInvertibleError unless alpha neq-bar 0 holds.
Verdict in_order_of(const VirtualNumber& beta, const VirtualNumber& alpha,
                    const Settings& s = {});

// gamma << alpha: the quotient gamma/alpha is infinitesimal.
Verdict negligible(const VirtualNumber& gamma, const VirtualNumber& alpha,
                   const Settings& s = {});

// Per-branch valuation and leading coefficient; series tier only.
OrderProfile leading_order(const VirtualNumber& a);

enum class MagnitudeOrder { Smaller, SameOrder, Larger, Incomparable };

std::string to_string(MagnitudeOrder m);

struct MagnitudeComparison {
  MagnitudeOrder order = MagnitudeOrder::Incomparable;
  Verdict verdict;
};

// Leading-order comparison: Smaller iff eps << delta, Larger iff delta << eps,
// SameOrder iff each is of the order of the other; Incomparable otherwise
// (e.g. oscillating quotients).
MagnitudeComparison compare_magnitude(const VirtualNumber& eps, const VirtualNumber& delta,
                                      const Settings& s = {});

}  // namespace vc
