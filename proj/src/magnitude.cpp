#include "vcalc/magnitude.hpp"

#include "vcalc/classify.hpp"
#include "vcalc/errors.hpp"

namespace vc {

namespace {
void require_invertible(const VirtualNumber& alpha, const Settings& s) {
  if (!rel_ext(ExtRelation::Neq, {alpha, VirtualNumber::real(0)}, s).is_holds())
    throw NotInvertibleError("order comparison against a non-invertible value");
}
}  // namespace

Verdict in_order_of(const VirtualNumber& beta, const VirtualNumber& alpha, const Settings& s) {
  require_invertible(alpha, s);
  return is_finite(div(beta, alpha, s), s);
}

Verdict negligible(const VirtualNumber& gamma, const VirtualNumber& alpha, const Settings& s) {
  require_invertible(alpha, s);
  return is_infinitesimal(div(gamma, alpha, s), s);
}

OrderProfile leading_order(const VirtualNumber& a) {
  if (!a.is_series()) throw Error("leading_order requires a series-tier value");
  OrderProfile p;
  p.val_even = a.even_branch().valuation();
  p.val_odd = a.odd_branch().valuation();
  p.leading_coeffs = {a.even_branch().leading_coeff(), a.odd_branch().leading_coeff()};
  return p;
}

std::string to_string(MagnitudeOrder m) {
  switch (m) {
    case MagnitudeOrder::Smaller: return "Smaller";
    case MagnitudeOrder::SameOrder: return "SameOrder";
    case MagnitudeOrder::Larger: return "Larger";
    default: return "Incomparable";
  }
}

MagnitudeComparison compare_magnitude(const VirtualNumber& eps, const VirtualNumber& delta,
                                      const Settings& s) {
  Verdict small = negligible(eps, delta, s);
  if (small.is_holds()) return {MagnitudeOrder::Smaller, small};
  Verdict large = negligible(delta, eps, s);
  if (large.is_holds()) return {MagnitudeOrder::Larger, large};
  Verdict fwd = in_order_of(eps, delta, s);
  Verdict bwd = in_order_of(delta, eps, s);
  if (fwd.is_holds() && bwd.is_holds()) return {MagnitudeOrder::SameOrder, conj(fwd, bwd)};
  if (small.is_fails() && large.is_fails() && (fwd.is_fails() || bwd.is_fails())) {
    long long d = std::max({small.depth, large.depth, fwd.depth, bwd.depth});
    return {MagnitudeOrder::Incomparable, Verdict::holds(d)};
  }
  long long d = std::max({small.depth, large.depth, fwd.depth, bwd.depth});
  return {MagnitudeOrder::Incomparable, Verdict::unknown(d)};
}

}  // namespace vc
