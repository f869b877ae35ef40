#pragma once

#include <string>
#include <vector>

namespace vc {

// Finite union of intervals of the real line with open/closed endpoints.
// Normalized on construction: components sorted, overlapping or touching
// components merged.
class IntervalSet {
 public:
  struct Interval {
    double lo, hi;         // -inf/+inf allowed
    bool lo_open, hi_open; // ignored on infinite ends
  };

  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> comps);

  static IntervalSet reals();
  static IntervalSet closed(double a, double b);
  static IntervalSet open(double a, double b);

  // "R", "[0,1]", "(-1,1)u(2,3)", "[0,inf)", "(-inf,0]".
  // Throws UnsupportedSetError on anything else.
  static IntervalSet parse(const std::string& text);

  const std::vector<Interval>& components() const { return comps_; }
  bool empty() const { return comps_.empty(); }

  bool contains(double x) const;
  // Some component contains (x, x+d) for small d > 0 — i.e. the set extends
  // to the right of x. Mirrored for left. Used for the virtual interior test
  // (membership of x +- del).
  bool extends_right_of(double x) const;
  bool extends_left_of(double x) const;

  std::string to_string() const;

 private:
  std::vector<Interval> comps_;
};

}  // namespace vc
