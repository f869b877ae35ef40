#include "vcalc/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "vcalc/errors.hpp"

namespace vc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

IntervalSet::IntervalSet(std::vector<Interval> comps) {
  for (auto& c : comps) {
    if (std::isnan(c.lo) || std::isnan(c.hi) || c.lo > c.hi)
      throw UnsupportedSetError("malformed interval");
    if (c.lo == c.hi && (c.lo_open || c.hi_open)) continue;  // empty
    comps_.push_back(c);
  }
  std::sort(comps_.begin(), comps_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  // Merge overlapping or touching components ([0,1] u (1,2) covers 1).
  std::vector<Interval> merged;
  for (const auto& c : comps_) {
    if (!merged.empty()) {
      Interval& m = merged.back();
      bool joins = c.lo < m.hi || (c.lo == m.hi && (!c.lo_open || !m.hi_open));
      if (joins) {
        if (c.hi > m.hi || (c.hi == m.hi && !c.hi_open)) {
          m.hi = c.hi;
          m.hi_open = c.hi_open;
        }
        if (c.lo == m.lo && !c.lo_open) m.lo_open = false;
        continue;
      }
    }
    merged.push_back(c);
  }
  comps_ = std::move(merged);
}

IntervalSet IntervalSet::reals() { return IntervalSet({{-kInf, kInf, true, true}}); }
IntervalSet IntervalSet::closed(double a, double b) {
  return IntervalSet({{a, b, false, false}});
}
IntervalSet IntervalSet::open(double a, double b) { return IntervalSet({{a, b, true, true}}); }

bool IntervalSet::contains(double x) const {
  for (const auto& c : comps_) {
    bool lo_ok = c.lo == -kInf || (c.lo_open ? x > c.lo : x >= c.lo);
    bool hi_ok = c.hi == kInf || (c.hi_open ? x < c.hi : x <= c.hi);
    if (lo_ok && hi_ok) return true;
  }
  return false;
}

bool IntervalSet::extends_right_of(double x) const {
  for (const auto& c : comps_) {
    bool from = c.lo == -kInf || c.lo <= x;
    bool beyond = c.hi == kInf || x < c.hi;
    if (from && beyond) return true;
  }
  return false;
}

bool IntervalSet::extends_left_of(double x) const {
  for (const auto& c : comps_) {
    bool from = c.hi == kInf || c.hi >= x;
    bool beyond = c.lo == -kInf || c.lo < x;
    if (from && beyond) return true;
  }
  return false;
}

namespace {

double parse_endpoint(std::string tok) {
  auto strip = [](std::string& s) {
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
  };
  strip(tok);
  if (tok == "inf" || tok == "+inf") return kInf;
  if (tok == "-inf") return -kInf;
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw UnsupportedSetError("bad endpoint: " + tok);
    return v;
  } catch (const std::exception&) {
    throw UnsupportedSetError("bad endpoint: " + tok);
  }
}

IntervalSet::Interval parse_component(const std::string& part) {
  if (part.size() < 4) throw UnsupportedSetError("bad interval: " + part);
  char open_c = part.front(), close_c = part.back();
  if ((open_c != '[' && open_c != '(') || (close_c != ']' && close_c != ')'))
    throw UnsupportedSetError("bad interval brackets: " + part);
  std::string inner = part.substr(1, part.size() - 2);
  auto comma = inner.find(',');
  if (comma == std::string::npos) throw UnsupportedSetError("missing comma: " + part);
  double lo = parse_endpoint(inner.substr(0, comma));
  double hi = parse_endpoint(inner.substr(comma + 1));
  return {lo, hi, open_c == '(', close_c == ')'};
}

}  // namespace

IntervalSet IntervalSet::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s == "R" || s == "r") return reals();
  std::vector<Interval> comps;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t close = s.find_first_of(")]", pos);
    if (close == std::string::npos) throw UnsupportedSetError("unterminated interval: " + text);
    comps.push_back(parse_component(s.substr(pos, close - pos + 1)));
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != 'u' && s[pos] != 'U') throw UnsupportedSetError("expected union: " + text);
      ++pos;
    }
  }
  if (comps.empty()) throw UnsupportedSetError("empty set descriptor: " + text);
  return IntervalSet(std::move(comps));
}

std::string IntervalSet::to_string() const {
  if (comps_.size() == 1 && comps_[0].lo == -kInf && comps_[0].hi == kInf) return "R";
  std::ostringstream os;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    const auto& c = comps_[i];
    if (i) os << " u ";
    os << (c.lo_open ? '(' : '[');
    if (c.lo == -kInf)
      os << "-inf";
    else
      os << c.lo;
    os << ", ";
    if (c.hi == kInf)
      os << "inf";
    else
      os << c.hi;
    os << (c.hi_open ? ')' : ']');
  }
  return os.str();
}

}  // namespace vc
