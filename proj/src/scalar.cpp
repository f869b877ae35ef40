#include "vcalc/scalar.hpp"

#include <cstdio>
#include <cstdlib>

namespace vc {

// Shortest decimal form that round-trips the double.
static std::string format_double(double d) {
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, d);
    if (std::strtod(buf, nullptr) == d) break;
  }
  return std::string(buf);
}

std::string Scalar::to_string() const {
  if (is_exact()) return rational().to_string();
  return format_double(to_double());
}

}  // namespace vc
