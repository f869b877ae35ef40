#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace vc {

// Comparisons that touch an approximate (floating-point) scalar use this
// tolerance; exact rationals always compare exactly.
inline constexpr double kScalarTol = 1e-12;

struct Settings {
  int trunc = 16;        // series truncation order T: exponents > T are absorbed into O(del^{T+1})
  int depth = 14;        // schedule exponent K: sample indices up to 2^K
  double tol = 1e-9;     // agreement tolerance for reports (probe consensus, oracles)
  std::uint64_t seed = 7;

  // Sampling schedule: 2^k for k = 0..depth, plus the odd neighbours 2^k+1
  // for the 8 largest k. Geometric growth probes "eventually" cheaply; the
  // odd points cover both parity branches.
  std::vector<long long> schedule() const {
    std::vector<long long> s;
    for (int k = 0; k <= depth; ++k) {
      long long n = 1LL << k;
      s.push_back(n);
      if (k >= 1 && k >= depth - 7) s.push_back(n + 1);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }
};

}  // namespace vc
