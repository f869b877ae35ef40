#pragma once

#include <random>
#include <string>
#include <vector>

#include "vcalc/virtual_number.hpp"

namespace vc {

// Named check suites running the engine's propositions as randomized
// property tests: closure laws of finitude, preservation laws of proximity,
// the confront theorem, continuity closure, the derivation rules, relative
// finitude, the FTC negligibility statement, and the geometry formulas
// (including the two wrong formulas, which must fail).

struct PropResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample rendering on failure
};

struct SuiteResult {
  std::string suite;
  std::vector<PropResult> results;
  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

const std::vector<std::string>& prop_suite_names();

// Throws UnknownSuiteError for names not in prop_suite_names().
SuiteResult run_prop_suite(const std::string& name, const Settings& s = {},
                           int instances = 200);

std::vector<SuiteResult> run_all_prop_suites(const Settings& s = {}, int instances = 200);

// Random series-tier values for property tests. Deterministic per seed.
class ValueGen {
 public:
  explicit ValueGen(std::uint64_t seed) : rng_(seed) {}

  Rational small_rational(bool nonzero = false);
  Scalar coeff(bool nonzero = false);
  LaurentPolynomial poly(int vmin, int vmax, int max_terms, bool lead_positive = false);

  VirtualNumber infinitesimal();          // valuation >= 1, nonzero
  VirtualNumber finite();                 // valuation >= 0
  VirtualNumber infinite();               // some branch valuation < 0, both infinite
  VirtualNumber above_reals();            // > R
  VirtualNumber below_reals();            // < R
  VirtualNumber invertible_infinitesimal();
  VirtualNumber any();

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace vc
