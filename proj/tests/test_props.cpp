#include <doctest.h>

#include "vcalc/classify.hpp"
#include "vcalc/errors.hpp"
#include "vcalc/props.hpp"

using namespace vc;

namespace {
const Settings kS{};
// unit runs keep the randomized instance count moderate; the acceptance
// suite runs the full 200-instance sweep
constexpr int kInstances = 60;
}  // namespace

TEST_CASE("generators produce what they promise") {
  ValueGen g(42);
  for (int i = 0; i < 50; ++i) {
    CHECK(is_infinitesimal(g.infinitesimal(), kS).is_holds());
    CHECK(is_finite(g.finite(), kS).is_holds());
    CHECK(is_infinite(g.infinite(), kS).is_holds());
    CHECK(cmp_reals(g.above_reals(), kS).cmp == RealComparison::AboveR);
    CHECK(cmp_reals(g.below_reals(), kS).cmp == RealComparison::BelowR);
    VirtualNumber inv_inf = g.invertible_infinitesimal();
    CHECK(is_infinitesimal(inv_inf, kS).is_holds());
    CHECK(rel_ext(ExtRelation::Neq, {inv_inf, VirtualNumber::real(0)}, kS).is_holds());
  }
}

TEST_CASE("every suite passes") {
  for (const auto& name : prop_suite_names()) {
    SuiteResult r = run_prop_suite(name, kS, kInstances);
    for (const auto& p : r.results) {
      INFO(name << " / " << p.name << " : " << p.detail);
      CHECK(p.pass);
    }
  }
}

TEST_CASE("unknown suite is rejected") {
  CHECK_THROWS_AS(run_prop_suite("nope", kS, 5), UnknownSuiteError);
}

TEST_CASE("suite names are stable") {
  const auto& names = prop_suite_names();
  CHECK(names.size() == 8);
  CHECK(names[0] == "finitude");
  CHECK(names[1] == "proximity");
}
