#pragma once

#include <iostream>
#include <string>
#include <vector>

#include "vcalc/settings.hpp"

namespace vc::cli {

// One-shot command dispatch. Exit code 0 = ok, 1 = a verdict came back
// Fails, 2 = usage or tool error. Never throws on malformed input.
//
// Verbs: eval, classify, near, order, deriv, taylor, integrate, uc, geom,
// ftc, props, repl. Flags: --trunc N, --depth K, --tol X, --seed S, --json,
// --at V (deriv/taylor extension value), --instances N (props).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Interactive loop over the expression language; per-line error recovery,
// session-scoped settings via ":set trunc|depth|tol|seed VALUE".
int repl(std::istream& in, std::ostream& out, Settings s);

}  // namespace vc::cli
