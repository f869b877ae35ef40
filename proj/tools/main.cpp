#include <iostream>
#include <string>
#include <vector>

#include "vcalc/cli.hpp"

namespace {

void print_usage(std::ostream& out) {
  out << "vcalc — calculus over the extended reals with infinitesimals\n"
         "\n"
         "usage: vcalc VERB [ARGS] [FLAGS]\n"
         "\n"
         "verbs:\n"
         "  eval EXPR              evaluate a virtual expression to normal form\n"
         "  classify EXPR          finitude classification (infinitesimal/finite/infinite)\n"
         "  near EXPR1 EXPR2       proximity verdict (difference infinitesimal)\n"
         "  order EXPR1 EXPR2      order-of / negligibility / magnitude comparison\n"
         "  deriv EXPR X [--at V]  derivative at X via infinitesimal quotients\n"
         "  taylor EXPR X N        Taylor coefficients and remainder-order verdict\n"
         "  integrate EXPR A B     Riemann integral over extended partitions\n"
         "  uc EXPR SET            uniform continuity on SET (R, [a,b], unions)\n"
         "  geom KIND EXPR A B     area|volume|length|surface measures\n"
         "  ftc EXPR A X           fundamental-theorem negligibility check\n"
         "  props [SUITE|all]      run the proposition suites\n"
         "  repl                   interactive session\n"
         "\n"
         "flags: --trunc N (16)  --depth K (14)  --tol X (1e-9)  --seed S  --json\n"
         "       --at V (deriv extension value)  --instances N (props, 200)\n"
         "\n"
         "expression literals: numbers, x, pi, e, inf, del, (+-)E, (-+)E,\n"
         "functions sin cos exp ln sqrt abs, O(del^k) truncation tags\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    print_usage(std::cout);
    return args.empty() ? 2 : 0;
  }
  return vc::cli::run(args, std::cout, std::cerr);
}
