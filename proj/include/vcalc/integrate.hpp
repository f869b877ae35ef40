#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vcalc/expr.hpp"

namespace vc {

// Riemann integration through extended partitions with infinitesimal norm.
// The universal quantifier over all extended partitions is not computable;
// the engine samples four tag-placement schemes over dyadic refinements and
// treats cross-scheme agreement as the integrability verdict. Verdicts on
// non-uniform partitions are out of reach of this sampler and stay Unknown.

// Tag placement rule. Left/Right offset inward by width/1000 so tags stay
// strictly interior to their cells.
struct TagRule {
  enum Kind { Left, Right, Midpoint, SeededRandom } kind = Midpoint;
  std::uint64_t seed = 0;

  std::string name() const;
};

// a = x_0 < z_1 < x_1 < ... < x_n = b with norm = max cell width.
struct ExtendedPartition {
  double a, b;                 // requested orientation
  std::vector<double> points;  // x_0 .. x_n over [min(a,b), max(a,b)]
  std::vector<double> tags;    // z_1 .. z_n, strictly interior per cell
  double norm;
};

// Uniform cells; throws DegenerateIntervalError when a == b.
ExtendedPartition make_partition(double a, double b, int cells, const TagRule& rule);

// sum of f(z_i) (x_i - x_{i-1}), left to right. DomainError at a bad tag.
double riemann_sum(const ExprPtr& f, const ExtendedPartition& p);

struct IntegralReport {
  std::optional<double> value;
  Verdict verdict;
  // scheme name -> tail of the refinement sums (last few levels)
  std::map<std::string, std::vector<double>> per_scheme;
  long long depth = 0;  // deepest cell count
};

IntegralReport integrate(const ExprPtr& f, double a, double b, const Settings& s = {});

struct FtcReport {
  Verdict verdict;
  double deepest_ratio = 0;  // |ds - f(x) dx| / dx at the deepest level
};

// Fundamental theorem as a negligibility statement: with g(t) the integral
// of f from a to t, the error ds - f(x) dx is negligible compared to dx.
FtcReport ftc_check(const ExprPtr& f, double a, double x, const Settings& s = {});

enum class GeomKind { Area, VolumeRevolution, ArcLength, SurfaceRevolution };

std::string to_string(GeomKind k);

// Integrand per kind: f; pi f^2; sqrt(1 + f'^2); 2 pi f sqrt(1 + f'^2).
// f must be symbolically differentiable for the last two, and strictly
// positive on [a,b] for the revolution measures.
IntegralReport geom_measure(GeomKind kind, const ExprPtr& f, double a, double b,
                            const Settings& s = {});

// Candidate approximations of a geometric element at scale dx = 1/n.
enum class ElementCandidate {
  Exact,    // the full integrand at the left end of the increment
  DxOnly,   // arc length approximated by dx alone (the wrong formula)
  TwoPiF,   // surface element approximated by 2 pi f dx (the wrong formula)
};

struct ElementCheck {
  Verdict verdict;           // Holds: candidate error negligible next to the element
  double deepest_ratio = 0;  // |element - candidate| / element at the deepest level
};

// Measures the true element (arc length or surface band over [x0, x0+1/n])
// by integration and compares the candidate against it.
ElementCheck element_negligibility(GeomKind kind, const ExprPtr& f, double x0,
                                   ElementCandidate candidate, const Settings& s = {});

}  // namespace vc
