#pragma once

#include <optional>
#include <string>

namespace vc {

// Three-valued outcome for semidecidable predicates. Series-tier checks
// decide exactly (depth 0); sequence-tier checks sample a schedule and may
// come back Unknown at the depth they reached.
enum class Truth { Holds, Fails, Unknown };

struct Verdict {
  Truth truth = Truth::Unknown;
  long long depth = 0;
  std::optional<long long> witness;  // index where the pointwise relation failed

  static Verdict holds(long long depth = 0) { return {Truth::Holds, depth, {}}; }
  static Verdict fails(long long depth = 0, std::optional<long long> witness = {}) {
    return {Truth::Fails, depth, witness};
  }
  static Verdict unknown(long long depth = 0, std::optional<long long> witness = {}) {
    return {Truth::Unknown, depth, witness};
  }

  bool is_holds() const { return truth == Truth::Holds; }
  bool is_fails() const { return truth == Truth::Fails; }
  bool is_unknown() const { return truth == Truth::Unknown; }

  Verdict negate() const {
    if (truth == Truth::Holds) return {Truth::Fails, depth, witness};
    if (truth == Truth::Fails) return {Truth::Holds, depth, witness};
    return *this;
  }
};

// Holds&&Holds = Holds; any Fails wins; otherwise Unknown.
inline Verdict conj(const Verdict& a, const Verdict& b) {
  long long d = std::max(a.depth, b.depth);
  if (a.is_fails()) return {Truth::Fails, d, a.witness};
  if (b.is_fails()) return {Truth::Fails, d, b.witness};
  if (a.is_holds() && b.is_holds()) return {Truth::Holds, d, {}};
  return {Truth::Unknown, d, a.witness ? a.witness : b.witness};
}

// Verdict of "premise implies conclusion": vacuously Holds on a failed premise.
inline Verdict implies(const Verdict& premise, const Verdict& conclusion) {
  long long d = std::max(premise.depth, conclusion.depth);
  if (premise.is_fails()) return Verdict::holds(d);
  if (conclusion.is_holds()) return Verdict::holds(d);
  if (premise.is_holds() && conclusion.is_fails())
    return Verdict::fails(d, conclusion.witness);
  return Verdict::unknown(d);
}

inline std::string to_string(Truth t) {
  switch (t) {
    case Truth::Holds: return "Holds";
    case Truth::Fails: return "Fails";
    default: return "UnknownAtDepth";
  }
}

inline std::string to_string(const Verdict& v) { return to_string(v.truth); }

}  // namespace vc
