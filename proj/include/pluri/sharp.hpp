#pragma once

// Search for types where the estimates of the four statements are attained.
// Every predicate caps some P_n from above; since adding fibres never lowers
// L(n), a node that already exceeds a cap has no satisfying completion.

#include <string>
#include <vector>

#include "enumerate.hpp"

namespace pluri {

enum class SharpPredicate {
  P123Zero,          // P_1 = P_2 = P_3 = 0
  PnAtMostOneTo7,    // P_n <= 1 for n <= 7
  P13EqualsOne,      // P_13 = 1
};

inline SharpPredicate parse_sharp_predicate(const std::string& id) {
  if (id == "p123-zero") return SharpPredicate::P123Zero;
  if (id == "pn-le-1-through-7") return SharpPredicate::PnAtMostOneTo7;
  if (id == "p13-equals-1") return SharpPredicate::P13EqualsOne;
  throw InvalidInput("unknown sharp predicate '" + id + "'");
}

inline const char* to_string(SharpPredicate p) {
  switch (p) {
    case SharpPredicate::P123Zero: return "p123-zero";
    case SharpPredicate::PnAtMostOneTo7: return "pn-le-1-through-7";
    case SharpPredicate::P13EqualsOne: return "p13-equals-1";
  }
  return "unknown";
}

namespace detail {

inline bool within_caps(SharpPredicate pred, const WalkNode& node) {
  switch (pred) {
    case SharpPredicate::P123Zero:
      return node.linear(1) <= 0 && node.linear(2) <= 0 && node.linear(3) <= 0;
    case SharpPredicate::PnAtMostOneTo7:
      for (int n = 1; n <= 7; ++n)
        if (node.linear(n) > 1) return false;
      return true;
    case SharpPredicate::P13EqualsOne:
      return node.linear(13) <= 1;
  }
  return false;
}

inline bool satisfies(SharpPredicate pred, const WalkNode& node) {
  if (!within_caps(pred, node)) return false;
  return pred != SharpPredicate::P13EqualsOne || node.linear(13) == 1;
}

}  // namespace detail

// All admissible types over P^1 within the bounds satisfying the predicate,
// in canonical order. Positive-genus strata are skipped (no exact P_n).
inline std::vector<FibrationNumericalType> find_sharp_cases(const EnumerationBounds& b,
                                                            SharpPredicate pred) {
  std::vector<FibrationNumericalType> out;
  for (const auto& s : strata(b)) {
    if (s.g != 0) continue;
    const auto kinds = fibre_kinds(s, b);
    const auto variants = quasi_variants(s, b);
    walk_stratum(s, kinds, b.max_fibres, b.max_fibre_torsion, [&](const WalkNode& node) {
      if (!detail::within_caps(pred, node)) return false;
      if (node.is_type() && detail::satisfies(pred, node)) {
        for (bool quasi : variants) {
          auto type = node.make_type(quasi);
          if (!admissible_from_kinds(type)) continue;
          if (existence_unknown_configuration(type)) type = type.with_existence_unknown(true);
          out.push_back(type);
        }
      }
      return true;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<FibrationNumericalType> find_sharp_cases(const EnumerationBounds& b,
                                                            const std::string& predicate_id) {
  return find_sharp_cases(b, parse_sharp_predicate(predicate_id));
}

}  // namespace pluri
