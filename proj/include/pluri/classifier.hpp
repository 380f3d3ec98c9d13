#pragma once

// Decision table of the P_12-theorem: P_12 and K^2 of a minimal model give
// the Kodaira class; (p_g, q, torsion order of K) name the surfaces of
// Kodaira dimension zero.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "model.hpp"

namespace pluri {

struct SurfaceInvariants {
  int p12 = 0;
  int k2_min = 0;
  bool minimal = true;
  int pg = 0;
  int q = 0;
  std::optional<int> canonical_torsion;
  Characteristic p;
};

enum class KodairaClassId { I, II, III, IV };

enum class Kod0Subtype { Abelian, K3, Enriques, Hyperelliptic, Unresolved };

struct KodairaClass {
  KodairaClassId id = KodairaClassId::I;
  std::optional<Kod0Subtype> subtype;

  friend bool operator==(const KodairaClass&, const KodairaClass&) = default;
};

inline const char* to_string(KodairaClassId c) {
  switch (c) {
    case KodairaClassId::I: return "I";
    case KodairaClassId::II: return "II";
    case KodairaClassId::III: return "III";
    case KodairaClassId::IV: return "IV";
  }
  return "?";
}

inline const char* to_string(Kod0Subtype s) {
  switch (s) {
    case Kod0Subtype::Abelian: return "Abelian";
    case Kod0Subtype::K3: return "K3";
    case Kod0Subtype::Enriques: return "Enriques";
    case Kod0Subtype::Hyperelliptic: return "hyperelliptic";
    case Kod0Subtype::Unresolved: return "unresolved";
  }
  return "?";
}

inline void validate(const SurfaceInvariants& inv) {
  if (inv.p12 < 0 || inv.pg < 0 || inv.q < 0)
    throw InvalidInput("classify: P_12, p_g and q must be nonnegative");
  if (inv.canonical_torsion && *inv.canonical_torsion < 1)
    throw InvalidInput("classify: canonical torsion order must be >= 1");
  if (inv.p12 == 1 && !(inv.canonical_torsion && 12 % *inv.canonical_torsion == 0))
    throw Inconsistent("classify: P_12 = 1 needs a canonical torsion order dividing 12");
}

inline Kod0Subtype classify_kod0_subtype(const SurfaceInvariants& inv);

inline KodairaClass classify(const SurfaceInvariants& inv) {
  validate(inv);
  if (inv.p12 == 0) return {KodairaClassId::I, std::nullopt};
  if (inv.p12 == 1) return {KodairaClassId::II, classify_kod0_subtype(inv)};
  if (!inv.minimal) throw Inconsistent("classify: K^2 must be taken on a minimal model");
  if (inv.k2_min < 0) throw Inconsistent("classify: P_12 >= 2 with K^2 < 0 on a minimal model");
  if (inv.k2_min == 0) return {KodairaClassId::III, std::nullopt};
  return {KodairaClassId::IV, std::nullopt};
}

inline Kod0Subtype classify_kod0_subtype(const SurfaceInvariants& inv) {
  if (inv.p12 != 1) throw Inconsistent("classify_kod0_subtype: surface is not in class II");
  const auto tors = inv.canonical_torsion;
  if (inv.pg == 1 && inv.q == 2) return Kod0Subtype::Abelian;
  if (inv.pg == 1 && inv.q == 0) return Kod0Subtype::K3;
  if (inv.pg == 0 && inv.q == 0 && tors == 2) return Kod0Subtype::Enriques;
  if (inv.q == 1 && tors && (*tors == 2 || *tors == 3 || *tors == 4 || *tors == 6))
    return Kod0Subtype::Hyperelliptic;
  return Kod0Subtype::Unresolved;
}

// Multiplicity tuples with 2 = sum (1 - 1/m_j), m_j >= 2, by exhaustive
// search over nondecreasing tuples with entries up to `max_entry`. Each term
// is in [1/2, 1), so r is 3 or 4.
inline std::vector<std::vector<int>> torsion_solutions(int max_entry = 60) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const Rational target(2);  // mixed rational/int == recurses under C++20 in Boost 1.74
  std::function<void(int, Rational)> rec = [&](int lo, Rational sum) {
    if (sum == target) {
      out.push_back(cur);
      return;
    }
    if (sum > target || cur.size() == 4) return;
    for (int m = lo; m <= max_entry; ++m) {
      const Rational next = sum + Rational(m - 1, m);
      if (next > target) break;  // terms grow with m
      cur.push_back(m);
      rec(m, next);
      cur.pop_back();
    }
  };
  rec(2, Rational(0));
  return out;
}

}  // namespace pluri
