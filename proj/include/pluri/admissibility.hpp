#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "fibre_local.hpp"
#include "model.hpp"

namespace pluri {

namespace rule {
inline constexpr const char* kChiNegative = "chi-negative";
inline constexpr const char* kFibreDivisibility = "fibre-divisibility";
inline constexpr const char* kTameCoefficient = "tame-coefficient";
inline constexpr const char* kTameTorsionOrder = "tame-torsion-order";
inline constexpr const char* kWildCharZero = "wild-characteristic-zero";
inline constexpr const char* kWildPowerRelation = "wild-power-relation";
inline constexpr const char* kWildJumpProfile = "wild-jump-profile";
inline constexpr const char* kWildCoefficient = "wild-coefficient";
inline constexpr const char* kSlopeNonpositive = "slope-nonpositive";
inline constexpr const char* kQuasiEllipticChar = "quasi-elliptic-char";
inline constexpr const char* kQuasiEllipticChi0 = "quasi-elliptic-chi0-base-P1";
inline constexpr const char* kConditionU = "condition-U";
}  // namespace rule

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<std::string> violations;
};

namespace detail {

inline void add_violation(std::vector<std::string>& out, const char* id) {
  for (const auto& v : out)
    if (v == id) return;
  out.emplace_back(id);
}

// Local rules for one fibre; returns true when (m, nu, p^e) is coherent
// enough for condition U to be evaluated.
inline bool check_fibre(const FibreDatum& f, int p, std::vector<std::string>& out) {
  bool divisible = true;
  if (f.m % f.nu != 0 || (f.a + 1) % f.nu != 0) {
    add_violation(out, rule::kFibreDivisibility);
    divisible = f.m % f.nu == 0;
  }
  if (!f.is_wild()) {
    if (f.a != f.m - 1) add_violation(out, rule::kTameCoefficient);
    if (f.nu != f.m || f.e != 0) add_violation(out, rule::kTameTorsionOrder);
    return divisible;
  }
  if (p == 0) {
    add_violation(out, rule::kWildCharZero);
    return divisible;
  }
  if (f.e < 1 || !divisible || ipow(p, f.e) * f.nu != f.m) {
    add_violation(out, rule::kWildPowerRelation);
    return divisible;
  }
  if (!jump_count_realizable(f.m, f.nu, f.t)) add_violation(out, rule::kWildJumpProfile);
  return divisible;
}

inline void check_wild_coefficient(const FibreDatum& f, int p, std::vector<std::string>& out) {
  const auto allowed = admissible_coefficients(f.m, f.nu, p, f.t);
  if (std::find(allowed.values.begin(), allowed.values.end(), f.a) == allowed.values.end())
    add_violation(out, rule::kWildCoefficient);
}

}  // namespace detail

// Applies, in order: chi >= 0; fibre-local rules; slope > 0; coefficient
// rules; quasi-elliptic rules; condition U (elliptic, g = 0, chi = 0).
inline AdmissibilityReport is_admissible(const FibrationNumericalType& type) {
  AdmissibilityReport rep;
  auto& out = rep.violations;
  const int p = type.p().value();

  if (type.chi() < 0) detail::add_violation(out, rule::kChiNegative);

  bool local_ok = true;
  bool u_evaluable = true;
  for (const auto& f : type.fibres()) {
    const auto before = out.size();
    u_evaluable = detail::check_fibre(f, p, out) && u_evaluable;
    local_ok = local_ok && out.size() == before;
  }

  if (slope(type) <= Rational(0)) detail::add_violation(out, rule::kSlopeNonpositive);

  if (local_ok)
    for (const auto& f : type.fibres())
      if (f.is_wild()) detail::check_wild_coefficient(f, p, out);

  if (type.quasi_elliptic()) {
    if (p != 2 && p != 3) detail::add_violation(out, rule::kQuasiEllipticChar);
    if (type.g() == 0 && type.chi() == 0) detail::add_violation(out, rule::kQuasiEllipticChi0);
  } else if (type.g() == 0 && type.chi() == 0 && u_evaluable) {
    if (!check_all_U(type)) detail::add_violation(out, rule::kConditionU);
  }

  rep.admissible = out.empty();
  return rep;
}

}  // namespace pluri
