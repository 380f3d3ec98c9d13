#pragma once

// Bounded enumeration of numerical types. The space is split into strata
// (p, g, chi, t); within a stratum fibre multisets are walked depth-first
// over a sorted list of fibre kinds, so each multiset is visited once and in
// canonical order.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "admissibility.hpp"
#include "fibre_local.hpp"
#include "model.hpp"

namespace pluri {

struct EnumerationBounds {
  int max_mult = 30;
  int max_fibres = 8;
  int max_chi_plus_t = 4;
  std::vector<int> characteristics{0, 2, 3, 5, 7};
  bool include_wild = true;
  bool include_quasi_elliptic = true;
  int max_genus = 2;
  int max_fibre_torsion = 2;

  void validate() const {
    if (max_mult < 2) throw InvalidInput("bounds: max_mult must be >= 2");
    if (max_fibres < 0 || max_chi_plus_t < 0 || max_genus < 0 || max_fibre_torsion < 0)
      throw InvalidInput("bounds: counts must be nonnegative");
    if (characteristics.empty()) throw InvalidInput("bounds: no characteristics given");
    for (int p : characteristics) (void)Characteristic(p);
  }

  friend bool operator==(const EnumerationBounds&, const EnumerationBounds&) = default;
};

struct Stratum {
  Characteristic p;
  int g = 0;
  int chi = 0;
  int t = 0;

  std::int64_t delta() const { return 2 * static_cast<std::int64_t>(g) - 2 + chi + t; }
};

// Elliptic always; quasi-elliptic only where it can be admissible.
inline std::vector<bool> quasi_variants(const Stratum& s, const EnumerationBounds& b) {
  std::vector<bool> out{false};
  const int p = s.p.value();
  if (b.include_quasi_elliptic && (p == 2 || p == 3) && !(s.g == 0 && s.chi == 0))
    out.push_back(true);
  return out;
}

inline std::vector<Stratum> strata(const EnumerationBounds& b) {
  b.validate();
  std::set<int> chars(b.characteristics.begin(), b.characteristics.end());
  std::vector<Stratum> out;
  for (int p : chars)
    for (int g = 0; g <= b.max_genus; ++g)
      for (int chi = 0; chi <= b.max_chi_plus_t; ++chi) {
        const int t_max = (p > 0 && b.include_wild) ? b.max_chi_plus_t - chi : 0;
        for (int t = 0; t <= t_max; ++t) out.push_back({Characteristic(p), g, chi, t});
      }
  return out;
}

inline constexpr int kTrackedN = 14;

struct FibreKind {
  FibreDatum fibre;
  std::array<std::int64_t, kTrackedN + 1> floors{};  // floor(n a / m), n = 0..14
};

// Fibre kinds usable in a stratum, in canonical order.
inline std::vector<FibreKind> fibre_kinds(const Stratum& s, const EnumerationBounds& b) {
  std::vector<FibreDatum> data;
  for (int m = 2; m <= b.max_mult; ++m) data.push_back(FibreDatum::tame(m));
  const int p = s.p.value();
  if (p > 0 && s.t > 0 && b.include_wild) {
    for (int e = 1; ipow(p, e) * 1 <= b.max_mult; ++e) {
      const auto q = static_cast<int>(ipow(p, e));
      for (int nu = 1; nu * q <= b.max_mult; ++nu) {
        const int m = nu * q;
        for (int tj = 1; tj <= std::min(s.t, b.max_fibre_torsion); ++tj) {
          if (!jump_count_realizable(m, nu, tj)) continue;
          for (int a : admissible_coefficients(m, nu, p, tj).values)
            data.push_back(FibreDatum{m, a, nu, e, tj});
        }
      }
    }
  }
  std::sort(data.begin(), data.end());
  std::vector<FibreKind> out;
  out.reserve(data.size());
  for (const auto& f : data) {
    FibreKind k{f, {}};
    for (int n = 0; n <= kTrackedN; ++n) k.floors[static_cast<std::size_t>(n)] = (std::int64_t{n} * f.a) / f.m;
    out.push_back(k);
  }
  return out;
}

// A node of the stratum walk: a canonical fibre multiset (possibly with
// torsion still missing) plus the running floor sums.
struct WalkNode {
  const Stratum* stratum = nullptr;
  std::vector<FibreDatum> fibres;
  std::array<std::int64_t, kTrackedN + 1> sums{};
  int t_used = 0;

  int depth() const { return static_cast<int>(fibres.size()); }
  bool is_type() const { return t_used == stratum->t; }

  // L(n) = 1 + n d + sum floor(n a_i / m_i) for n <= 14.
  std::int64_t linear(int n) const {
    return 1 + n * stratum->delta() + sums[static_cast<std::size_t>(n)];
  }

  FibrationNumericalType make_type(bool quasi) const {
    return FibrationNumericalType(stratum->p, stratum->g, stratum->chi, quasi, fibres);
  }
};

// Depth-first walk; visit returns whether to descend below the node.
inline void walk_stratum(const Stratum& s, const std::vector<FibreKind>& kinds, int max_depth,
                         int max_fibre_torsion, const std::function<bool(const WalkNode&)>& visit) {
  WalkNode node;
  node.stratum = &s;
  const int per_fibre = std::max(1, max_fibre_torsion);

  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    const int remaining_depth = max_depth - node.depth();
    const int missing = s.t - node.t_used;
    if (missing > remaining_depth * per_fibre) return;
    if (!visit(node)) return;
    if (remaining_depth == 0) return;
    for (std::size_t k = start; k < kinds.size(); ++k) {
      const auto& kind = kinds[k];
      if (kind.fibre.t > missing) continue;
      node.fibres.push_back(kind.fibre);
      node.t_used += kind.fibre.t;
      for (std::size_t n = 0; n <= kTrackedN; ++n) node.sums[n] += kind.floors[n];
      rec(k);
      for (std::size_t n = 0; n <= kTrackedN; ++n) node.sums[n] -= kind.floors[n];
      node.t_used -= kind.fibre.t;
      node.fibres.pop_back();
    }
  };
  rec(0);
}

// Flag for the configuration of case (2) whose existence is open: a single
// multiple fibre, wild with t_j = 2, over P^1 with chi = 0.
inline bool existence_unknown_configuration(const FibrationNumericalType& type) {
  return type.g() == 0 && type.chi() == 0 && type.torsion_length() == 2 && type.r() == 1 &&
         type.fibres()[0].t == 2;
}

// Admissibility for types built from fibre kinds (local rules hold by
// construction): slope, quasi-elliptic rules and condition U.
inline bool admissible_from_kinds(const FibrationNumericalType& type) {
  if (slope(type) <= Rational(0)) return false;
  const int p = type.p().value();
  if (type.quasi_elliptic()) return (p == 2 || p == 3) && !(type.g() == 0 && type.chi() == 0);
  if (type.g() == 0 && type.chi() == 0) return check_all_U(type);
  return true;
}

// Emits every admissible type within the bounds exactly once, sorted by
// (p, g, chi, t, r, fibres, quasi_elliptic). Stops early once `emit`
// returns false.
inline void enumerate_types_while(const EnumerationBounds& b,
                                  const std::function<bool(const FibrationNumericalType&)>& emit) {
  bool running = true;
  for (const auto& s : strata(b)) {
    const auto kinds = fibre_kinds(s, b);
    const auto variants = quasi_variants(s, b);
    for (int r = 0; r <= b.max_fibres && running; ++r) {
      walk_stratum(s, kinds, r, b.max_fibre_torsion, [&](const WalkNode& node) {
        if (!running) return false;
        if (node.depth() < r) return true;
        if (!node.is_type()) return false;
        for (bool quasi : variants) {
          auto type = node.make_type(quasi);
          if (!admissible_from_kinds(type)) continue;
          if (existence_unknown_configuration(type)) type = type.with_existence_unknown(true);
          if (!emit(type)) {
            running = false;
            break;
          }
        }
        return false;
      });
    }
    if (!running) return;
  }
}

inline void enumerate_types(const EnumerationBounds& b,
                            const std::function<void(const FibrationNumericalType&)>& emit) {
  enumerate_types_while(b, [&](const FibrationNumericalType& t) {
    emit(t);
    return true;
  });
}

inline std::vector<FibrationNumericalType> enumerate_types(const EnumerationBounds& b) {
  std::vector<FibrationNumericalType> out;
  enumerate_types(b, [&](const FibrationNumericalType& t) { out.push_back(t); });
  return out;
}

}  // namespace pluri
