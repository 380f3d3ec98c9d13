#pragma once

// Numerical data of a relatively minimal (quasi-)elliptic fibration of
// Kodaira dimension one, and the plurigenera it determines.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "floor_sum.hpp"

namespace pluri {

// Characteristic of the ground field; 0 means characteristic zero.
class Characteristic {
 public:
  constexpr Characteristic() = default;
  explicit Characteristic(int p) : p_(p) {
    if (p != 0 && !is_prime(p))
      throw InvalidInput("characteristic must be 0 or a prime, got " + std::to_string(p));
  }

  constexpr int value() const { return p_; }
  constexpr bool is_zero() const { return p_ == 0; }

  friend constexpr auto operator<=>(Characteristic, Characteristic) = default;

 private:
  int p_ = 0;
};

// One multiple fibre m F' with canonical coefficient a, torsion order nu of
// O_F'(F'), exponent e (m = nu p^e for wild fibres) and torsion length t at
// its point. t == 0 means tame.
struct FibreDatum {
  int m = 2;
  int a = 1;
  int nu = 2;
  int e = 0;
  int t = 0;

  // Tame fibre of multiplicity m: a = m - 1, nu = m, e = t = 0.
  static FibreDatum tame(int m) {
    if (m < 2) throw InvalidInput("multiplicity must be >= 2");
    return FibreDatum{m, m - 1, m, 0, 0};
  }

  // Wild fibre with m = nu p^e; a is taken as given.
  static FibreDatum wild(Characteristic p, int nu, int e, int t, int a) {
    if (p.is_zero()) throw Inconsistent("wild fibres need positive characteristic");
    if (nu < 1 || e < 1 || t < 1)
      throw Inconsistent("wild fibre needs nu >= 1, e >= 1, t >= 1");
    const auto m = static_cast<int>(nu * ipow(p.value(), e));
    if (a < 0 || a >= m) throw Inconsistent("coefficient out of range [0, m)");
    return FibreDatum{m, a, nu, e, t};
  }

  constexpr bool is_wild() const { return t > 0; }

  // Canonical order: ascending by (m, nu, t, a), then e.
  friend constexpr auto operator<=>(const FibreDatum& x, const FibreDatum& y) {
    return std::tie(x.m, x.nu, x.t, x.a, x.e) <=> std::tie(y.m, y.nu, y.t, y.a, y.e);
  }
  friend constexpr bool operator==(const FibreDatum&, const FibreDatum&) = default;
};

// Complete numeric record of the fibration f: S -> C. Fibres are stored in
// canonical order; only structural well-formedness is checked here, the
// mathematical rules live in is_admissible().
class FibrationNumericalType {
 public:
  FibrationNumericalType() = default;
  FibrationNumericalType(Characteristic p, int g, int chi, bool quasi_elliptic,
                         std::vector<FibreDatum> fibres, bool existence_unknown = false)
      : p_(p), g_(g), chi_(chi), quasi_elliptic_(quasi_elliptic),
        existence_unknown_(existence_unknown), fibres_(std::move(fibres)) {
    if (g_ < 0) throw InvalidInput("base genus must be >= 0");
    for (const auto& f : fibres_) {
      if (f.m < 2) throw InvalidInput("multiplicity must be >= 2");
      if (f.a < 0 || f.a >= f.m) throw InvalidInput("coefficient a must satisfy 0 <= a < m");
      if (f.nu < 1) throw InvalidInput("torsion order nu must be >= 1");
      if (f.e < 0 || f.t < 0) throw InvalidInput("e and t must be >= 0");
    }
    std::sort(fibres_.begin(), fibres_.end());
  }

  Characteristic p() const { return p_; }
  int g() const { return g_; }
  int chi() const { return chi_; }
  bool quasi_elliptic() const { return quasi_elliptic_; }
  bool existence_unknown() const { return existence_unknown_; }
  const std::vector<FibreDatum>& fibres() const { return fibres_; }
  int r() const { return static_cast<int>(fibres_.size()); }

  // t = length(T), the sum of the per-fibre torsion lengths.
  int torsion_length() const {
    int t = 0;
    for (const auto& f : fibres_) t += f.t;
    return t;
  }

  bool has_wild_fibre() const {
    return std::any_of(fibres_.begin(), fibres_.end(), [](const auto& f) { return f.is_wild(); });
  }

  std::vector<int> multiplicities() const {
    std::vector<int> out;
    out.reserve(fibres_.size());
    for (const auto& f : fibres_) out.push_back(f.m);
    return out;
  }

  // lcm of the multiplicities (1 without multiple fibres).
  std::int64_t period() const {
    const auto ms = multiplicities();
    return lcm_of(ms);
  }

  FibrationNumericalType with_existence_unknown(bool flag) const {
    auto copy = *this;
    copy.existence_unknown_ = flag;
    return copy;
  }

  // Deterministic order: (p, g, chi, t, r, fibres, quasi_elliptic).
  friend auto operator<=>(const FibrationNumericalType& x, const FibrationNumericalType& y) {
    const auto tx = x.torsion_length();
    const auto ty = y.torsion_length();
    const auto rx = x.r();
    const auto ry = y.r();
    return std::tie(x.p_, x.g_, x.chi_, tx, rx, x.fibres_, x.quasi_elliptic_) <=>
           std::tie(y.p_, y.g_, y.chi_, ty, ry, y.fibres_, y.quasi_elliptic_);
  }
  friend bool operator==(const FibrationNumericalType& x, const FibrationNumericalType& y) {
    return x.p_ == y.p_ && x.g_ == y.g_ && x.chi_ == y.chi_ &&
           x.quasi_elliptic_ == y.quasi_elliptic_ && x.fibres_ == y.fibres_;
  }

 private:
  Characteristic p_;
  int g_ = 0;
  int chi_ = 0;
  bool quasi_elliptic_ = false;
  bool existence_unknown_ = false;
  std::vector<FibreDatum> fibres_;
};

// P_n, either exact or a guaranteed lower bound.
struct PlurigenusValue {
  int n = 0;
  std::int64_t value = 1;
  bool exact = true;

  friend bool operator==(const PlurigenusValue&, const PlurigenusValue&) = default;
};

// deg(delta) = 2g - 2 + chi + t.
inline std::int64_t delta_degree(const FibrationNumericalType& type) {
  return 2 * static_cast<std::int64_t>(type.g()) - 2 + type.chi() + type.torsion_length();
}

// d + sum a_i/m_i; positive exactly in the Kodaira dimension one regime.
inline Rational slope(const FibrationNumericalType& type) {
  Rational s(delta_degree(type));
  for (const auto& f : type.fibres()) s += Rational(f.a, f.m);
  return s;
}

inline std::vector<FloorTerm> canonical_floor_terms(const FibrationNumericalType& type) {
  std::vector<FloorTerm> terms;
  terms.reserve(type.fibres().size());
  for (const auto& f : type.fibres()) terms.push_back({f.a, f.m});
  return terms;
}

// L(n) = 1 + n d + sum floor(n a_i / m_i); P_n = max(0, L(n)) on a rational base.
inline std::int64_t linear_part(const FibrationNumericalType& type, std::int64_t n) {
  const auto terms = canonical_floor_terms(type);
  return 1 + n * delta_degree(type) + floor_sum(n, terms);
}

// p_g = max(0, d + 1); only established over the projective line.
inline std::int64_t geometric_genus(const FibrationNumericalType& type) {
  if (type.g() != 0)
    throw Unsupported("geometric_genus: identity p_g = max(0, d+1) needs base genus 0");
  return std::max<std::int64_t>(0, delta_degree(type) + 1);
}

// Lower bounds available without knowing h^0 on the base curve:
//   g >= 1, chi+t >= 1      g + n - 1
//   g >= 2, chi = t = 0     (2n - 1)(g - 1)
//   g == 1, chi = t = 0     sum floor(n (m_j - 1) / m_j)
//   g == 0, chi+t == 2      1 + sum floor(n a_j / m_j)
//   g == 0, chi+t >= 3      n + 1
inline std::int64_t generic_lower_bound(const FibrationNumericalType& type, std::int64_t n) {
  if (n < 0) throw InvalidInput("plurigenus index must be >= 0");
  const std::int64_t g = type.g();
  const std::int64_t chi_t = type.chi() + type.torsion_length();
  if (g == 0 && chi_t <= 1)
    throw Unsupported("generic_lower_bound: g = 0 with chi + t <= 1 is handled exactly");
  if (n == 0) return 1;
  std::int64_t bound = 0;
  if (g >= 1 && chi_t >= 1) {
    bound = g + n - 1;
  } else if (g >= 2) {
    bound = (2 * n - 1) * (g - 1);
  } else if (g == 1) {
    for (const auto& f : type.fibres())
      bound += static_cast<std::int64_t>((static_cast<__int128>(n) * (f.m - 1)) / f.m);
  } else if (chi_t == 2) {
    bound = 1 + floor_sum(n, canonical_floor_terms(type));
  } else {
    bound = n + 1;
  }
  return std::max<std::int64_t>(0, bound);
}

// Exact P_n over P^1; the strongest known lower bound on a positive-genus base.
inline PlurigenusValue plurigenus(const FibrationNumericalType& type, std::int64_t n) {
  if (n < 0) throw InvalidInput("plurigenus index must be >= 0");
  const int idx = static_cast<int>(n);
  if (n == 0) return {0, 1, true};
  if (type.g() == 0) return {idx, std::max<std::int64_t>(0, linear_part(type, n)), true};
  return {idx, generic_lower_bound(type, n), false};
}

inline std::vector<PlurigenusValue> plurigenera_series(const FibrationNumericalType& type,
                                                       std::int64_t n_max) {
  if (n_max < 0) throw InvalidInput("n_max must be >= 0");
  std::vector<PlurigenusValue> out;
  out.reserve(static_cast<std::size_t>(n_max + 1));
  for (std::int64_t n = 0; n <= n_max; ++n) out.push_back(plurigenus(type, n));
  return out;
}

}  // namespace pluri
