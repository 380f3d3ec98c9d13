#pragma once

// Tame types from abelian G-covers C -> P^1 branched at r points: the
// fibration (C x E)/G -> C/G has a multiple fibre of multiplicity
// ord(g_j) over the j-th branch point.

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "error.hpp"
#include "model.hpp"

namespace pluri {

// The group is the sum of Z/d_k; each monodromy is a residue tuple.
struct AbelianGroupData {
  std::vector<int> invariant_factors;
  std::vector<std::vector<int>> monodromies;
};

namespace detail {

inline std::int64_t group_order(const AbelianGroupData& data) {
  std::int64_t n = 1;
  for (int d : data.invariant_factors) n *= d;
  return n;
}

inline std::vector<int> reduce(const AbelianGroupData& data, const std::vector<int>& x) {
  std::vector<int> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const int d = data.invariant_factors[k];
    out[k] = ((x[k] % d) + d) % d;
  }
  return out;
}

inline int element_order(const AbelianGroupData& data, const std::vector<int>& x) {
  std::int64_t ord = 1;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const int d = data.invariant_factors[k];
    ord = std::lcm(ord, static_cast<std::int64_t>(d / std::gcd(d, x[k])));
  }
  return static_cast<int>(ord);
}

// Size of the subgroup generated by the monodromies, by closure.
inline std::int64_t generated_order(const AbelianGroupData& data,
                                    const std::vector<std::vector<int>>& gens) {
  std::set<std::vector<int>> seen{std::vector<int>(data.invariant_factors.size(), 0)};
  std::vector<std::vector<int>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        std::vector<int> y(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) y[k] = (x[k] + g[k]) % data.invariant_factors[k];
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return static_cast<std::int64_t>(seen.size());
}

}  // namespace detail

// Checks shape, sum zero, nontrivial local monodromies and generation;
// returns the reduced monodromies.
inline std::vector<std::vector<int>> validate(const AbelianGroupData& data) {
  if (data.invariant_factors.empty()) throw InvalidInput("factory: empty group");
  for (int d : data.invariant_factors)
    if (d < 2) throw InvalidInput("factory: invariant factors must be >= 2");
  if (detail::group_order(data) > 1'000'000) throw InvalidInput("factory: group too large");
  std::vector<std::vector<int>> gens;
  std::vector<int> total(data.invariant_factors.size(), 0);
  for (const auto& x : data.monodromies) {
    if (x.size() != data.invariant_factors.size())
      throw InvalidInput("factory: monodromy tuple length does not match the group");
    auto y = detail::reduce(data, x);
    if (detail::element_order(data, y) < 2)
      throw Inconsistent("factory: trivial local monodromy (unbranched point)");
    for (std::size_t k = 0; k < y.size(); ++k) total[k] += y[k];
    gens.push_back(std::move(y));
  }
  if (detail::reduce(data, total) != std::vector<int>(total.size(), 0))
    throw Inconsistent("factory: local monodromies do not sum to zero");
  if (detail::generated_order(data, gens) != detail::group_order(data))
    throw Inconsistent("factory: local monodromies do not generate the group");
  return gens;
}

inline FibrationNumericalType cover_to_type(const AbelianGroupData& data) {
  const auto gens = validate(data);
  std::vector<FibreDatum> fibres;
  for (const auto& g : gens) fibres.push_back(FibreDatum::tame(detail::element_order(data, g)));
  return FibrationNumericalType(Characteristic(0), 0, 0, false, std::move(fibres));
}

// 2g - 2 = |G| (-2 + sum (1 - 1/m_j)).
inline int riemann_hurwitz_genus(const AbelianGroupData& data) {
  const auto gens = validate(data);
  const std::int64_t order = detail::group_order(data);
  std::int64_t euler = -2 * order;  // 2g - 2
  for (const auto& g : gens) euler += order - order / detail::element_order(data, g);
  if (euler % 2 != 0 || euler < -2)
    throw Inconsistent("factory: Riemann-Hurwitz gives a non-integral genus");
  return static_cast<int>(euler / 2 + 1);
}

}  // namespace pluri
