#pragma once

// Condition U_i: integers n_1..n_r with n_i = 1 mod nu_i and
// sum n_j / m_j integral.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "floor_sum.hpp"
#include "model.hpp"

namespace pluri {

struct ConditionUInstance {
  std::vector<int> m;
  std::vector<int> nu;
  int i = 1;  // 1-based distinguished index
};

inline void validate(const ConditionUInstance& inst) {
  if (inst.m.size() != inst.nu.size())
    throw InvalidInput("condition U: m and nu must have the same length");
  if (inst.i < 1 || inst.i > static_cast<int>(inst.m.size()))
    throw InvalidInput("condition U: index i out of range");
  for (std::size_t j = 0; j < inst.m.size(); ++j) {
    if (inst.m[j] < 2 || inst.nu[j] < 1)
      throw InvalidInput("condition U: need m_j >= 2 and nu_j >= 1");
    if (inst.m[j] % inst.nu[j] != 0)
      throw InvalidInput("condition U: nu_j must divide m_j");
  }
}

// With M = lcm(m), the attainable values of M * sum n_j/m_j (mod M) form the
// coset (M/m_i) + gcd(M, nu_i M/m_i, {M/m_j}_{j != i}) Z.
inline bool check_condition_U(const ConditionUInstance& inst) {
  validate(inst);
  const std::int64_t big_m = lcm_of(inst.m);
  const auto k = static_cast<std::size_t>(inst.i - 1);
  std::int64_t g = std::gcd(big_m, inst.nu[k] * (big_m / inst.m[k]));
  for (std::size_t j = 0; j < inst.m.size(); ++j)
    if (j != k) g = std::gcd(g, big_m / inst.m[j]);
  return (big_m / inst.m[k]) % g == 0;
}

// Size limit for the residue oracle; PLURI_MAX_ORACLE overrides the default.
inline std::int64_t oracle_bound() {
  if (const char* env = std::getenv("PLURI_MAX_ORACLE")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 1'000'000;
}

// Exhaustive search over residues: sweeps n_j through 0..m_j-1 for j != i,
// accumulating reachable numerators mod M, then tries every
// n_i = 1 mod nu_i in 0..m_i-1.
inline bool check_condition_U_bruteforce(const ConditionUInstance& inst,
                                         std::int64_t bound = oracle_bound()) {
  validate(inst);
  const std::int64_t big_m = lcm_of(inst.m);
  if (big_m > bound)
    throw OracleBoundExceeded("condition U oracle: lcm " + std::to_string(big_m) +
                              " exceeds bound " + std::to_string(bound));
  const auto k = static_cast<std::size_t>(inst.i - 1);
  const auto size = static_cast<std::size_t>(big_m);

  std::vector<char> reach(size, 0);
  reach[0] = 1;
  std::vector<char> next(size, 0);
  for (std::size_t j = 0; j < inst.m.size(); ++j) {
    if (j == k) continue;
    const std::int64_t step = big_m / inst.m[j];
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t x = 0; x < size; ++x) {
      if (!reach[x]) continue;
      for (std::int64_t n = 0; n < inst.m[j]; ++n)
        next[static_cast<std::size_t>((static_cast<std::int64_t>(x) + n * step) % big_m)] = 1;
    }
    reach.swap(next);
  }
  const std::int64_t step_i = big_m / inst.m[k];
  for (std::int64_t n = 1; n < inst.m[k] + 1; n += inst.nu[k]) {
    const std::int64_t need = (big_m - (n * step_i) % big_m) % big_m;
    if (reach[static_cast<std::size_t>(need)]) return true;
  }
  return false;
}

// U_i for every i, under the hypothesis g = 0, chi = 0.
inline bool check_all_U(const FibrationNumericalType& type) {
  if (type.g() != 0 || type.chi() != 0)
    throw Unsupported("check_all_U: needs an elliptic fibration over P^1 with chi = 0");
  ConditionUInstance inst;
  for (const auto& f : type.fibres()) {
    inst.m.push_back(f.m);
    inst.nu.push_back(f.nu);
  }
  for (int i = 1; i <= type.r(); ++i) {
    inst.i = i;
    if (!check_condition_U(inst)) return false;
  }
  return true;
}

// For tame triples: every m_k divides the lcm of the other two.
inline bool divisibility_closure_r3(int m1, int m2, int m3) {
  if (m1 < 2 || m2 < 2 || m3 < 2) throw InvalidInput("multiplicities must be >= 2");
  return std::lcm(m2, m3) % m1 == 0 && std::lcm(m1, m3) % m2 == 0 &&
         std::lcm(m1, m2) % m3 == 0;
}

}  // namespace pluri
