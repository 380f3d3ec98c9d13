#pragma once

// Local invariants of a multiple fibre: torsion orders o_n of O_{nF'}(F'),
// jumping values of h^0(O_{nF'}), and the admissible canonical coefficients.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "arith.hpp"
#include "error.hpp"

namespace pluri {

struct JumpProfile {
  int p = 0;
  int nu = 1;
  std::vector<std::int64_t> orders;  // o_1 .. o_m
  std::vector<int> jumps;            // ascending jumping values <= m

  int torsion_length() const { return static_cast<int>(jumps.size()); }

  // h^0(O_{nF'}) = 1 + #{jumps <= n}.
  int h0(int n) const {
    return 1 + static_cast<int>(std::upper_bound(jumps.begin(), jumps.end(), n) - jumps.begin());
  }

  friend bool operator==(const JumpProfile&, const JumpProfile&) = default;
};

struct AdmissibleCoefficients {
  std::vector<int> values;  // ascending
  bool imprecise = false;   // true when no sharper rule than nu | a+1 is known
};

// Checks (m, nu, p, t) against m = nu p^e; returns e (0 for tame data).
inline int fibre_exponent(int m, int nu, int p, int t) {
  if (m < 2 || nu < 1) throw InvalidInput("need m >= 2 and nu >= 1");
  if (m % nu != 0) throw Inconsistent("nu must divide m");
  if (t == 0) return 0;
  if (p == 0) throw Inconsistent("wild fibre in characteristic zero");
  const int e = exact_log(m / nu, p);
  if (e < 1) throw Inconsistent("wild fibre needs m = nu * p^e with e >= 1");
  return e;
}

// Candidate coefficients a of a fibre with torsion length t.
inline AdmissibleCoefficients admissible_coefficients(int m, int nu, int p, int t,
                                                      bool h1_at_most_one = false) {
  if (t < 0) throw InvalidInput("torsion length must be >= 0");
  fibre_exponent(m, nu, p, t);
  std::vector<int> raw;
  bool imprecise = false;
  if (t == 0) {
    raw = {m - 1};
  } else if (t == 1 || h1_at_most_one) {
    raw = {m - 1, m - 1 - nu};
  } else if (t == 2) {
    raw = {m - 1, m - 1 - nu, m - 1 - 2 * nu, m - 1 - (p + 1) * nu};
  } else {
    for (int a = 0; a < m; ++a)
      if ((a + 1) % nu == 0) raw.push_back(a);
    imprecise = true;
  }
  AdmissibleCoefficients out;
  out.imprecise = imprecise;
  for (int a : raw)
    if (a >= 0 && a < m && (a + 1) % nu == 0) out.values.push_back(a);
  std::sort(out.values.begin(), out.values.end());
  out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
  return out;
}

// The two possible second jumping values of a wild fibre.
inline std::set<int> second_jump_candidates(int nu, int p) {
  if (nu < 1 || !is_prime(p)) throw InvalidInput("need nu >= 1 and p prime");
  return {2 * nu + 1, (p + 1) * nu + 1};
}

// Jumps sit at the n <= m with nu | n - 1, starting at nu + 1.
inline int max_jumps(int m, int nu) {
  if (m < 2 || nu < 1) throw InvalidInput("need m >= 2 and nu >= 1");
  return (m - 1) / nu;
}

// Whether some JumpProfile on m has exactly t jumps.
inline bool jump_count_realizable(int m, int nu, int t) {
  if (t == 0) return true;
  return nu + 1 <= m && t <= max_jumps(m, nu);
}

// Visits every profile of length m. A jump at n requires
// O_F'((n-1)F') trivial, i.e. nu | n - 1; nu + 1 is always the first jump;
// o_n = p o_{n-1} is allowed only at a jump.
inline void for_each_jump_profile(int m, int nu, int p,
                                  const std::function<void(const JumpProfile&)>& visit) {
  if (!is_prime(p)) throw InvalidInput("jump profiles need a prime characteristic");
  if (fibre_exponent(m, nu, p, 1) < 1) throw Inconsistent("need m = nu p^e, e >= 1");

  JumpProfile cur;
  cur.p = p;
  cur.nu = nu;
  cur.orders.assign(1, nu);

  std::function<void(int)> step = [&](int n) {
    if (n > m) {
      visit(cur);
      return;
    }
    const std::int64_t prev = cur.orders.back();
    const bool eligible = (n - 1) % nu == 0;
    const bool forced = n == nu + 1;

    if (!forced) {
      cur.orders.push_back(prev);
      step(n + 1);
      cur.orders.pop_back();
    }
    if (eligible) {
      cur.jumps.push_back(n);
      cur.orders.push_back(prev);
      step(n + 1);
      cur.orders.back() = prev * p;
      step(n + 1);
      cur.orders.pop_back();
      cur.jumps.pop_back();
    }
  };
  step(2);
}

inline std::vector<JumpProfile> enumerate_jump_profiles(int m, int nu, int p) {
  std::vector<JumpProfile> out;
  for_each_jump_profile(m, nu, p, [&](const JumpProfile& jp) { out.push_back(jp); });
  return out;
}

}  // namespace pluri
