#pragma once

// The four statements: P_12 >= 2; P_n >= 1 for some n <= 4; P_n >= 2 for
// some n <= 8; P_n >= 2 for all n >= 14.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "admissibility.hpp"
#include "model.hpp"

namespace pluri {

inline constexpr int kTailThreshold = 14;
inline constexpr std::size_t kSeriesCap = 1040;

struct MainTheoremReport {
  std::int64_t p12 = 0;
  bool stmt1 = false;
  std::optional<int> stmt2_witness;
  std::optional<int> stmt3_witness;
  bool stmt4 = false;
  bool exact = true;  // false: computed from lower bounds (g >= 1)
  bool series_truncated = false;
  std::vector<std::int64_t> series;  // P_0, P_1, ...

  bool all_hold() const { return stmt1 && stmt2_witness && stmt3_witness && stmt4; }
};

namespace detail {

// Integer data of L(n) = 1 + n d + sum floor(n a_i/m_i) over the common
// denominator M = lcm(m_i).
struct LinearForm {
  std::int64_t d = 0;
  std::int64_t big_m = 1;
  std::vector<FloorTerm> terms;
  __int128 slope_num = 0;  // slope * M
  __int128 slack_num = 0;  // sum (m_i - 1) M / m_i

  explicit LinearForm(const FibrationNumericalType& type)
      : LinearForm(delta_degree(type), type.fibres()) {}

  LinearForm(std::int64_t degree, const std::vector<FibreDatum>& fibres) : d(degree) {
    for (const auto& f : fibres) {
      terms.push_back({f.a, f.m});
      big_m = checked_lcm(big_m, f.m);
    }
    slope_num = static_cast<__int128>(d) * big_m;
    for (const auto& [a, m] : terms) {
      slope_num += static_cast<__int128>(a) * (big_m / m);
      slack_num += static_cast<__int128>(m - 1) * (big_m / m);
    }
  }

  std::int64_t at(std::int64_t n) const { return 1 + n * d + floor_sum(n, terms); }
};

// All n >= threshold have L(n) >= target. L(n + M) = L(n) + M * slope, and
// L(n) >= 1 + n * slope - sum (m_i - 1)/m_i; the first n from which either
// argument applies bounds the window that is checked directly.
inline bool tail_holds(const LinearForm& form, std::int64_t threshold, std::int64_t target) {
  if (target <= 0) return true;
  if (form.slope_num < 0) return false;
  __int128 end = static_cast<__int128>(threshold) + form.big_m;
  if (form.slope_num > 0) {
    const __int128 need = static_cast<__int128>(target - 1) * form.big_m + form.slack_num;
    const __int128 n0 = ceil_div(need, form.slope_num);
    end = std::min(end, std::max<__int128>(threshold, n0));
  }
  for (__int128 n = threshold; n < end; ++n)
    if (form.at(static_cast<std::int64_t>(n)) < target) return false;
  return true;
}

}  // namespace detail

// Exact decision of "P_n >= target for every n >= threshold" over P^1.
inline bool verify_tail(const FibrationNumericalType& type, std::int64_t threshold,
                        std::int64_t target) {
  if (type.g() != 0) throw Unsupported("verify_tail: exact only over P^1 (g = 0)");
  if (threshold < 1) threshold = 1;
  return detail::tail_holds(detail::LinearForm(type), threshold, target);
}

inline std::vector<std::int64_t> audit_series(const FibrationNumericalType& type, bool* truncated) {
  const std::int64_t big_m = type.period();
  const __int128 wanted = static_cast<__int128>(kTailThreshold) + 2 * static_cast<__int128>(big_m) + 1;
  const auto len = static_cast<std::size_t>(std::min<__int128>(wanted, kSeriesCap));
  if (truncated) *truncated = wanted > static_cast<__int128>(kSeriesCap);
  std::vector<std::int64_t> out(len);
  for (std::size_t n = 0; n < len; ++n) out[n] = plurigenus(type, static_cast<std::int64_t>(n)).value;
  return out;
}

// Least n in [1, limit] with series[n] >= target.
inline std::optional<int> first_at_least(const std::vector<std::int64_t>& series, int limit,
                                         std::int64_t target) {
  for (int n = 1; n <= limit && n < static_cast<int>(series.size()); ++n)
    if (series[static_cast<std::size_t>(n)] >= target) return n;
  return std::nullopt;
}

// Evaluates the four statements; g >= 1 uses lower bounds (exact = false),
// which are nondecreasing in n, so the tail reduces to n = 14.
inline MainTheoremReport verify_main_theorem(const FibrationNumericalType& type) {
  const auto adm = is_admissible(type);
  if (!adm.admissible) {
    std::string msg = "verify_main_theorem: inadmissible type (";
    for (std::size_t i = 0; i < adm.violations.size(); ++i)
      msg += (i ? ", " : "") + adm.violations[i];
    throw Inconsistent(msg + ")");
  }
  MainTheoremReport rep;
  rep.exact = type.g() == 0;
  rep.series = audit_series(type, &rep.series_truncated);
  rep.p12 = plurigenus(type, 12).value;
  rep.stmt1 = rep.p12 >= 2;
  rep.stmt2_witness = first_at_least(rep.series, 4, 1);
  rep.stmt3_witness = first_at_least(rep.series, 8, 2);
  rep.stmt4 = rep.exact ? verify_tail(type, kTailThreshold, 2)
                        : plurigenus(type, kTailThreshold).value >= 2;
  return rep;
}

}  // namespace pluri
