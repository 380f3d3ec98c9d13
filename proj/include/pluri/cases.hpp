#pragma once

// Case partition of the proof over P^1 and the lower bound each branch
// asserts, as quasi-linear formulas c0 + c1 n + sum k [u n / v].

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "model.hpp"

namespace pluri {

enum class CaseLabel {
  PositiveGenus,
  EasyChiTAtLeast3,
  EasyChi2,
  Chi1T0,
  Case1,
  Case2,
  Case3,
  Case4,
};

inline const char* to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::PositiveGenus: return "positive-genus";
    case CaseLabel::EasyChiTAtLeast3: return "easy-chi-t-ge3";
    case CaseLabel::EasyChi2: return "easy-chi2";
    case CaseLabel::Chi1T0: return "chi1-t0";
    case CaseLabel::Case1: return "case1";
    case CaseLabel::Case2: return "case2";
    case CaseLabel::Case3: return "case3";
    case CaseLabel::Case4: return "case4";
  }
  return "unknown";
}

struct BoundFormula {
  struct Term {
    std::int64_t coef;
    std::int64_t num;
    std::int64_t den;
  };

  std::string name;
  std::int64_t constant = 0;
  std::int64_t linear = 0;
  std::vector<Term> terms;

  std::int64_t at(std::int64_t n) const {
    std::int64_t v = constant + linear * n;
    for (const auto& t : terms) v += t.coef * floor_div(t.num * n, t.den);
    return v;
  }

  std::int64_t period() const {
    std::int64_t p = 1;
    for (const auto& t : terms) p = checked_lcm(p, t.den);
    return p;
  }

  std::string describe() const {
    std::string s = std::to_string(constant);
    if (linear != 0)
      s += (linear < 0 ? " - " : " + ") +
           (std::llabs(linear) == 1 ? std::string() : std::to_string(std::llabs(linear))) + "n";
    for (const auto& t : terms) {
      s += t.coef < 0 ? " - " : " + ";
      if (std::llabs(t.coef) != 1) s += std::to_string(std::llabs(t.coef));
      s += "[" + (t.num == 1 ? std::string() : std::to_string(t.num)) + "n/" +
           std::to_string(t.den) + "]";
    }
    return s;
  }
};

struct CaseAssignment {
  CaseLabel label = CaseLabel::PositiveGenus;
  std::string branch;
  std::optional<BoundFormula> bound;
};

namespace detail {

inline BoundFormula formula(std::string name, std::int64_t c0, std::int64_t c1,
                            std::vector<BoundFormula::Term> terms) {
  return BoundFormula{std::move(name), c0, c1, std::move(terms)};
}

// 1 + [n/3] for nu = 1, 1 + [n/4] otherwise: a single wild fibre with
// a = m - 1 - nu.
inline BoundFormula single_wild_bound(int nu) {
  return nu == 1 ? formula("1+[n/3]", 1, 0, {{1, 1, 3}}) : formula("1+[n/4]", 1, 0, {{1, 1, 4}});
}

inline CaseAssignment assign_case1(const FibrationNumericalType& type) {
  CaseAssignment out{CaseLabel::Case1, {}, {}};
  for (const auto& f : type.fibres())
    if (f.a == f.m - 1) {
      out.branch = "fibre with a=m-1";
      out.bound = formula("1+[n/2]", 1, 0, {{1, 1, 2}});
      return out;
    }
  if (type.r() == 1) {
    out.branch = "single wild fibre, a=m-1-nu";
    out.bound = single_wild_bound(type.fibres()[0].nu);
  } else {
    out.branch = "outside analysis";
  }
  return out;
}

inline CaseAssignment assign_case2(const FibrationNumericalType& type) {
  CaseAssignment out{CaseLabel::Case2, {}, {}};
  const auto& fs = type.fibres();
  for (const auto& f : fs)
    if (f.a == f.m - 1) {
      out.branch = "fibre with a=m-1";
      out.bound = formula("1+[n/2]", 1, 0, {{1, 1, 2}});
      return out;
    }
  if (fs.size() == 2 && fs[0].t == 1 && fs[1].t == 1) {
    out.branch = "two wild fibres, t_j=1";
    bool any_positive = false;
    bool nu_one = false;
    for (const auto& f : fs)
      if (f.a > 0) {
        any_positive = true;
        nu_one = nu_one || f.nu == 1;
      }
    if (any_positive) out.bound = single_wild_bound(nu_one ? 1 : 2);
    return out;
  }
  if (fs.size() == 1 && fs[0].t == 2) {
    const auto& f = fs[0];
    if (f.a == f.m - 1 - f.nu) {
      out.branch = "single wild fibre t_j=2, a=m-1-nu";
      out.bound = single_wild_bound(f.nu);
    } else {
      out.branch = "single wild fibre t_j=2, a=m-1-2nu or m-1-(p+1)nu";
      out.bound = f.nu == 1 ? formula("1+[4n/9]", 1, 0, {{1, 4, 9}})
                            : formula("1+[n/8]", 1, 0, {{1, 1, 8}});
    }
    return out;
  }
  out.branch = "outside analysis";
  return out;
}

inline CaseAssignment assign_case3(const FibrationNumericalType& type) {
  CaseAssignment out{CaseLabel::Case3, {}, {}};
  const auto& fs = type.fibres();
  std::size_t w = fs.size();
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i].t == 1) w = i;
  if (w == fs.size() || fs.size() < 2) {
    out.branch = "outside analysis";
    return out;
  }
  const auto& wild = fs[w];
  std::vector<int> others;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (i != w) others.push_back(fs[i].m);
  const bool full = wild.a == wild.m - 1;
  const auto third = formula("1-n+[2n/3]+[n/2]", 1, -1, {{1, 2, 3}, {1, 1, 2}});

  if (fs.size() >= 4 || (fs.size() == 3 && full)) {
    out.branch = "r>=4 or r=3 with a_1=m_1-1";
    out.bound = formula("1-n+3[n/2]", 1, -1, {{3, 1, 2}});
    return out;
  }
  if (fs.size() == 3) {
    if (wild.a == 0) {
      out.branch = "r=3, a_1=0";
      out.bound = third;
    } else if (std::max(others[0], others[1]) >= 3) {
      out.branch = "r=3, a_1>0, m_2 or m_3 >= 3";
      out.bound = third;
    } else {
      out.branch = "r=3, a_1>0, m_2=m_3=2";
      out.bound = formula("1-n+[n/4]+2[n/2]", 1, -1, {{1, 1, 4}, {2, 1, 2}});
    }
    return out;
  }
  // r == 2
  const int m2 = others[0];
  if (full) {
    out.branch = "r=2, a_1=m_1-1";
    out.bound = third;
    return out;
  }
  const int p = type.p().value();
  const auto q = ipow(p, wild.e);
  if (wild.nu == 1) {
    if (p == 2) {
      out.branch = "r=2, nu_1=1, p=2";
      out.bound = formula("1-n+[n/2]+[3n/4]", 1, -1, {{1, 1, 2}, {1, 3, 4}});
    } else if (p == 3) {
      out.branch = "r=2, nu_1=1, p=3";
      out.bound = formula("1-n+[7n/9]+[2n/3]", 1, -1, {{1, 7, 9}, {1, 2, 3}});
    } else {
      out.branch = "r=2, nu_1=1, p>=5";
      out.bound = formula("1-n+[3n/5]+[4n/5]", 1, -1, {{1, 3, 5}, {1, 4, 5}});
    }
  } else if (q >= 4) {
    out.branch = "r=2, nu_1>=2, p^e_1>=4";
    out.bound = formula("1-n+[5n/8]+[n/2]", 1, -1, {{1, 5, 8}, {1, 1, 2}});
  } else if (q == 3) {
    if (wild.nu == 2) {
      out.branch = "r=2, nu_1=2, p^e_1=3";
      out.bound = formula("1-n+[n/2]+[5n/6]", 1, -1, {{1, 1, 2}, {1, 5, 6}});
    } else {
      out.branch = "r=2, nu_1>=3, p^e_1=3";
      out.bound = formula("1-n+[5n/9]+[2n/3]", 1, -1, {{1, 5, 9}, {1, 2, 3}});
    }
  } else if (m2 == wild.nu) {
    out.branch = "r=2, p^e_1=2, m_2=nu_1";
    out.bound = formula("1-n+[3n/8]+[3n/4]", 1, -1, {{1, 3, 8}, {1, 3, 4}});
  } else {
    out.branch = "r=2, p^e_1=2, m_2=2nu_1";
    out.bound = formula("1-n+[n/3]+[5n/6]", 1, -1, {{1, 1, 3}, {1, 5, 6}});
  }
  return out;
}

inline CaseAssignment assign_case4(const FibrationNumericalType& type) {
  CaseAssignment out{CaseLabel::Case4, {}, {}};
  const auto ms = type.multiplicities();
  const auto r = ms.size();
  if (r >= 5) {
    out.branch = "r>=5";
    out.bound = formula("1-2n+5[n/2]", 1, -2, {{5, 1, 2}});
  } else if (r == 4) {
    out.branch = "r=4, worst (2,2,3,3)";
    out.bound = formula("1-2n+2[n/2]+2[2n/3]", 1, -2, {{2, 1, 2}, {2, 2, 3}});
  } else if (r == 3) {
    if (ms[0] >= 4) {
      out.branch = "r=3, m_1>=4, worst (4,4,4)";
      out.bound = formula("1-2n+3[3n/4]", 1, -2, {{3, 3, 4}});
    } else if (ms[0] == 3 && ms[1] % 3 == 0) {
      out.branch = "r=3, (3,3a,3a), worst (3,6,6)";
      out.bound = formula("1-2n+[2n/3]+2[5n/6]", 1, -2, {{1, 2, 3}, {2, 5, 6}});
    } else if (ms[0] == 3) {
      out.branch = "r=3, (3,c,3c), worst (3,4,12)";
      out.bound = formula("1-2n+[2n/3]+[3n/4]+[11n/12]", 1, -2, {{1, 2, 3}, {1, 3, 4}, {1, 11, 12}});
    } else if (ms[1] % 2 == 1) {
      out.branch = "r=3, (2,b,2b), worst (2,5,10)";
      out.bound = formula("1-2n+[n/2]+[4n/5]+[9n/10]", 1, -2, {{1, 1, 2}, {1, 4, 5}, {1, 9, 10}});
    } else {
      out.branch = "r=3, (2,2a,2a), worst (2,6,6)";
      out.bound = formula("1-2n+[n/2]+2[5n/6]", 1, -2, {{1, 1, 2}, {2, 5, 6}});
    }
  } else {
    out.branch = "outside analysis";
  }
  return out;
}

}  // namespace detail

inline CaseAssignment assign_case(const FibrationNumericalType& type) {
  if (type.g() >= 1) return {CaseLabel::PositiveGenus, "lower bounds only", std::nullopt};
  const int chi = type.chi();
  const int t = type.torsion_length();
  if (chi + t >= 3) return {CaseLabel::EasyChiTAtLeast3, "chi+t>=3", detail::formula("n+1", 1, 1, {})};
  if (chi == 2 && t == 0) {
    auto f = detail::formula("1+sum[n(m_j-1)/m_j]", 1, 0, {});
    for (const auto& fib : type.fibres()) f.terms.push_back({1, fib.m - 1, fib.m});
    return {CaseLabel::EasyChi2, "chi=2, t=0", f};
  }
  if (chi == 1 && t == 1) return detail::assign_case1(type);
  if (chi == 0 && t == 2) return detail::assign_case2(type);
  if (chi == 0 && t == 1) return detail::assign_case3(type);
  if (chi == 0 && t == 0) return detail::assign_case4(type);
  return {CaseLabel::Chi1T0, "chi=1, t=0 (not covered by the case split)", std::nullopt};
}

struct BoundViolation {
  std::int64_t n = 0;
  std::int64_t bound = 0;
  std::int64_t exact = 0;
};

// Compares the assigned bound with the exact P_n for n = 1 .. one common period.
inline std::vector<BoundViolation> replay_case_bound(const FibrationNumericalType& type,
                                                     const CaseAssignment& assignment,
                                                     std::int64_t max_period = 100000) {
  std::vector<BoundViolation> out;
  if (!assignment.bound || type.g() != 0) return out;
  const auto& f = *assignment.bound;
  const std::int64_t period = std::min(max_period, checked_lcm(type.period(), f.period()));
  for (std::int64_t n = 1; n <= period; ++n) {
    const auto exact = std::max<std::int64_t>(0, linear_part(type, n));
    const auto b = f.at(n);
    if (b > exact) out.push_back({n, b, exact});
  }
  return out;
}

}  // namespace pluri
