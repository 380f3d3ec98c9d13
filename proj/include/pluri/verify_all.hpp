#pragma once

// Bounded verification of the four statements over every admissible type.
//
// Within a stratum the quantity 1 + n d + (floor sums of the fibres chosen
// so far) is a lower bound for L(n) of every completion of the multiset,
// because further fibres only add nonnegative floor terms and d is fixed.
// When that bound already satisfies all statements (and P_13 >= 2), the
// subtree is discharged without visiting its types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cases.hpp"
#include "enumerate.hpp"
#include "theorem.hpp"

namespace pluri {

struct ExtremeStat {
  int value = 0;
  std::int64_t count = 0;
  std::vector<FibrationNumericalType> examples;  // smallest few, canonical order

  static constexpr std::size_t kExamples = 25;

  void offer(int v, const FibrationNumericalType& type) {
    if (v < value) return;
    if (v > value) {
      value = v;
      count = 0;
      examples.clear();
    }
    ++count;
    examples.push_back(type);
    trim();
  }

  void merge(const ExtremeStat& other) {
    if (other.value < value || other.count == 0) return;
    if (other.value > value) {
      *this = other;
      return;
    }
    count += other.count;
    examples.insert(examples.end(), other.examples.begin(), other.examples.end());
    trim();
  }

 private:
  void trim() {
    std::sort(examples.begin(), examples.end());
    if (examples.size() > kExamples) examples.resize(kExamples);
  }
};

struct Counterexample {
  FibrationNumericalType type;
  MainTheoremReport report;
};

struct VerifyAllReport {
  EnumerationBounds bounds;
  bool pruned = true;
  std::int64_t types_verified = 0;
  std::int64_t conservative_types = 0;
  std::int64_t existence_unknown_types = 0;
  std::int64_t nodes_visited = 0;
  std::int64_t subtrees_discharged = 0;
  std::vector<Counterexample> counterexamples;
  std::map<std::string, std::int64_t> cases;
  ExtremeStat first_nonzero;  // least n >= 1 with P_n >= 1
  ExtremeStat first_ge2;      // least n >= 1 with P_n >= 2
  std::vector<FibrationNumericalType> p13_le_1;
  std::int64_t p13_le_1_count = 0;
  int discharged_first_nonzero_bound = 0;
  int discharged_first_ge2_bound = 0;

  static constexpr std::size_t kListCap = 200;

  // Exact when no discharged subtree could hold a type with a larger witness.
  bool extremes_exact() const {
    return discharged_first_nonzero_bound <= first_nonzero.value &&
           discharged_first_ge2_bound <= first_ge2.value;
  }

  void merge(const VerifyAllReport& o) {
    types_verified += o.types_verified;
    conservative_types += o.conservative_types;
    existence_unknown_types += o.existence_unknown_types;
    nodes_visited += o.nodes_visited;
    subtrees_discharged += o.subtrees_discharged;
    counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
    std::sort(counterexamples.begin(), counterexamples.end(),
              [](const auto& x, const auto& y) { return x.type < y.type; });
    for (const auto& [k, v] : o.cases) cases[k] += v;
    first_nonzero.merge(o.first_nonzero);
    first_ge2.merge(o.first_ge2);
    p13_le_1.insert(p13_le_1.end(), o.p13_le_1.begin(), o.p13_le_1.end());
    std::sort(p13_le_1.begin(), p13_le_1.end());
    if (p13_le_1.size() > kListCap) p13_le_1.resize(kListCap);
    p13_le_1_count += o.p13_le_1_count;
    discharged_first_nonzero_bound = std::max(discharged_first_nonzero_bound, o.discharged_first_nonzero_bound);
    discharged_first_ge2_bound = std::max(discharged_first_ge2_bound, o.discharged_first_ge2_bound);
  }
};

namespace detail {

inline std::int64_t stratum_bound(const Stratum& s, const WalkNode& node, int n) {
  const std::int64_t g = s.g;
  const std::int64_t chi_t = s.chi + s.t;
  std::int64_t v = 0;
  if (g == 0) v = node.linear(n);
  else if (chi_t >= 1) v = g + n - 1;
  else if (g >= 2) v = (2 * std::int64_t{n} - 1) * (g - 1);
  else v = node.sums[static_cast<std::size_t>(n)];
  return std::max<std::int64_t>(0, v);
}

inline LinearForm node_form(const Stratum& s, const WalkNode& node) {
  return LinearForm(s.delta(), node.fibres);
}

struct NodeStatements {
  bool stmt1 = false;
  std::optional<int> w1;
  std::optional<int> w2;
  bool p13_ge2 = false;
  bool stmt4 = false;
};

inline NodeStatements node_statements(const Stratum& s, const WalkNode& node, bool need_tail) {
  NodeStatements st;
  std::array<std::int64_t, kTrackedN + 1> v{};
  for (int n = 1; n <= kTrackedN; ++n) v[static_cast<std::size_t>(n)] = stratum_bound(s, node, n);
  st.stmt1 = v[12] >= 2;
  for (int n = 1; n <= 4 && !st.w1; ++n)
    if (v[static_cast<std::size_t>(n)] >= 1) st.w1 = n;
  for (int n = 1; n <= 8 && !st.w2; ++n)
    if (v[static_cast<std::size_t>(n)] >= 2) st.w2 = n;
  st.p13_ge2 = v[13] >= 2;
  if (need_tail && st.stmt1 && st.w1 && st.w2) {
    st.stmt4 = s.g == 0 ? tail_holds(node_form(s, node), kTailThreshold, 2) : v[14] >= 2;
  }
  return st;
}

// Least n >= 1 with P_n (or its bound) >= target; exists since slope > 0.
inline int first_index_reaching(const FibrationNumericalType& type, std::int64_t target) {
  if (type.g() != 0) {
    for (std::int64_t n = 1; n < 100000; ++n)
      if (plurigenus(type, n).value >= target) return static_cast<int>(n);
    return -1;
  }
  const LinearForm form(type);
  for (std::int64_t n = 1;; ++n)
    if (form.at(n) >= target) return static_cast<int>(n);
}

inline void process_type(const FibrationNumericalType& type, const NodeStatements& st,
                         VerifyAllReport& rep) {
  ++rep.types_verified;
  if (type.g() != 0) ++rep.conservative_types;
  if (type.existence_unknown()) ++rep.existence_unknown_types;
  ++rep.cases[to_string(assign_case(type).label)];

  const bool holds = st.stmt1 && st.w1 && st.w2 && st.stmt4;
  if (!holds) rep.counterexamples.push_back({type, verify_main_theorem(type)});

  rep.first_nonzero.offer(st.w1 ? *st.w1 : first_index_reaching(type, 1), type);
  rep.first_ge2.offer(st.w2 ? *st.w2 : first_index_reaching(type, 2), type);
  if (type.g() == 0 && !st.p13_ge2) {
    ++rep.p13_le_1_count;
    if (rep.p13_le_1.size() < VerifyAllReport::kListCap) rep.p13_le_1.push_back(type);
  }
}

inline VerifyAllReport verify_stratum(const Stratum& s, const EnumerationBounds& b, bool prune) {
  VerifyAllReport rep;
  rep.bounds = b;
  rep.pruned = prune;
  const auto kinds = fibre_kinds(s, b);
  const auto variants = quasi_variants(s, b);

  walk_stratum(s, kinds, b.max_fibres, b.max_fibre_torsion, [&](const WalkNode& node) {
    ++rep.nodes_visited;
    const auto st = node_statements(s, node, true);
    if (node.is_type()) {
      for (bool quasi : variants) {
        auto type = node.make_type(quasi);
        if (!admissible_from_kinds(type)) continue;
        if (existence_unknown_configuration(type)) type = type.with_existence_unknown(true);
        process_type(type, st, rep);
      }
    }
    const bool discharge = prune && st.stmt1 && st.w1 && st.w2 && st.stmt4 && st.p13_ge2;
    if (!discharge) return true;
    if (node.depth() < b.max_fibres) {
      ++rep.subtrees_discharged;
      rep.discharged_first_nonzero_bound = std::max(rep.discharged_first_nonzero_bound, *st.w1);
      rep.discharged_first_ge2_bound = std::max(rep.discharged_first_ge2_bound, *st.w2);
    }
    return false;
  });
  std::sort(rep.p13_le_1.begin(), rep.p13_le_1.end());
  return rep;
}

}  // namespace detail

// Runs the four statements over the bounded space; strata are distributed
// over `jobs` threads and merged in stratum order, so the result does not
// depend on `jobs`.
inline VerifyAllReport verify_all(const EnumerationBounds& b, int jobs = 1, bool prune = true) {
  const auto all = strata(b);
  std::vector<VerifyAllReport> parts(all.size());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(all.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < all.size(); ++i) parts[i] = detail::verify_stratum(all[i], b, prune);
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        for (std::size_t i = static_cast<std::size_t>(w); i < all.size(); i += static_cast<std::size_t>(jobs))
          parts[i] = detail::verify_stratum(all[i], b, prune);
      });
    for (auto& t : workers) t.join();
  }
  VerifyAllReport total;
  total.bounds = b;
  total.pruned = prune;
  for (const auto& part : parts) total.merge(part);
  return total;
}

}  // namespace pluri
