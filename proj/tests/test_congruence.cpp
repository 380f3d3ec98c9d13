#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pluri/congruence.hpp"

using namespace pluri;

TEST(ConditionU, KnownFixtures) {
  EXPECT_FALSE(check_condition_U({{2, 2, 2, 3}, {2, 2, 2, 3}, 4}));
  EXPECT_FALSE(check_condition_U({{8, 2}, {2, 2}, 1}));
  EXPECT_FALSE(check_condition_U({{8, 4}, {4, 4}, 1}));
  EXPECT_TRUE(check_condition_U({{2, 6, 6}, {2, 6, 6}, 1}));
  EXPECT_TRUE(check_condition_U({{2, 5, 10}, {2, 5, 10}, 3}));
}

TEST(ConditionU, Validation) {
  EXPECT_THROW(check_condition_U({{4, 4}, {3, 4}, 1}), InvalidInput);
  EXPECT_THROW(check_condition_U({{4, 4}, {4, 4}, 3}), InvalidInput);
  EXPECT_THROW(check_condition_U({{4}, {4, 4}, 1}), InvalidInput);
  EXPECT_THROW(check_condition_U_bruteforce({{25, 27}, {25, 27}, 1}, 100), OracleBoundExceeded);
}

TEST(ConditionU, ResidueOracleMatchesTupleSearch) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> mult(2, 9), count(1, 3);
  for (int iter = 0; iter < 400; ++iter) {
    ConditionUInstance inst;
    const int r = count(rng);
    for (int j = 0; j < r; ++j) {
      const int m = mult(rng);
      const auto ds = oracle::divisors(m);
      inst.m.push_back(m);
      inst.nu.push_back(ds[std::uniform_int_distribution<std::size_t>(0, ds.size() - 1)(rng)]);
    }
    inst.i = std::uniform_int_distribution<int>(1, r)(rng);
    const bool expected = oracle::condition_u_tuples(inst.m, inst.nu, inst.i);
    EXPECT_EQ(check_condition_U_bruteforce(inst), expected);
    EXPECT_EQ(check_condition_U(inst), expected);
  }
}

TEST(ConditionU, TameTriplesFollowDivisibilityClosure) {
  for (int a = 2; a <= 12; ++a)
    for (int b = a; b <= 12; ++b)
      for (int c = b; c <= 12; ++c) {
        bool all = true;
        for (int i = 1; i <= 3; ++i) all = all && check_condition_U({{a, b, c}, {a, b, c}, i});
        EXPECT_EQ(all, divisibility_closure_r3(a, b, c)) << a << "," << b << "," << c;
      }
}

TEST(ConditionU, CheckAllRequiresEllipticChiZero) {
  const FibrationNumericalType t(Characteristic(0), 0, 1, false, {FibreDatum::tame(2)});
  EXPECT_THROW(check_all_U(t), Unsupported);
}
