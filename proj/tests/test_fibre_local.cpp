#include <gtest/gtest.h>

#include <set>

#include "pluri/fibre_local.hpp"

using namespace pluri;

TEST(FibreLocal, Exponent) {
  EXPECT_EQ(fibre_exponent(4, 1, 2, 1), 2);
  EXPECT_EQ(fibre_exponent(12, 4, 3, 2), 1);
  EXPECT_EQ(fibre_exponent(6, 6, 0, 0), 0);
  EXPECT_THROW(fibre_exponent(6, 4, 2, 1), Inconsistent);
  EXPECT_THROW(fibre_exponent(6, 1, 2, 1), Inconsistent);
  EXPECT_THROW(fibre_exponent(4, 1, 0, 1), Inconsistent);
}

TEST(FibreLocal, CoefficientsByTorsionLength) {
  EXPECT_EQ(admissible_coefficients(5, 5, 0, 0).values, (std::vector<int>{4}));
  EXPECT_EQ(admissible_coefficients(8, 2, 2, 1).values, (std::vector<int>{5, 7}));
  // t = 2, p = 3, nu = 1, m = 9: m-1, m-1-nu, m-1-2nu, m-1-4nu
  EXPECT_EQ(admissible_coefficients(9, 1, 3, 2).values, (std::vector<int>{4, 6, 7, 8}));
  EXPECT_EQ(admissible_coefficients(8, 2, 2, 2, true).values, (std::vector<int>{5, 7}));
  const auto loose = admissible_coefficients(8, 2, 2, 3);
  EXPECT_TRUE(loose.imprecise);
  EXPECT_EQ(loose.values, (std::vector<int>{1, 3, 5, 7}));
  EXPECT_EQ(admissible_coefficients(4, 1, 2, 2).values, (std::vector<int>{0, 1, 2, 3}));
  // m - 1 - (p+1) nu < 0 is dropped
  EXPECT_EQ(admissible_coefficients(3, 1, 3, 2).values, (std::vector<int>{0, 1, 2}));
}

TEST(FibreLocal, EveryCoefficientSatisfiesDivisibility) {
  for (int p : {2, 3, 5})
    for (int nu = 1; nu <= 4; ++nu)
      for (int e = 1; nu * static_cast<int>(ipow(p, e)) <= 64; ++e)
        for (int t = 1; t <= 3; ++t) {
          const int m = nu * static_cast<int>(ipow(p, e));
          for (int a : admissible_coefficients(m, nu, p, t).values) {
            EXPECT_EQ((a + 1) % nu, 0);
            EXPECT_LT(a, m);
            EXPECT_GE(a, 0);
          }
        }
}

TEST(FibreLocal, JumpProfilesRespectRules) {
  for (int p : {2, 3})
    for (int nu : {1, 2})
      for (int e = 1; e <= 2; ++e) {
        const int m = nu * static_cast<int>(ipow(p, e));
        const auto profiles = enumerate_jump_profiles(m, nu, p);
        ASSERT_FALSE(profiles.empty());
        for (const auto& jp : profiles) {
          ASSERT_EQ(jp.orders.size(), static_cast<std::size_t>(m));
          EXPECT_EQ(jp.orders[0], nu);
          ASSERT_FALSE(jp.jumps.empty());
          EXPECT_EQ(jp.jumps.front(), nu + 1);
          std::set<int> jumps(jp.jumps.begin(), jp.jumps.end());
          for (int n = 2; n <= m; ++n) {
            const auto prev = jp.orders[static_cast<std::size_t>(n - 2)];
            const auto cur = jp.orders[static_cast<std::size_t>(n - 1)];
            EXPECT_TRUE(cur == prev || cur == prev * p);
            if (cur != prev) {
              EXPECT_TRUE(jumps.count(n)) << "order step outside a jump at " << n;
            }
          }
          for (int j : jp.jumps) EXPECT_EQ((j - 1) % nu, 0);
          EXPECT_LE(jp.torsion_length(), max_jumps(m, nu));
          EXPECT_EQ(jp.h0(m), 1 + jp.torsion_length());
        }
      }
}

TEST(FibreLocal, SecondJumpCandidatesOccur) {
  const int p = 2, nu = 1, m = 8;
  const auto cands = second_jump_candidates(nu, p);
  EXPECT_EQ(cands, (std::set<int>{3, 4}));
  std::set<int> seen;
  for (const auto& jp : enumerate_jump_profiles(m, nu, p))
    if (jp.jumps.size() >= 2) seen.insert(jp.jumps[1]);
  for (int c : cands) EXPECT_TRUE(seen.count(c));
}

TEST(FibreLocal, RealizableJumpCounts) {
  EXPECT_TRUE(jump_count_realizable(4, 1, 3));
  EXPECT_FALSE(jump_count_realizable(4, 1, 4));
  EXPECT_FALSE(jump_count_realizable(4, 2, 2));
  EXPECT_TRUE(jump_count_realizable(2, 2, 0));
  for (int m : {4, 8, 9}) {
    const int p = m % 2 == 0 ? 2 : 3;
    std::set<int> counts;
    for (const auto& jp : enumerate_jump_profiles(m, 1, p)) counts.insert(jp.torsion_length());
    for (int t = 1; t <= max_jumps(m, 1); ++t) EXPECT_TRUE(counts.count(t)) << m << " " << t;
  }
}
