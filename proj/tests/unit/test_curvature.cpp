#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "flatsphere/curvature.hpp"
#include "oracles.hpp"

using namespace flatsphere;

TEST(Gap, EquilateralProfile) {
  const std::vector<double> k{2.0 / 3, 2.0 / 3, 2.0 / 3};
  EXPECT_NEAR(curvature_gap(k), 1.0 / 3, 1e-12);
}

TEST(Gap, FourHalves) {
  const std::vector<double> k{0.5, 0.5, 0.5, 0.5};
  EXPECT_NEAR(curvature_gap(k), 0.0, 1e-15);
}

TEST(Gap, SharpFamilyExample) {
  const std::vector<double> k{0.2, 0.2, 0.2, -0.2, -0.2, 0.9, 0.9};
  EXPECT_NEAR(curvature_gap(k), 0.1, 1e-12);
  EXPECT_NEAR(testkit::gap_by_subsets(k), 0.1, 1e-12);
}

TEST(Gap, SharpFamilyGenerator) {
  const auto k = sharp_family_curvatures(3, 0.2);
  ASSERT_EQ(k.size(), 7u);
  double sum = 0.0;
  for (double x : k) sum += x;
  EXPECT_NEAR(sum, 2.0, 1e-12);
}

TEST(Gap, MatchesSubsetOracleOnRandomProfiles) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 14)(rng);
    std::vector<double> k(n);
    std::uniform_real_distribution<double> u(-0.8, 0.95);
    double sum = 0.0;
    for (int i = 0; i + 1 < n; ++i) sum += k[i] = u(rng) * 2.0 / n;
    k[n - 1] = 2.0 - sum;
    if (k[n - 1] >= 1.0) continue;
    EXPECT_NEAR(curvature_gap(k), testkit::gap_by_subsets(k), 1e-12);
  }
}

TEST(Gap, AtMostOneThirdOnCorpus) {
  for (const auto& [name, s] : testkit::corpus(10)) {
    EXPECT_LE(curvature_gap(curvatures(s)), 1.0 / 3 + 1e-12) << name;
  }
}

TEST(Gap, Preconditions) {
  const std::vector<double> bad_sum{0.5, 0.5, 0.5};
  EXPECT_THROW(curvature_gap(bad_sum), Error);
  const std::vector<double> too_big{1.0, 0.5, 0.5};
  EXPECT_THROW(curvature_gap(too_big), Error);
  std::vector<double> many(31, 2.0 / 31);
  try {
    curvature_gap(many);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(Gap, LargeProfileUsesThreads) {
  // 26 values crosses the threaded threshold; compare with a structured answer.
  std::vector<double> k(26, 2.0 / 26);
  // Subsets of 13 sum to exactly 1.
  EXPECT_NEAR(curvature_gap(k), 0.0, 1e-12);
  k[0] += 0.01;
  k[1] -= 0.01;
  EXPECT_NEAR(curvature_gap(k), 0.0, 1e-12);
}

TEST(CubicCase, Examples) {
  const std::vector<double> eq{2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3};
  EXPECT_TRUE(cubic_case_check(eq));
  const std::vector<double> sq{kPi, kPi, kPi, kPi};
  EXPECT_FALSE(cubic_case_check(sq));
  const std::vector<double> mixed{2 * kPi, 2 * kPi / 3, 10 * kPi / 3};
  EXPECT_TRUE(cubic_case_check(mixed));
}

TEST(Profile, CarriesGap) {
  const auto p = make_profile({2.0 / 3, 2.0 / 3, 2.0 / 3});
  EXPECT_NEAR(p.gap, 1.0 / 3, 1e-12);
  EXPECT_THROW(make_profile({1.0, 1.0}), Error);
}
