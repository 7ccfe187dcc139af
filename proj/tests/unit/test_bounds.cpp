#include <gtest/gtest.h>

#include <cmath>

#include "corpus.hpp"
#include "flatsphere/bounds.hpp"

using namespace flatsphere;

TEST(Bounds, ExampleValuesAtThree) {
  const auto b = compute_bounds(3, 1.0 / 3.0, 0);
  EXPECT_NEAR(b.simple_count_bound, 51914.5, 1e-6);
  EXPECT_NEAR(b.comb_length_bound, 45.0, 1e-12);
  EXPECT_NEAR(b.chords_bound, 7.5, 1e-12);
  EXPECT_NEAR(b.simple_length_bound, 81.87, 0.01);
  EXPECT_NEAR(b.diameter_bound, 7.2775, 1e-4);
  EXPECT_NEAR(b.delaunay_L2_bound, 11.0 / (2 * kPi), 1e-12);
  EXPECT_NEAR(b.delaunay_L2_bound, 1.7507, 1e-4);
  EXPECT_NEAR(b.monogon_angle_bound, kPi / 3, 1e-12);
  EXPECT_NEAR(b.s_bound, 180.0, 1e-9);

  const auto k1 = compute_bounds(3, 1.0 / 3.0, 1);
  EXPECT_NEAR(k1.s_bound, 540.0, 1e-9);
  EXPECT_NEAR(k1.count_bound_log2, 541.585, 1e-3);
  EXPECT_NEAR(si_comb_bound(3, 45.0, 4.0), 900.0, 1e-9);
}

TEST(Bounds, SimpleLengthMatchesZeroK) {
  // With k = 0 both length formulas reduce to the same expression up to a factor of 4.
  for (int n = 3; n < 12; ++n)
    for (double d : {0.01, 0.1, 0.3}) {
      const auto b = compute_bounds(n, d, 0);
      EXPECT_NEAR(b.length_bound, 4.0 * b.simple_length_bound, 1e-9 * b.length_bound);
    }
}

TEST(Bounds, MonotoneInParameters) {
  for (int n = 3; n < 15; ++n)
    for (double d = 0.02; d < 0.34; d += 0.04)
      for (std::int64_t k = 0; k < 50; k += 7) {
        const auto a = compute_bounds(n, d, k);
        const auto more_k = compute_bounds(n, d, k + 1);
        const auto more_n = compute_bounds(n + 1, d, k);
        const auto less_d = compute_bounds(n, d / 2, k);
        EXPECT_LT(a.length_bound, more_k.length_bound);
        EXPECT_LT(a.s_bound, more_k.s_bound);
        EXPECT_LT(a.length_bound, more_n.length_bound);
        EXPECT_LT(a.simple_count_bound_log2, more_n.simple_count_bound_log2);
        EXPECT_LT(a.length_bound, less_d.length_bound);
        EXPECT_LT(a.diameter_bound, less_d.diameter_bound);
        EXPECT_LT(a.simple_length_bound, less_d.simple_length_bound);
      }
}

TEST(Bounds, LogarithmsAgreeWithDirectValues) {
  for (int n = 3; n < 8; ++n)
    for (double d : {0.05, 0.2, 1.0 / 3.0}) {
      const auto b = compute_bounds(n, d, 0);
      const double l = 5.0 * n / d;
      const double direct = std::pow(l + 3 * n - 7, 3 * n - 6) / std::tgamma(3 * n - 6.0) + 3 * n - 6;
      EXPECT_NEAR(b.simple_count_bound / direct, 1.0, 1e-9);
      EXPECT_NEAR(b.simple_count_bound_log2, std::log2(direct), 1e-9);
    }
  const auto huge = compute_bounds(200, 1e-3, 0);
  EXPECT_TRUE(std::isfinite(huge.simple_count_bound_log2));
  EXPECT_GT(huge.simple_count_bound_log2, 1024.0);
}

TEST(Bounds, DomainErrors) {
  EXPECT_THROW(compute_bounds(2, 0.1, 0), Error);
  EXPECT_THROW(compute_bounds(3, 0.0, 0), Error);
  EXPECT_THROW(compute_bounds(3, 0.1, -1), Error);
}

TEST(Verify, EquilateralPasses) {
  const auto rep = verify_surface(testkit::doubled_equilateral(), {.node_budget = 200'000});
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.n, 3);
  EXPECT_NEAR(rep.delta, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(rep.original_area, std::sqrt(3.0) / 2, 1e-12);
  EXPECT_NEAR(rep.cutoff, 81.87, 0.01);
  EXPECT_NEAR(rep.diameter, 1.0745699318, 1e-9);
  EXPECT_GT(rep.simple_connections, 3);
  EXPECT_GT(rep.enumerated_to, 1.8);
  for (const char* name : {"delaunay", "edge-length", "diameter", "simple-comb-length", "simple-per-triangle",
                           "normal-distinct", "normal-round-trip", "simple-count"}) {
    SCOPED_TRACE(name);
    ASSERT_NE(rep.find(name), nullptr);
    EXPECT_TRUE(rep.find(name)->pass);
  }
}

TEST(Verify, ZeroGapIsRefused) {
  try {
    verify_surface(testkit::doubled_square());
    FAIL() << "expected a Domain error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Domain);
  }
}

TEST(Verify, PentagonPasses) {
  std::vector<Vec2> pent;
  for (int i = 0; i < 5; ++i) pent.push_back(unit_vector(kTwoPi * i / 5));
  const auto rep = verify_surface(generate_doubled_polygon(pent), {.node_budget = 200'000});
  EXPECT_EQ(rep.n, 5);
  EXPECT_NEAR(rep.delta, 0.2, 1e-12);
  EXPECT_TRUE(rep.pass());
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail << ' ' << c.witness;
}

TEST(Verify, ObtuseNeedsFlips) {
  const auto rep = verify_surface(testkit::doubled_obtuse(), {.node_budget = 100'000});
  EXPECT_GE(rep.flips, 1);
  EXPECT_TRUE(rep.pass());
}
