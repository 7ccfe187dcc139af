#include <gtest/gtest.h>

#include <cmath>

#include "flatsphere/annulus.hpp"
#include "flatsphere/geometry.hpp"
#include "oracles.hpp"

using namespace flatsphere;

TEST(Annulus, Modulus) {
  EXPECT_NEAR(modulus({1.0, std::exp(1.0), kPi / 2}), 2.0 / kPi, 1e-12);
  EXPECT_NEAR(modulus({1.0, 2.0, 1.0}), std::log(2.0), 1e-12);
  EXPECT_THROW(modulus({0.0, 1.0, 1.0}), Error);
}

TEST(Annulus, Regimes) {
  const AnnulusSpec a{1.0, 2.0, 1.0};
  auto r = classify_trajectory(a, AnnulusStart::Outer, 0.0);
  EXPECT_EQ(r.regime, AnnulusRegime::OuterExitsInner);
  EXPECT_EQ(r.exit, AnnulusBoundary::Inner);
  EXPECT_EQ(r.self_intersections, 0);

  r = classify_trajectory(a, AnnulusStart::Outer, kPi / 3);
  EXPECT_EQ(r.regime, AnnulusRegime::OuterReturnsOuter);
  EXPECT_NEAR(r.min_radius, std::sqrt(3.0), 1e-12);
  EXPECT_EQ(r.exit, AnnulusBoundary::Outer);

  for (double alpha : {0.0, 0.4, 1.2, kPi / 2}) {
    r = classify_trajectory(a, AnnulusStart::Inner, alpha);
    EXPECT_EQ(r.regime, AnnulusRegime::InnerStart);
    EXPECT_EQ(r.exit, AnnulusBoundary::Outer);
    EXPECT_EQ(r.self_intersections, 0);
  }
}

TEST(Annulus, SelfIntersectionExamples) {
  EXPECT_EQ(annulus_self_intersections({0.0, 1.0, kPi / 5}, kPi / 6), 3);
  EXPECT_EQ(annulus_self_intersections({0.0, 1.0, kPi / 2}, kPi / 6), 1);
  EXPECT_EQ(annulus_self_intersections({0.0, 1.0, 0.3}, kPi / 2), 0);
}

TEST(Annulus, BruteForceAgreesOnGrid) {
  for (int k = 2; k <= 12; ++k) {
    for (int j = 1; j <= 11; ++j) {
      const double theta = kPi / k, alpha = j * kPi / 24;
      EXPECT_EQ(annulus_self_intersections({0.0, 1.0, theta}, alpha), testkit::annulus_crossings_bruteforce(theta, alpha))
          << "k=" << k << " j=" << j;
    }
  }
}

TEST(Annulus, ScLowerBound) {
  EXPECT_NEAR(annulus_sc_lower_bound({0.0, 1.0, 0.7}), kPi / (2 * 0.7), 1e-12);
  EXPECT_NEAR(annulus_sc_lower_bound({1.0, 2.0, kPi / 6}), 2.0, 1e-12);
  EXPECT_LT(annulus_sc_lower_bound({2.0 * (1 - 1e-12), 2.0, 1.0}), 1e-5);
}

TEST(Annulus, MonogonFamily) {
  const auto a = monogon_family_annulus(kPi / 3, 1.0, 4.0);
  EXPECT_NEAR(a.theta, 2 * kPi / 3, 1e-12);
  EXPECT_NEAR(a.inner, 1 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(a.outer, 2 / std::sqrt(3.0), 1e-12);
  EXPECT_THROW(monogon_family_annulus(kPi / 3, 1.0, 1.5), Error);
  EXPECT_THROW(monogon_family_annulus(kPi / 3, 1.0, 2.0), Error);
}
