#include <gtest/gtest.h>

#include "flatsphere/geometry.hpp"

using namespace flatsphere;

TEST(Geometry, ApexLiesLeftAtRequestedDistances) {
  const Vec2 p{0, 0}, q{1, 0};
  const Vec2 a = place_apex(p, q, 1.0, 1.0);
  EXPECT_NEAR(a.x, 0.5, 1e-15);
  EXPECT_NEAR(a.y, std::sqrt(3.0) / 2, 1e-15);
  const Vec2 b = place_apex(q, p, 1.0, 1.0);
  EXPECT_LT(b.y, 0.0);
}

TEST(Geometry, CornerAngleOfRightTriangle) {
  EXPECT_NEAR(corner_angle_from_sides(3, 4, 5), kPi / 2, 1e-15);
  EXPECT_NEAR(corner_angle_from_sides(1, 1, 1), kPi / 3, 1e-15);
}

TEST(Geometry, HeronMatchesShoelace) {
  EXPECT_NEAR(heron_area(3, 4, 5), 6.0, 1e-14);
  EXPECT_NEAR(heron_area(1, 1, 1), std::sqrt(3.0) / 4, 1e-15);
}

TEST(Geometry, ProperCrossingExcludesSharedEndpoints) {
  EXPECT_TRUE(segments_cross({0, 0}, {1, 1}, {0, 1}, {1, 0}, 1e-15));
  EXPECT_FALSE(segments_cross({0, 0}, {1, 1}, {1, 1}, {2, 0}, 1e-15));
  EXPECT_FALSE(segments_cross({0, 0}, {1, 0}, {0, 1}, {1, 1}, 1e-15));
}

TEST(Geometry, IncircleSign) {
  const Vec2 a{0, 0}, b{1, 0}, c{0, 1};
  EXPECT_GT(incircle(a, b, c, {0.5, 0.5}), 0.0);
  EXPECT_LT(incircle(a, b, c, {2, 2}), 0.0);
  EXPECT_NEAR(incircle(a, b, c, {1, 1}), 0.0, 1e-15);
}

TEST(Geometry, PointSegmentDistance) {
  EXPECT_DOUBLE_EQ(point_segment_distance({0.5, 1}, {0, 0}, {1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({2, 0}, {0, 0}, {1, 0}), 1.0);
}
