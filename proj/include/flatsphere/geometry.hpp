#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace flatsphere {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr bool operator==(const Vec2&) const = default;

  double norm() const { return std::hypot(x, y); }
  constexpr double norm2() const { return x * x + y * y; }
  double arg() const { return std::atan2(y, x); }
  Vec2 normalized() const { return *this / norm(); }
};

inline constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
inline constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline Vec2 unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Twice the signed area of (a, b, c); positive when counterclockwise.
inline constexpr double orient(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

// Angle between two nonzero vectors, in [0, pi].
inline double angle_between(Vec2 a, Vec2 b) { return std::atan2(std::abs(cross(a, b)), dot(a, b)); }

// Interior angle opposite side `opposite` in a triangle with the two adjacent sides `a`, `b`.
inline double corner_angle_from_sides(double a, double b, double opposite) {
  const double c = (a * a + b * b - opposite * opposite) / (2.0 * a * b);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

// Heron's formula in the numerically stable ordering (sides sorted descending).
double heron_area(double a, double b, double c);

// Third vertex of a triangle built on the directed base p -> q, lying to the left of the base,
// at distance `from_p` from p and `from_q` from q.
Vec2 place_apex(Vec2 p, Vec2 q, double from_p, double from_q);

// Euclidean distance from `p` to the closed segment [a, b].
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

// Proper crossing of two segments: interiors intersect in a single point, no endpoint touches.
bool segments_cross(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1, double eps);

// Intersection point of the lines through (a0, a1) and (b0, b1). Lines must not be parallel.
Vec2 line_intersection(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1);

// Positive iff d lies strictly inside the circumcircle of the counterclockwise triangle (a, b, c).
double incircle(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

}  // namespace flatsphere
