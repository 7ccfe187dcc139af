#include "flatsphere/geometry.hpp"

#include <algorithm>

namespace flatsphere {

double heron_area(double a, double b, double c) {
  std::array<double, 3> s{a, b, c};
  std::sort(s.begin(), s.end(), std::greater<>());
  const double x = s[0], y = s[1], z = s[2];
  const double p = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
  return 0.25 * std::sqrt(std::max(p, 0.0));
}

Vec2 place_apex(Vec2 p, Vec2 q, double from_p, double from_q) {
  const Vec2 base = q - p;
  const double len = base.norm();
  const double along = (len * len + from_p * from_p - from_q * from_q) / (2.0 * len);
  const double height = std::sqrt(std::max(from_p * from_p - along * along, 0.0));
  const Vec2 u = base / len;
  return p + u * along + perp(u) * height;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = ab.norm2();
  if (len2 == 0.0) return (p - a).norm();
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return (a + ab * t - p).norm();
}

bool segments_cross(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1, double eps) {
  const double o1 = orient(a0, a1, b0);
  const double o2 = orient(a0, a1, b1);
  const double o3 = orient(b0, b1, a0);
  const double o4 = orient(b0, b1, a1);
  const auto strict_opposite = [eps](double u, double v) {
    return (u > eps && v < -eps) || (u < -eps && v > eps);
  };
  return strict_opposite(o1, o2) && strict_opposite(o3, o4);
}

Vec2 line_intersection(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
  const Vec2 da = a1 - a0;
  const Vec2 db = b1 - b0;
  const double t = cross(b0 - a0, db) / cross(da, db);
  return a0 + da * t;
}

double incircle(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const Vec2 ad = a - d, bd = b - d, cd = c - d;
  const double alift = ad.norm2(), blift = bd.norm2(), clift = cd.norm2();
  return alift * cross(bd, cd) + blift * cross(cd, ad) + clift * cross(ad, bd);
}

}  // namespace flatsphere
