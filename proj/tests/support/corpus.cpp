#include "corpus.hpp"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace flatsphere::testkit {

ConeSurface from_faces(const std::vector<Vec3>& p, const std::vector<std::array<int, 3>>& faces) {
  auto dist = [&](int a, int b) {
    return std::sqrt((p[a].x - p[b].x) * (p[a].x - p[b].x) + (p[a].y - p[b].y) * (p[a].y - p[b].y) +
                     (p[a].z - p[b].z) * (p[a].z - p[b].z));
  };
  std::vector<TriangleGeom> tris;
  std::vector<int> partner(3 * faces.size(), -1);
  std::map<std::pair<int, int>, int> open;
  for (std::size_t t = 0; t < faces.size(); ++t) {
    const auto& f = faces[t];
    TriangleGeom g;
    for (int e = 0; e < 3; ++e) {
      const int a = f[e], b = f[(e + 1) % 3];
      g.len[e] = dist(a, b);
      const int slot = static_cast<int>(3 * t + e);
      const auto it = open.find({b, a});
      if (it != open.end()) {
        partner[slot] = it->second;
        partner[it->second] = slot;
        open.erase(it);
      } else {
        open[{a, b}] = slot;
      }
    }
    tris.push_back(g);
  }
  if (!open.empty()) throw std::runtime_error("mesh is not closed");
  return validated(ConeSurface(std::move(tris), std::move(partner)));
}

std::vector<Vec2> polygon_of(const std::string& name) {
  if (name == "equilateral") return {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
  if (name == "right") return {{0, 0}, {std::sqrt(3.0), 0}, {0, 1}};
  if (name == "obtuse") return {{0, 0}, {1, 0}, {0.5, 0.2}};
  if (name == "square") return {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  if (name == "thin") {
    const double s = std::sin(kPi / 20), c = std::cos(kPi / 20);
    return {{-s, 0}, {s, 0}, {0, c}};
  }
  throw std::invalid_argument(name);
}

ConeSurface doubled_equilateral() { return generate_doubled_polygon(polygon_of("equilateral")); }
ConeSurface doubled_right() { return generate_doubled_polygon(polygon_of("right")); }
ConeSurface doubled_obtuse() { return generate_doubled_polygon(polygon_of("obtuse")); }
ConeSurface doubled_square() { return generate_doubled_polygon(polygon_of("square")); }
ConeSurface doubled_thin() { return generate_doubled_polygon(polygon_of("thin")); }

ConeSurface tetrahedron() {
  const std::vector<Vec3> p{{0, 0, 0}, {1, 0, 0}, {0.3, 0.9, 0}, {0.4, 0.3, 0.8}};
  // Outward orientation: the apex 3 lies above the base 0,1,2.
  return from_faces(p, {{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {2, 0, 3}});
}

ConeSurface random_doubled_polygon(std::uint64_t seed, int min_vertices, int max_vertices) {
  std::mt19937_64 rng(seed);
  const int m = std::uniform_int_distribution<int>(min_vertices, max_vertices)(rng);
  return generate_doubled_polygon(random_convex_polygon(rng, m));
}

std::vector<NamedSurface> corpus(int random_count, std::uint64_t seed) {
  std::vector<NamedSurface> out{{"equilateral", doubled_equilateral()}, {"right", doubled_right()},
                                {"obtuse", doubled_obtuse()},           {"square", doubled_square()},
                                {"thin", doubled_thin()},               {"tetrahedron", tetrahedron()}};
  for (int i = 0; i < random_count; ++i)
    out.push_back({"random-" + std::to_string(i), random_doubled_polygon(seed + i)});
  return out;
}

}  // namespace flatsphere::testkit
