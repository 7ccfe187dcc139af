#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "flatsphere/surface.hpp"

namespace flatsphere::testkit {

struct Vec3 {
  double x, y, z;
};

// Closed oriented triangle mesh (faces counterclockwise seen from outside) as a flat sphere with
// side lengths taken from the 3D positions.
ConeSurface from_faces(const std::vector<Vec3>& points, const std::vector<std::array<int, 3>>& faces);

ConeSurface doubled_equilateral();  // side 1
ConeSurface doubled_right();        // angles pi/2, pi/3, pi/6
ConeSurface doubled_obtuse();       // (0,0), (1,0), (0.5,0.2)
ConeSurface doubled_square();       // unit square, zero gap
ConeSurface doubled_thin();         // isoceles, apex angle pi/10
ConeSurface tetrahedron();          // generic, four distinct cone angles

std::vector<Vec2> polygon_of(const std::string& name);

struct NamedSurface {
  std::string name;
  ConeSurface surface;
};

// Fixed shapes plus `random_count` seeded doubled convex polygons with 3..12 vertices.
std::vector<NamedSurface> corpus(int random_count = 6, std::uint64_t seed = 7);

ConeSurface random_doubled_polygon(std::uint64_t seed, int min_vertices = 3, int max_vertices = 12);

}  // namespace flatsphere::testkit
