#pragma once

#include <span>
#include <vector>

#include "flatsphere/geodesic.hpp"

namespace flatsphere::testkit {

// Minimum of |1 - sum| over all subsets, one mask at a time.
double gap_by_subsets(std::span<const double> k);

// Self-intersections of the chord of the unit circle leaving the boundary at angle alpha to the
// radius, on the cone of angle theta (R = 0). Works in the universal cover: the chord meets its
// copy rotated by m*theta only where the unwrapped polar angles agree.
int annulus_crossings_bruteforce(double theta, double alpha);

struct FanConnection {
  std::vector<int> key;  // canonical key, as in the library
  double length;
};

// Saddle connections of length <= max_length found by tracing a fan of rays from every corner at
// the given angular step, plus all triangulation edges. A connection shows up where consecutive
// rays split around a vertex.
std::vector<FanConnection> fan_oracle(const ConeSurface& s, double max_length, double step = 1e-4);

}  // namespace flatsphere::testkit
