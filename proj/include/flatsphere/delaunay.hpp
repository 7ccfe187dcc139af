#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "flatsphere/geodesic.hpp"
#include "flatsphere/surface.hpp"

namespace flatsphere {

// Incircle test on the quadrilateral formed by unfolding both triangles of an edge. Values within
// `tol` of cocircular count as Delaunay, and an edge folded inside one triangle always is.
bool is_locally_delaunay(const ConeSurface& s, EdgeSlot e, double tol = kDefaultTolerance);

bool is_delaunay(const ConeSurface& s, double tol = kDefaultTolerance);

struct FlipOptions {
  // Negative means 10 * E^2 for E edges.
  std::int64_t max_flips = -1;
  double tol = kDefaultTolerance;
};

struct FlipReport {
  ConeSurface surface;
  std::int64_t flips = 0;
  std::int64_t cap = 0;
};

// Flips the lowest-numbered non-Delaunay edge until none is left. Vertex labels are kept.
// Throws Error(BudgetExceeded) past the flip cap.
FlipReport delaunayize(const ConeSurface& s, const FlipOptions& opt = {});

struct EdgeBoundReport {
  double threshold_sq = 0.0;  // bound on the squared edge length
  double max_sq = 0.0;
  std::vector<int> violations;  // edge ids
  bool pass = true;
};

// Squared edge lengths of a unit-area Delaunay surface against 4/pi + 1/(2 pi delta).
EdgeBoundReport check_edge_length_bound(const ConeSurface& s, double delta);

// All-pairs shortest path lengths between vertices along triangulation edges.
std::vector<std::vector<double>> edge_graph_distances(const ConeSurface& s);

// Largest entry of edge_graph_distances().
double cone_graph_diameter(const ConeSurface& s);

struct MarkedSurface {
  ConeSurface surface;
  std::vector<int> marked;  // vertex id of each marked point, in input order
};

// Adds each point (strictly inside its triangle of `s`) as a vertex of cone angle 2 pi by splitting
// the triangle containing it into three. Existing vertex ids are kept.
MarkedSurface mark_points(const ConeSurface& s, std::span<const PointAnchor> points);

}  // namespace flatsphere
