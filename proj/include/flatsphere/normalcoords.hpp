#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flatsphere/geodesic.hpp"
#include "flatsphere/surface.hpp"

namespace flatsphere {

// Normal coordinates of a simple saddle connection: crossings with each edge, plus the endpoint
// corners that pin down the two terminal arcs. Edge connections carry no counts.
struct NormalCoordinate {
  std::vector<int> counts;  // indexed by edge id
  CornerSlot start;
  CornerSlot end;
  // Both terminal arcs leave through the same side of one triangle: the start arc is the one
  // nearer the beginning of that side.
  bool start_first = true;
  int edge_id = -1;  // >= 0 for a connection running along an edge

  bool is_edge() const { return edge_id >= 0; }
  bool operator==(const NormalCoordinate&) const = default;
};

// Throws Error(Domain) for a non-simple connection.
NormalCoordinate encode_normal(const ConeSurface& s, const SaddleConnection& c);

// Rebuilds the crossing sequence. Throws Error(Inadmissible) when the counts fail the per-triangle
// matching conditions, are all zero, or describe more than the single arc from start to end.
std::vector<EdgeSlot> decode_normal(const ConeSurface& s, const NormalCoordinate& nc);

// Key that identifies the unoriented connection: counts and the unordered pair of end corners.
std::vector<std::int64_t> injectivity_key(const ConeSurface& s, const NormalCoordinate& nc);

struct CompositionCount {
  std::optional<std::uint64_t> exact;  // empty on overflow
  double log2_count = 0.0;
  double log2_bound = 0.0;
  bool below_bound = false;
};

// Weak compositions of k into 3(n-2) parts, against (k + 3n - 7)^(3n-7) / (3n-7)!.
CompositionCount weak_composition_count(std::int64_t k, int n);

}  // namespace flatsphere
