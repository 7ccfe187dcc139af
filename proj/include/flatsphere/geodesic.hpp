#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "flatsphere/geometry.hpp"
#include "flatsphere/surface.hpp"

namespace flatsphere {

struct VertexAnchor {
  CornerSlot corner;
};

struct PointAnchor {
  int tri = 0;
  Vec2 point;  // chart coordinates of `tri`
};

using Anchor = std::variant<VertexAnchor, PointAnchor>;

enum class TraceStatus { Completed, HitVertex, LengthExhausted };

std::string_view to_string(TraceStatus s);

// One straight pass through a triangle, in that triangle's chart. Perimeter positions locate
// boundary endpoints: corner i sits at i, the point at fraction f along side e at e + f; interior
// endpoints carry -1.
struct Segment {
  int tri = 0;
  Vec2 start;
  Vec2 end;
  double start_perimeter = -1.0;
  double end_perimeter = -1.0;

  double length() const { return (end - start).norm(); }
};

struct Trajectory {
  std::vector<Segment> segments;
  // crossings[i] is the side of segments[i].tri through which segment i leaves.
  std::vector<EdgeSlot> crossings;
  Anchor start;
  std::optional<CornerSlot> end_corner;
  double length = 0.0;
  TraceStatus status = TraceStatus::Completed;
  // Runs inside a single side of the triangulation, vertex to vertex or part of the way.
  bool along_edge = false;
  // Segment endpoints and triangles laid out in one plane (chart of the first triangle).
  std::vector<Vec2> developed;
  std::vector<std::array<Vec2, 3>> developed_triangles;
  std::uint64_t surface = 0;
};

struct TraceOptions {
  double max_length = 1.0;
  // Hard cap on the number of triangle passes; exceeding it throws BudgetExceeded.
  std::int64_t max_segments = 10'000'000;
};

// Straight-line continuation by unfolding. A vertex start takes `direction` counterclockwise from
// side `corner` of the start corner, in [0, cone angle); a point start takes it in the chart of
// the start triangle. A line passing within 1e-9 x (longest side of the triangle) of a vertex
// ends there with status HitVertex.
Trajectory trace(const ConeSurface& s, const Anchor& start, double direction, const TraceOptions& opt);

// Straight segment between two chart points of the same triangle.
Trajectory trace_between(const ConeSurface& s, int tri, Vec2 from, Vec2 to);

// The straight path from a start corner through the given side crossings to an end corner.
// Throws Error(Mismatch) when the developed line does not pass through every listed side.
Trajectory develop_path(const ConeSurface& s, CornerSlot start, std::span<const EdgeSlot> crossings,
                        CornerSlot end);

struct SelfCrossing {
  int first = 0;   // index of the earlier segment
  int second = 0;  // index of the later segment
  Vec2 point;      // chart coordinates of the shared triangle
  double first_position = 0.0;  // arc length from the start of the trajectory
  double second_position = 0.0;
};

// Transverse pairs of passes through a common triangle or through one point of an edge, ordered by
// (first, second). An edge point is reported in the chart of the earlier pass.
std::vector<SelfCrossing> self_crossings(const Trajectory& t);
int count_self_intersections(const Trajectory& t);

// Number of Delaunay-edge crossings plus one; zero for paths inside an edge. The trajectory must
// have been traced on `d` itself.
int combinatorial_length(const Trajectory& t, const ConeSurface& d);

// Passes of t through each triangle, indexed by triangle.
std::vector<int> per_triangle_crossings(const Trajectory& t, const ConeSurface& s);

struct Monogon {
  double interior_angle = 0.0;
  double loop_length = 0.0;
  SelfCrossing crossing;
};

// Loops cut out by a self-crossing with no further self-crossing strictly inside them.
std::vector<Monogon> extract_monogons(const Trajectory& t);

// ---------------------------------------------------------------------------------------------
// Saddle connections

struct SaddleConnection {
  CornerSlot start;
  CornerSlot end;
  std::vector<EdgeSlot> crossings;
  double length = 0.0;
  int start_vertex = 0;
  int end_vertex = 0;

  bool is_edge() const { return crossings.empty(); }
};

struct EnumerationOptions {
  double max_length = 1.0;
  std::int64_t node_budget = 10'000'000;
  // 0 picks std::thread::hardware_concurrency(); 1 runs on the calling thread.
  int threads = 0;
  std::optional<double> time_budget_seconds;
};

struct EnumerationResult {
  std::vector<SaddleConnection> connections;
  bool truncated = false;
  std::string truncation_reason;
  std::int64_t nodes = 0;
  double max_length = 0.0;
};

// Every unoriented saddle connection of length <= max_length, once each, sorted by length and then
// by the canonical (start corner, crossings, end corner) key. A truncated result is incomplete.
EnumerationResult enumerate_saddle_connections(const ConeSurface& s, const EnumerationOptions& opt);

// Lexicographically smaller of the two orientations' (start, crossings..., end) index sequences.
std::vector<int> canonical_key(const ConeSurface& s, const SaddleConnection& c);

Trajectory to_trajectory(const ConeSurface& s, const SaddleConnection& c);

}  // namespace flatsphere
