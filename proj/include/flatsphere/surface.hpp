#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flatsphere/error.hpp"
#include "flatsphere/geometry.hpp"

namespace flatsphere {

inline constexpr double kDefaultTolerance = 1e-9;

// Edge slot (t, e): side e of triangle t, joining corners e and (e + 1) mod 3.
struct EdgeSlot {
  int tri = 0;
  int edge = 0;

  constexpr int index() const { return 3 * tri + edge; }
  static constexpr EdgeSlot from_index(int i) { return {i / 3, i % 3}; }
  constexpr auto operator<=>(const EdgeSlot&) const = default;
};

struct CornerSlot {
  int tri = 0;
  int corner = 0;

  constexpr int index() const { return 3 * tri + corner; }
  static constexpr CornerSlot from_index(int i) { return {i / 3, i % 3}; }
  constexpr auto operator<=>(const CornerSlot&) const = default;
};

constexpr int next3(int i) { return i == 2 ? 0 : i + 1; }
constexpr int prev3(int i) { return i == 0 ? 2 : i - 1; }

struct TriangleGeom {
  std::array<double, 3> len{};  // len[e] is the length of side e
};

struct ConePoint {
  int id = 0;
  double angle = 0.0;      // radians
  double curvature = 0.0;  // (2pi - angle) / 2pi
};

// A flat sphere given by Euclidean triangles and an orientation-reversing pairing of their sides.
//
// Construction never throws: derived topology (vertex classes, edge ids) is only computed when the
// pairing is a fixed-point-free involution. Use validate_surface() to check all invariants, and
// validated() to obtain a surface the geometric operations accept.
class ConeSurface {
public:
  ConeSurface() = default;
  // partner[s] is the slot index glued to slot index s, or -1 when undeclared.
  ConeSurface(std::vector<TriangleGeom> triangles, std::vector<int> partner);

  int triangle_count() const { return static_cast<int>(triangles_.size()); }
  int slot_count() const { return 3 * triangle_count(); }
  int edge_count() const { return static_cast<int>(edge_slots_.size()); }
  int vertex_count() const { return vertex_count_; }

  const TriangleGeom& triangle(int t) const { return triangles_[t]; }
  std::span<const TriangleGeom> triangles() const { return triangles_; }
  double length(EdgeSlot s) const { return triangles_[s.tri].len[s.edge]; }

  int partner_index(int slot) const { return partner_[slot]; }
  EdgeSlot partner(EdgeSlot s) const { return EdgeSlot::from_index(partner_[s.index()]); }
  std::span<const int> partners() const { return partner_; }

  bool has_topology() const { return vertex_count_ > 0; }
  bool is_valid() const { return valid_; }

  // Vertex class of a corner; requires has_topology().
  int vertex_of(CornerSlot c) const { return corner_vertex_[c.index()]; }
  std::span<const int> corner_vertices() const { return corner_vertex_; }
  // Corners of vertex v in counterclockwise order around the vertex.
  const std::vector<CornerSlot>& corners_of(int v) const { return vertex_corners_[v]; }
  // Edge id in [0, edge_count()) shared by both slots of an edge; ids follow the smaller slot index.
  int edge_id(EdgeSlot s) const { return slot_edge_[s.index()]; }
  // The smaller slot of edge `id`.
  EdgeSlot edge_slot(int id) const { return EdgeSlot::from_index(edge_slots_[id]); }

  // Corner where the counterclockwise walk around a vertex continues after corner c.
  CornerSlot next_corner_ccw(CornerSlot c) const;

  double corner_angle(CornerSlot c) const;
  double triangle_area(int t) const;
  double area() const;
  // Chart of triangle t: corner 0 at the origin, side 0 along +x, corner 2 in the upper half plane.
  std::array<Vec2, 3> chart(int t) const;
  double max_side(int t) const;

  // Corner vertex labels survive edge flips; the flip keeps both triangle indices.
  void flip_edge(EdgeSlot s);
  // Renames vertices so corner c belongs to vertex corner_labels[c]. The labels must be a
  // bijection onto [0, vertex_count()) that is constant on every vertex class.
  void relabel_vertices(std::span<const int> corner_labels);
  // Uniform scaling of every side length.
  void scale(double factor);

  // 64-bit digest of lengths and gluing, used to tie traced paths to the surface they live on.
  std::uint64_t fingerprint() const;

  friend ConeSurface validated(ConeSurface s, double tol);

private:
  void build_topology();

  std::vector<TriangleGeom> triangles_;
  std::vector<int> partner_;
  std::vector<int> corner_vertex_;
  std::vector<std::vector<CornerSlot>> vertex_corners_;
  std::vector<int> slot_edge_;
  std::vector<int> edge_slots_;
  int vertex_count_ = 0;
  bool valid_ = false;
};

struct ValidationCheck {
  std::string name;
  bool pass = true;
  std::string reason;  // machine-readable code, empty when passing
  std::vector<int> slots;
};

struct ValidationReport {
  bool pass = true;
  double gauss_bonnet_residual = 0.0;
  std::vector<ValidationCheck> checks;

  const ValidationCheck* find(std::string_view name) const;
};

ConeSurface parse_surface(std::string_view text);
std::string serialize_surface(const ConeSurface& s);

ValidationReport validate_surface(const ConeSurface& s, double tol = kDefaultTolerance);
// Throws Error(InvalidSurface) listing the failed checks.
ConeSurface validated(ConeSurface s, double tol = kDefaultTolerance);

std::vector<ConePoint> cone_data(const ConeSurface& s);
std::vector<double> curvatures(const ConeSurface& s);

ConeSurface normalize_area(const ConeSurface& s);

// Two mirror copies of a fan-triangulated strictly convex polygon (counterclockwise vertices).
// Vertex ids of the result follow the polygon's vertex order.
ConeSurface generate_doubled_polygon(std::span<const Vec2> vertices);

// Strictly convex polygon with m vertices: points on a randomly stretched circle, angular gaps
// bounded below so no interior angle degenerates.
std::vector<Vec2> random_convex_polygon(std::mt19937_64& rng, int m);

}  // namespace flatsphere
