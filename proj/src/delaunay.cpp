#include "flatsphere/delaunay.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <limits>

namespace flatsphere {

bool is_locally_delaunay(const ConeSurface& s, EdgeSlot e, double tol) {
  const EdgeSlot p = s.partner(e);
  // Both opposite angles sit in one triangle, so they sum to less than pi.
  if (p.tri == e.tri) return true;
  const auto& l1 = s.triangle(e.tri).len;
  const auto& l2 = s.triangle(p.tri).len;
  const double scale = std::max(s.max_side(e.tri), s.max_side(p.tri));
  const Vec2 a{0.0, 0.0};
  const Vec2 b{l1[e.edge] / scale, 0.0};
  const Vec2 c = place_apex(a, b, l1[prev3(e.edge)] / scale, l1[next3(e.edge)] / scale);
  const Vec2 d = place_apex(b, a, l2[prev3(p.edge)] / scale, l2[next3(p.edge)] / scale);
  if (orient(a, b, c) <= 0.0 || orient(b, a, d) <= 0.0)
    throw Error(ErrorCode::DegenerateInput, fmt::format("edge ({},{}) unfolds to a degenerate quadrilateral", e.tri, e.edge));
  return incircle(a, b, c, d) <= tol;
}

bool is_delaunay(const ConeSurface& s, double tol) {
  for (int id = 0; id < s.edge_count(); ++id)
    if (!is_locally_delaunay(s, s.edge_slot(id), tol)) return false;
  return true;
}

FlipReport delaunayize(const ConeSurface& s, const FlipOptions& opt) {
  if (!s.is_valid()) throw Error(ErrorCode::InvalidSurface, "delaunayize needs a validated surface");
  FlipReport r{s, 0, opt.max_flips};
  const std::int64_t e = s.edge_count();
  if (r.cap < 0) r.cap = 10 * e * e;
  for (;;) {
    int bad = -1;
    for (int id = 0; id < r.surface.edge_count(); ++id) {
      if (!is_locally_delaunay(r.surface, r.surface.edge_slot(id), opt.tol)) {
        bad = id;
        break;
      }
    }
    if (bad < 0) break;
    if (r.flips >= r.cap) throw Error(ErrorCode::BudgetExceeded, fmt::format("flip cap {} reached", r.cap));
    r.surface.flip_edge(r.surface.edge_slot(bad));
    ++r.flips;
  }
  return r;
}

EdgeBoundReport check_edge_length_bound(const ConeSurface& s, double delta) {
  if (!(delta > 0.0)) throw Error(ErrorCode::Domain, "edge length bound needs a positive curvature gap");
  if (std::abs(s.area() - 1.0) > 1e-9) throw Error(ErrorCode::Domain, "edge length bound needs unit area");
  EdgeBoundReport r;
  r.threshold_sq = 4.0 / kPi + 1.0 / (2.0 * kPi * delta);
  for (int id = 0; id < s.edge_count(); ++id) {
    const double l = s.length(s.edge_slot(id));
    r.max_sq = std::max(r.max_sq, l * l);
    if (l * l > r.threshold_sq * (1.0 + 1e-12)) r.violations.push_back(id);
  }
  r.pass = r.violations.empty();
  return r;
}

std::vector<std::vector<double>> edge_graph_distances(const ConeSurface& s) {
  const int n = s.vertex_count();
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0.0;
  for (int id = 0; id < s.edge_count(); ++id) {
    const EdgeSlot e = s.edge_slot(id);
    const int a = s.vertex_of({e.tri, e.edge});
    const int b = s.vertex_of({e.tri, next3(e.edge)});
    const double l = s.length(e);
    d[a][b] = std::min(d[a][b], l);
    d[b][a] = std::min(d[b][a], l);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

double cone_graph_diameter(const ConeSurface& s) {
  double best = 0.0;
  for (const auto& row : edge_graph_distances(s))
    for (double x : row) best = std::max(best, x);
  return best;
}

MarkedSurface mark_points(const ConeSurface& s, std::span<const PointAnchor> points) {
  if (!s.is_valid()) throw Error(ErrorCode::InvalidSurface, "mark_points needs a validated surface");
  std::vector<TriangleGeom> tris(s.triangles().begin(), s.triangles().end());
  std::vector<int> partner(s.partners().begin(), s.partners().end());
  std::vector<int> labels(s.corner_vertices().begin(), s.corner_vertices().end());
  // Each current triangle remembers its source triangle and its corners in that chart.
  std::vector<int> source(tris.size());
  std::vector<std::array<Vec2, 3>> corners(tris.size());
  for (int t = 0; t < s.triangle_count(); ++t) {
    source[t] = t;
    corners[t] = s.chart(t);
  }

  MarkedSurface out;
  int next_label = s.vertex_count();
  for (const auto& pt : points) {
    if (pt.tri < 0 || pt.tri >= s.triangle_count()) throw Error(ErrorCode::IndexOutOfRange, "marked point triangle out of range");
    const double margin = 1e-9 * s.max_side(pt.tri) * s.max_side(pt.tri);
    int k = -1;
    for (int t = 0; t < static_cast<int>(tris.size()) && k < 0; ++t) {
      if (source[t] != pt.tri) continue;
      const auto& q = corners[t];
      if (orient(q[0], q[1], pt.point) > margin && orient(q[1], q[2], pt.point) > margin &&
          orient(q[2], q[0], pt.point) > margin)
        k = t;
    }
    if (k < 0) throw Error(ErrorCode::Domain, "marked point is not strictly inside a triangle");

    const int t1 = static_cast<int>(tris.size()), t2 = t1 + 1;
    const auto q = corners[k];
    const auto old = tris[k].len;
    const Vec2 P = pt.point;
    const double d0 = (q[0] - P).norm(), d1 = (q[1] - P).norm(), d2 = (q[2] - P).norm();
    const std::array<int, 3> old_label{labels[3 * k], labels[3 * k + 1], labels[3 * k + 2]};
    const std::array<int, 3> old_partner{partner[3 * k], partner[3 * k + 1], partner[3 * k + 2]};
    // Old side e of k becomes side 0 of these triangles.
    const std::array<int, 3> host{k, t1, t2};

    tris[k].len = {old[0], d1, d0};
    tris.push_back({{old[1], d2, d1}});
    tris.push_back({{old[2], d0, d2}});
    partner.resize(3 * tris.size(), -1);
    labels.resize(3 * tris.size(), -1);
    source.push_back(pt.tri);
    source.push_back(pt.tri);
    corners[k] = {q[0], q[1], P};
    corners.push_back({q[1], q[2], P});
    corners.push_back({q[2], q[0], P});

    for (int e = 0; e < 3; ++e) {
      const int slot = 3 * host[e];
      int p = old_partner[e];
      if (p / 3 == k) p = 3 * host[p % 3];
      partner[slot] = p;
      partner[p] = slot;
      labels[3 * host[e]] = old_label[e];
      labels[3 * host[e] + 1] = old_label[next3(e)];
      labels[3 * host[e] + 2] = next_label;
    }
    for (int e = 0; e < 3; ++e) {
      const int a = 3 * host[e] + 1, b = 3 * host[next3(e)] + 2;
      partner[a] = b;
      partner[b] = a;
    }
    out.marked.push_back(next_label++);
  }
  out.surface = validated(ConeSurface(std::move(tris), std::move(partner)));
  out.surface.relabel_vertices(labels);
  return out;
}

}  // namespace flatsphere
