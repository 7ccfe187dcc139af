#include "flatsphere/geodesic.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fmt/format.h>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

namespace flatsphere {

namespace {

constexpr double kVertexSlack = 1e-9;

double vertex_eps(const ConeSurface& s, int t) { return kVertexSlack * s.max_side(t); }

// Layout of the triangle glued across exit side `e` of a triangle laid out as D.
struct Unfolded {
  int tri;
  int entry;
  std::array<Vec2, 3> D;
};

Unfolded unfold_across(const ConeSurface& s, int t, int e, const std::array<Vec2, 3>& D) {
  const EdgeSlot p = s.partner({t, e});
  const auto& len = s.triangle(p.tri).len;
  Unfolded u{p.tri, p.edge, {}};
  const int a = p.edge, b = next3(a), c = next3(b);
  u.D[a] = D[next3(e)];
  u.D[b] = D[e];
  u.D[c] = place_apex(u.D[a], u.D[b], len[c], len[b]);
  return u;
}

// Isometry from a laid-out triangle back to its chart.
Vec2 to_chart(const std::array<Vec2, 3>& D, Vec2 x) {
  const Vec2 u = (D[1] - D[0]).normalized();
  const Vec2 w = x - D[0];
  return {dot(w, u), cross(u, w)};
}

struct Builder {
  Trajectory out;
  Vec2 origin;
  Vec2 dir;
  std::vector<std::array<Vec2, 3>> layouts;

  void add(int t, const std::array<Vec2, 3>& D, Vec2 from, Vec2 to, double p_from, double p_to) {
    out.segments.push_back({t, to_chart(D, from), to_chart(D, to), p_from, p_to});
    if (out.developed.empty()) out.developed.push_back(from);
    out.developed.push_back(to);
    out.developed_triangles.push_back(D);
  }
  double side(Vec2 p) const { return cross(dir, p - origin); }
  double along(Vec2 p) const { return dot(dir, p - origin); }
};

double wrap3(double x) {
  x = std::fmod(x, 3.0);
  return x < 0 ? x + 3.0 : x;
}

// Strictly inside the counterclockwise perimeter arc a -> b.
bool in_open_arc(double x, double a, double b) {
  const double span = wrap3(b - a);
  const double off = wrap3(x - a);
  return off > 0.0 && off < span;
}

bool chords_cross(const Segment& a, const Segment& b, double scale) {
  const bool boundary = a.start_perimeter >= 0 && a.end_perimeter >= 0 && b.start_perimeter >= 0 &&
                        b.end_perimeter >= 0;
  if (boundary) {
    constexpr double eq = 1e-12;
    for (double x : {b.start_perimeter, b.end_perimeter}) {
      for (double y : {a.start_perimeter, a.end_perimeter}) {
        const double d = wrap3(x - y);
        if (d < eq || d > 3.0 - eq) return false;
      }
    }
    return in_open_arc(b.start_perimeter, a.start_perimeter, a.end_perimeter) !=
           in_open_arc(b.end_perimeter, a.start_perimeter, a.end_perimeter);
  }
  return segments_cross(a.start, a.end, b.start, b.end, 1e-14 * scale * scale);
}

}  // namespace

std::string_view to_string(TraceStatus s) {
  switch (s) {
    case TraceStatus::Completed: return "completed";
    case TraceStatus::HitVertex: return "hit-vertex";
    case TraceStatus::LengthExhausted: return "length-budget-exhausted";
  }
  return "unknown";
}

Trajectory trace(const ConeSurface& s, const Anchor& start, double direction, const TraceOptions& opt) {
  if (!s.is_valid()) throw Error(ErrorCode::InvalidSurface, "trace needs a validated surface");
  if (!(opt.max_length > 0.0) || !std::isfinite(opt.max_length))
    throw Error(ErrorCode::Domain, "max_length must be positive and finite");
  if (!std::isfinite(direction)) throw Error(ErrorCode::Domain, "direction must be finite");

  Builder b;
  b.out.start = start;
  b.out.surface = s.fingerprint();
  const double max_len = opt.max_length;

  int t = 0;
  std::array<Vec2, 3> D;
  double start_perim = -1.0;
  int exit = -1;
  // vertex reached inside the first triangle, if any
  int hit = -1;

  if (const auto* va = std::get_if<VertexAnchor>(&start)) {
    CornerSlot c = va->corner;
    if (c.tri < 0 || c.tri >= s.triangle_count() || c.corner < 0 || c.corner > 2)
      throw Error(ErrorCode::IndexOutOfRange, "start corner out of range");
    const int v = s.vertex_of(c);
    double cone = 0.0;
    for (const auto cc : s.corners_of(v)) cone += s.corner_angle(cc);
    if (direction < 0.0 || direction >= cone)
      throw Error(ErrorCode::Domain, fmt::format("direction {} outside [0, {})", direction, cone));
    double theta = direction;
    for (std::size_t guard = 0; guard <= s.corners_of(v).size(); ++guard) {
      const double a = s.corner_angle(c);
      if (theta < a) break;
      theta -= a;
      c = s.next_corner_ccw(c);
    }
    t = c.tri;
    D = s.chart(t);
    const Vec2 shift = D[c.corner];
    for (auto& p : D) p = p - shift;
    const Vec2 base = (D[next3(c.corner)] - D[c.corner]).normalized();
    b.origin = D[c.corner];
    b.dir = unit_vector(base.arg() + theta);
    start_perim = c.corner;
    const int r = next3(c.corner), l = prev3(c.corner);
    const double eps = vertex_eps(s, t);
    if (std::abs(b.side(D[r])) <= eps && b.along(D[r]) > 0) {
      hit = r;
    } else if (std::abs(b.side(D[l])) <= eps && b.along(D[l]) > 0) {
      hit = l;
    } else {
      exit = r;
    }
    if (hit >= 0) b.out.along_edge = true;
  } else {
    const auto& pa = std::get<PointAnchor>(start);
    if (pa.tri < 0 || pa.tri >= s.triangle_count())
      throw Error(ErrorCode::IndexOutOfRange, "start triangle out of range");
    t = pa.tri;
    D = s.chart(t);
    const double eps = vertex_eps(s, t);
    for (int i = 0; i < 3; ++i) {
      const int j = next3(i);
      if (orient(D[i], D[j], pa.point) < -eps * s.max_side(t))
        throw Error(ErrorCode::Domain, "start point lies outside its triangle");
    }
    b.origin = pa.point;
    b.dir = unit_vector(direction);
    for (int i = 0; i < 3; ++i) {
      if (std::abs(b.side(D[i])) <= eps && b.along(D[i]) > eps) {
        if (hit < 0 || b.along(D[i]) < b.along(D[hit])) hit = i;
      }
    }
    if (hit < 0) {
      for (int e = 0; e < 3; ++e) {
        if (b.side(D[e]) < 0 && b.side(D[next3(e)]) > 0) exit = e;
      }
      if (exit < 0) throw Error(ErrorCode::Domain, "start point sits on a vertex");
    }
  }

  Vec2 seg_start = b.origin;
  auto finish_inside = [&](TraceStatus st) {
    b.add(t, D, seg_start, b.origin + b.dir * max_len, start_perim, -1.0);
    b.out.length = max_len;
    b.out.status = st;
  };
  auto finish_at_vertex = [&](int k) {
    const double tau = b.along(D[k]);
    if (tau > max_len) {
      finish_inside(TraceStatus::LengthExhausted);
      return;
    }
    b.add(t, D, seg_start, D[k], start_perim, static_cast<double>(k));
    b.out.length = tau;
    b.out.status = TraceStatus::HitVertex;
    b.out.end_corner = CornerSlot{t, k};
  };

  if (hit >= 0) {
    finish_at_vertex(hit);
    return std::move(b.out);
  }

  for (std::int64_t steps = 0;; ++steps) {
    if (steps >= opt.max_segments)
      throw Error(ErrorCode::BudgetExceeded, fmt::format("trace exceeded {} triangle passes", opt.max_segments));
    const int e = exit;
    const double sr = b.side(D[e]);
    const double sl = b.side(D[next3(e)]);
    const double f = std::clamp(sr / (sr - sl), 0.0, 1.0);
    const Vec2 x = D[e] + (D[next3(e)] - D[e]) * f;
    if (b.along(x) >= max_len) {
      finish_inside(TraceStatus::LengthExhausted);
      return std::move(b.out);
    }
    b.add(t, D, seg_start, x, start_perim, e + f);
    b.out.crossings.push_back({t, e});
    const Unfolded u = unfold_across(s, t, e, D);
    t = u.tri;
    D = u.D;
    seg_start = x;
    start_perim = u.entry + (1.0 - f);
    const int apex = prev3(u.entry);
    const double sv = b.side(D[apex]);
    if (std::abs(sv) <= vertex_eps(s, t)) {
      finish_at_vertex(apex);
      return std::move(b.out);
    }
    exit = sv > 0 ? next3(u.entry) : apex;
  }
}

Trajectory trace_between(const ConeSurface& s, int tri, Vec2 from, Vec2 to) {
  if (tri < 0 || tri >= s.triangle_count()) throw Error(ErrorCode::IndexOutOfRange, "triangle out of range");
  const auto D = s.chart(tri);
  const double tol = 1e-9 * s.max_side(tri) * s.max_side(tri);
  for (const Vec2 p : {from, to}) {
    for (int i = 0; i < 3; ++i) {
      if (orient(D[i], D[next3(i)], p) < -tol) throw Error(ErrorCode::Domain, "point lies outside its triangle");
    }
  }
  if ((to - from).norm() == 0.0) throw Error(ErrorCode::Domain, "endpoints coincide");
  Trajectory out;
  out.start = PointAnchor{tri, from};
  out.surface = s.fingerprint();
  out.segments.push_back({tri, from, to, -1.0, -1.0});
  out.developed = {from, to};
  out.developed_triangles = {D};
  out.length = (to - from).norm();
  out.status = TraceStatus::Completed;
  return out;
}

Trajectory develop_path(const ConeSurface& s, CornerSlot start, std::span<const EdgeSlot> crossings,
                        CornerSlot end) {
  if (!s.is_valid()) throw Error(ErrorCode::InvalidSurface, "develop_path needs a validated surface");
  std::vector<std::array<Vec2, 3>> layouts;
  std::vector<int> tris;
  int t = start.tri;
  auto D = s.chart(t);
  const Vec2 shift = D[start.corner];
  for (auto& p : D) p = p - shift;
  layouts.push_back(D);
  tris.push_back(t);
  for (const auto c : crossings) {
    if (c.tri != t) throw Error(ErrorCode::Mismatch, "crossing sequence leaves from the wrong triangle");
    const Unfolded u = unfold_across(s, t, c.edge, D);
    t = u.tri;
    D = u.D;
    layouts.push_back(D);
    tris.push_back(t);
  }
  if (end.tri != t) throw Error(ErrorCode::Mismatch, "crossing sequence does not reach the end corner");
  const Vec2 O{0.0, 0.0};
  const Vec2 E = D[end.corner];
  const double len = E.norm();
  if (len == 0.0) throw Error(ErrorCode::Mismatch, "saddle connection of zero length");

  Builder b;
  b.origin = O;
  b.dir = E / len;
  b.out.start = VertexAnchor{start};
  b.out.end_corner = end;
  b.out.surface = s.fingerprint();
  b.out.status = TraceStatus::HitVertex;
  b.out.length = len;
  b.out.along_edge = crossings.empty();

  Vec2 from = O;
  double p_from = start.corner;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const auto& L = layouts[i];
    const int e = crossings[i].edge;
    const double sr = b.side(L[e]);
    const double sl = b.side(L[next3(e)]);
    const double tol = 1e-7 * s.max_side(tris[i]);
    if (sr > tol || sl < -tol || sr - sl >= 0.0)
      throw Error(ErrorCode::Mismatch, fmt::format("straight line misses crossing {} of the sequence", i));
    const double f = std::clamp(sr / (sr - sl), 0.0, 1.0);
    const Vec2 x = L[e] + (L[next3(e)] - L[e]) * f;
    b.add(tris[i], L, from, x, p_from, e + f);
    const EdgeSlot p = s.partner(crossings[i]);
    from = x;
    p_from = p.edge + (1.0 - f);
  }
  b.add(tris.back(), layouts.back(), from, E, p_from, end.corner);
  b.out.crossings.assign(crossings.begin(), crossings.end());
  return std::move(b.out);
}

std::vector<SelfCrossing> self_crossings(const Trajectory& t) {
  const int n = static_cast<int>(t.segments.size());
  std::vector<double> cum(n + 1, 0.0);
  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    cum[i + 1] = cum[i] + t.segments[i].length();
    scale = std::max({scale, t.segments[i].start.norm(), t.segments[i].end.norm()});
  }
  if (scale == 0.0) scale = 1.0;
  int max_tri = 0;
  for (const auto& seg : t.segments) max_tri = std::max(max_tri, seg.tri);
  std::vector<std::vector<int>> by_tri(max_tri + 1);
  for (int i = 0; i < n; ++i) by_tri[t.segments[i].tri].push_back(i);

  std::vector<SelfCrossing> out;
  for (const auto& group : by_tri) {
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        const auto& sa = t.segments[group[a]];
        const auto& sb = t.segments[group[b]];
        if (!chords_cross(sa, sb, scale)) continue;
        const Vec2 x = line_intersection(sa.start, sa.end, sb.start, sb.end);
        out.push_back({group[a], group[b], x, cum[group[a]] + (x - sa.start).norm(),
                       cum[group[b]] + (x - sb.start).norm()});
      }
    }
  }

  // Two passes through one point of an edge show up in both triangles only as shared endpoints.
  // Locate every side crossing on the smaller slot of its edge and compare.
  const int m = std::min<int>(static_cast<int>(t.crossings.size()), n - 1);
  struct EdgePoint {
    int slot;
    double f;
  };
  std::vector<EdgePoint> at(m);
  for (int i = 0; i < m; ++i) {
    const EdgeSlot a = t.crossings[i];
    const auto& next = t.segments[i + 1];
    const int b = 3 * next.tri + static_cast<int>(next.start_perimeter);
    const double f = t.segments[i].end_perimeter - a.edge;
    at[i] = a.index() < b ? EdgePoint{a.index(), f} : EdgePoint{b, 1.0 - f};
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (at[i].slot != at[j].slot || std::abs(at[i].f - at[j].f) > 1e-12) continue;
      const auto& si = t.segments[i];
      // Pass j in the chart of segment i: same side gives segment j, the partner side j + 1.
      const int second = t.segments[j].tri == si.tri && t.crossings[j] == t.crossings[i] ? j : j + 1;
      const auto& sj = t.segments[second];
      const Vec2 di = (si.end - si.start).normalized(), dj = (sj.end - sj.start).normalized();
      if (std::abs(cross(di, dj)) < 1e-12) continue;
      out.push_back({i, second, si.end, cum[i + 1], cum[j + 1]});
    }
  }
  std::sort(out.begin(), out.end(), [](const SelfCrossing& x, const SelfCrossing& y) {
    return std::tie(x.first, x.second) < std::tie(y.first, y.second);
  });
  return out;
}

int count_self_intersections(const Trajectory& t) { return static_cast<int>(self_crossings(t).size()); }

int combinatorial_length(const Trajectory& t, const ConeSurface& d) {
  if (t.surface != d.fingerprint())
    throw Error(ErrorCode::Mismatch, "trajectory was not traced on this triangulation");
  if (t.along_edge) return 0;
  return static_cast<int>(t.crossings.size()) + 1;
}

std::vector<int> per_triangle_crossings(const Trajectory& t, const ConeSurface& s) {
  if (t.surface != s.fingerprint())
    throw Error(ErrorCode::Mismatch, "trajectory was not traced on this triangulation");
  std::vector<int> counts(s.triangle_count(), 0);
  if (t.along_edge) return counts;
  for (const auto& seg : t.segments) ++counts[seg.tri];
  return counts;
}

std::vector<Monogon> extract_monogons(const Trajectory& t) {
  const auto xs = self_crossings(t);
  // A loop [a, b] is simple when no other crossing interval sits strictly inside it.
  std::vector<int> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return xs[i].first_position > xs[j].first_position; });
  std::vector<bool> simple(xs.size(), false);
  double min_end = std::numeric_limits<double>::infinity();
  std::size_t k = 0;
  while (k < order.size()) {
    std::size_t k2 = k;
    const double a = xs[order[k]].first_position;
    while (k2 < order.size() && xs[order[k2]].first_position == a) ++k2;
    for (std::size_t q = k; q < k2; ++q) simple[order[q]] = !(min_end < xs[order[q]].second_position);
    for (std::size_t q = k; q < k2; ++q) min_end = std::min(min_end, xs[order[q]].second_position);
    k = k2;
  }
  std::vector<Monogon> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!simple[i]) continue;
    const auto& si = t.segments[xs[i].first];
    const auto& sj = t.segments[xs[i].second];
    const double angle = angle_between(si.end - si.start, sj.start - sj.end);
    out.push_back({angle, xs[i].second_position - xs[i].first_position, xs[i]});
  }
  return out;
}

// ---------------------------------------------------------------------------------------------

namespace {

struct Found {
  CornerSlot start;
  std::vector<EdgeSlot> crossings;
  CornerSlot end;
};

std::vector<int> key_of(CornerSlot a, std::span<const EdgeSlot> xs, CornerSlot b) {
  std::vector<int> k;
  k.reserve(xs.size() + 2);
  k.push_back(a.index());
  for (const auto e : xs) k.push_back(e.index());
  k.push_back(b.index());
  return k;
}

Found reversed(const ConeSurface& s, const Found& f) {
  Found r{f.end, {}, f.start};
  r.crossings.reserve(f.crossings.size());
  for (auto it = f.crossings.rbegin(); it != f.crossings.rend(); ++it) r.crossings.push_back(s.partner(*it));
  return r;
}

struct Shared {
  std::atomic<std::int64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
  std::int64_t budget = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct Node {
  int tri;
  int entry;
  Vec2 left, right;    // window endpoints
  Vec2 wleft, wright;  // wedge limit directions
  int depth;
};

// Distance from the origin to the part of the window seen inside the wedge.
double window_distance(const Node& n) {
  const Vec2 R = n.right, W = n.left - n.right;
  auto param = [&](Vec2 w) {
    const double den = cross(w, W);
    if (std::abs(den) < 1e-300) return std::numeric_limits<double>::quiet_NaN();
    return std::clamp(-cross(w, R) / den, 0.0, 1.0);
  };
  double ur = param(n.wright), ul = param(n.wleft);
  if (std::isnan(ur)) ur = 0.0;
  if (std::isnan(ul)) ul = 1.0;
  return point_segment_distance({0.0, 0.0}, R + W * ur, R + W * ul);
}

void search_corner(const ConeSurface& s, CornerSlot c, double max_len, Shared& sh, std::vector<Found>& out) {
  constexpr std::int64_t kFlush = 1024;
  std::int64_t local = 0;
  auto flush = [&]() {
    const std::int64_t total = sh.nodes.fetch_add(local, std::memory_order_relaxed) + local;
    local = 0;
    if (total > sh.budget) sh.stop.store(true, std::memory_order_relaxed);
    if (sh.deadline && std::chrono::steady_clock::now() > *sh.deadline) {
      sh.timed_out.store(true, std::memory_order_relaxed);
      sh.stop.store(true, std::memory_order_relaxed);
    }
  };

  auto D = s.chart(c.tri);
  const Vec2 shift = D[c.corner];
  for (auto& p : D) p = p - shift;
  const int r = next3(c.corner), l = prev3(c.corner);
  const double max_slack = 1.0 + 1e-12;

  std::vector<Node> stack;
  std::vector<EdgeSlot> path;
  auto push = [&](int t, int exit, Vec2 right, Vec2 left, Vec2 wr, Vec2 wl, int depth) {
    const EdgeSlot p = s.partner({t, exit});
    Node n{p.tri, p.edge, left, right, wl, wr, depth};
    if (window_distance(n) > max_len * max_slack) return;
    stack.push_back(n);
  };
  push(c.tri, r, D[r], D[l], D[r], D[l], 1);

  while (!stack.empty()) {
    if (++local >= kFlush) {
      flush();
      if (sh.stop.load(std::memory_order_relaxed)) return;
    }
    const Node n = stack.back();
    stack.pop_back();
    path.resize(n.depth - 1);
    path.push_back(s.partner({n.tri, n.entry}));

    const auto& len = s.triangle(n.tri).len;
    const int a = n.entry, b = next3(a), apex = prev3(a);
    const Vec2 V = place_apex(n.left, n.right, len[apex], len[b]);
    const double eps = vertex_eps(s, n.tri);
    const double in_right = cross(n.wright, V) / n.wright.norm();
    const double in_left = cross(V, n.wleft) / n.wleft.norm();
    if (in_right > eps && in_left > eps) {
      if (V.norm() <= max_len) out.push_back({c, path, CornerSlot{n.tri, apex}});
      push(n.tri, apex, V, n.left, V, n.wleft, n.depth + 1);
      push(n.tri, b, n.right, V, n.wright, V, n.depth + 1);
    } else if (in_right <= eps) {
      push(n.tri, apex, V, n.left, n.wright, n.wleft, n.depth + 1);
    } else {
      push(n.tri, b, n.right, V, n.wright, n.wleft, n.depth + 1);
    }
  }
  flush();
}

}  // namespace

std::vector<int> canonical_key(const ConeSurface& s, const SaddleConnection& c) {
  if (c.is_edge()) return {c.start.index(), c.end.index()};
  auto k = key_of(c.start, c.crossings, c.end);
  const Found r = reversed(s, Found{c.start, c.crossings, c.end});
  auto kr = key_of(r.start, r.crossings, r.end);
  return std::min(k, kr);
}

Trajectory to_trajectory(const ConeSurface& s, const SaddleConnection& c) {
  return develop_path(s, c.start, c.crossings, c.end);
}

EnumerationResult enumerate_saddle_connections(const ConeSurface& s, const EnumerationOptions& opt) {
  if (!s.is_valid()) throw Error(ErrorCode::InvalidSurface, "enumeration needs a validated surface");
  if (!(opt.max_length > 0.0) || !std::isfinite(opt.max_length))
    throw Error(ErrorCode::Domain, "max_length must be positive and finite");

  Shared sh;
  sh.budget = opt.node_budget;
  if (opt.time_budget_seconds) {
    sh.deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(*opt.time_budget_seconds));
  }

  const int tasks = s.slot_count();
  std::vector<std::vector<Found>> per_task(tasks);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= tasks || sh.stop.load(std::memory_order_relaxed)) return;
      search_corner(s, CornerSlot::from_index(i), opt.max_length, sh, per_task[i]);
    }
  };
  int threads = opt.threads > 0 ? opt.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(1, tasks));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  EnumerationResult res;
  res.max_length = opt.max_length;
  res.nodes = sh.nodes.load();
  if (res.nodes > sh.budget) {
    res.truncated = true;
    res.truncation_reason = fmt::format("node budget {} exhausted", sh.budget);
  } else if (sh.timed_out.load()) {
    res.truncated = true;
    res.truncation_reason = fmt::format("time budget {}s exhausted", opt.time_budget_seconds.value_or(0.0));
  }

  struct Keyed {
    std::vector<int> key;
    Found f;
  };
  std::vector<Keyed> all;
  for (auto& list : per_task) {
    for (auto& f : list) {
      auto k = key_of(f.start, f.crossings, f.end);
      Found r = reversed(s, f);
      auto kr = key_of(r.start, r.crossings, r.end);
      if (kr < k) all.push_back({std::move(kr), std::move(r)});
      else all.push_back({std::move(k), std::move(f)});
    }
  }
  std::sort(all.begin(), all.end(), [](const Keyed& x, const Keyed& y) { return x.key < y.key; });
  all.erase(std::unique(all.begin(), all.end(), [](const Keyed& x, const Keyed& y) { return x.key == y.key; }),
            all.end());

  struct Ranked {
    double length;
    std::vector<int> key;
    SaddleConnection c;
  };
  std::vector<Ranked> ranked;
  for (int id = 0; id < s.edge_count(); ++id) {
    const EdgeSlot e = s.edge_slot(id);
    SaddleConnection c{{e.tri, e.edge}, {e.tri, next3(e.edge)}, {}, s.length(e), 0, 0};
    if (c.length > opt.max_length) continue;
    c.start_vertex = s.vertex_of(c.start);
    c.end_vertex = s.vertex_of(c.end);
    ranked.push_back({c.length, canonical_key(s, c), std::move(c)});
  }
  for (auto& k : all) {
    SaddleConnection c{k.f.start, k.f.end, std::move(k.f.crossings), 0.0, 0, 0};
    c.length = develop_path(s, c.start, c.crossings, c.end).length;
    if (c.length > opt.max_length) continue;
    c.start_vertex = s.vertex_of(c.start);
    c.end_vertex = s.vertex_of(c.end);
    ranked.push_back({c.length, std::move(k.key), std::move(c)});
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const Ranked& x, const Ranked& y) { return std::tie(x.length, x.key) < std::tie(y.length, y.key); });
  res.connections.reserve(ranked.size());
  for (auto& r : ranked) res.connections.push_back(std::move(r.c));
  return res;
}

}  // namespace flatsphere
