#include "flatsphere/surface.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>

#include <fmt/format.h>

namespace flatsphere {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::DuplicateGluing: return "duplicate-gluing";
    case ErrorCode::IndexOutOfRange: return "index-out-of-range";
    case ErrorCode::NonpositiveLength: return "nonpositive-length";
    case ErrorCode::InvalidSurface: return "invalid-surface";
    case ErrorCode::DegenerateInput: return "degenerate-input";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::BudgetExceeded: return "budget-exceeded";
    case ErrorCode::Mismatch: return "mismatch";
    case ErrorCode::Inadmissible: return "inadmissible";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

namespace {

bool is_involution(std::span<const int> partner) {
  const int n = static_cast<int>(partner.size());
  for (int s = 0; s < n; ++s) {
    const int p = partner[s];
    if (p < 0 || p >= n || p == s || partner[p] != s) return false;
  }
  return true;
}

}  // namespace

ConeSurface::ConeSurface(std::vector<TriangleGeom> triangles, std::vector<int> partner)
    : triangles_(std::move(triangles)), partner_(std::move(partner)) {
  partner_.resize(3 * triangles_.size(), -1);
  if (!triangles_.empty() && is_involution(partner_)) build_topology();
}

CornerSlot ConeSurface::next_corner_ccw(CornerSlot c) const {
  // The sector at corner i is bounded by side i and then side i+2; crossing side i+2 lands on the
  // corner of the neighbour that starts the partner side.
  const EdgeSlot p = partner({c.tri, prev3(c.corner)});
  return {p.tri, p.edge};
}

void ConeSurface::build_topology() {
  const int slots = slot_count();
  corner_vertex_.assign(slots, -1);
  vertex_corners_.clear();
  for (int c0 = 0; c0 < slots; ++c0) {
    if (corner_vertex_[c0] >= 0) continue;
    const int id = static_cast<int>(vertex_corners_.size());
    std::vector<CornerSlot> ring;
    CornerSlot c = CornerSlot::from_index(c0);
    // A permutation orbit always closes; the cap only guards against corrupted state.
    for (int steps = 0; steps <= slots; ++steps) {
      if (corner_vertex_[c.index()] >= 0) break;
      corner_vertex_[c.index()] = id;
      ring.push_back(c);
      c = next_corner_ccw(c);
    }
    vertex_corners_.push_back(std::move(ring));
  }
  vertex_count_ = static_cast<int>(vertex_corners_.size());

  slot_edge_.assign(slots, -1);
  edge_slots_.clear();
  for (int s = 0; s < slots; ++s) {
    if (s < partner_[s]) {
      slot_edge_[s] = slot_edge_[partner_[s]] = static_cast<int>(edge_slots_.size());
      edge_slots_.push_back(s);
    }
  }
}

double ConeSurface::corner_angle(CornerSlot c) const {
  const auto& l = triangles_[c.tri].len;
  return corner_angle_from_sides(l[c.corner], l[prev3(c.corner)], l[next3(c.corner)]);
}

double ConeSurface::triangle_area(int t) const {
  const auto& l = triangles_[t].len;
  return heron_area(l[0], l[1], l[2]);
}

double ConeSurface::area() const {
  double total = 0.0;
  for (int t = 0; t < triangle_count(); ++t) total += triangle_area(t);
  return total;
}

std::array<Vec2, 3> ConeSurface::chart(int t) const {
  const auto& l = triangles_[t].len;
  const Vec2 c0{0.0, 0.0};
  const Vec2 c1{l[0], 0.0};
  return {c0, c1, place_apex(c0, c1, l[2], l[1])};
}

double ConeSurface::max_side(int t) const {
  const auto& l = triangles_[t].len;
  return std::max({l[0], l[1], l[2]});
}

void ConeSurface::flip_edge(EdgeSlot s) {
  const EdgeSlot p = partner(s);
  if (p.tri == s.tri) {
    throw Error(ErrorCode::Domain, fmt::format("edge ({},{}) is folded inside one triangle", s.tri, s.edge));
  }
  const int t1 = s.tri, e1 = s.edge, t2 = p.tri, e2 = p.edge;
  const auto& l1 = triangles_[t1].len;
  const auto& l2 = triangles_[t2].len;
  const int vA = corner_vertex_[3 * t1 + e1];
  const int vB = corner_vertex_[3 * t1 + next3(e1)];
  const int vC = corner_vertex_[3 * t1 + prev3(e1)];
  const int vD = corner_vertex_[3 * t2 + prev3(e2)];

  const double ab = l1[e1];
  const double bc = l1[next3(e1)];
  const double ca = l1[prev3(e1)];
  const double ad = l2[next3(e2)];
  const double db = l2[prev3(e2)];

  const Vec2 a{0.0, 0.0};
  const Vec2 b{ab, 0.0};
  const Vec2 c = place_apex(a, b, ca, bc);
  const Vec2 d = place_apex(b, a, db, ad);
  const double scale2 = std::max({ab, bc, ca, ad, db}) * std::max({ab, bc, ca, ad, db});
  if (orient(c, a, d) <= 1e-12 * scale2 || orient(d, b, c) <= 1e-12 * scale2) {
    throw Error(ErrorCode::DegenerateInput,
                fmt::format("edge ({},{}) bounds a non-convex quadrilateral", s.tri, s.edge));
  }
  const double cd = (c - d).norm();

  // Old outer slots in the order of their new positions: (t1,0) (t1,1) (t2,0) (t2,1).
  const std::array<int, 4> old_slots{3 * t1 + prev3(e1), 3 * t2 + next3(e2), 3 * t2 + prev3(e2),
                                     3 * t1 + next3(e1)};
  const std::array<int, 4> new_slots{3 * t1 + 0, 3 * t1 + 1, 3 * t2 + 0, 3 * t2 + 1};
  std::array<int, 4> old_partner{};
  for (int k = 0; k < 4; ++k) old_partner[k] = partner_[old_slots[k]];

  triangles_[t1].len = {ca, ad, cd};
  triangles_[t2].len = {db, bc, cd};
  corner_vertex_[3 * t1 + 0] = vC;
  corner_vertex_[3 * t1 + 1] = vA;
  corner_vertex_[3 * t1 + 2] = vD;
  corner_vertex_[3 * t2 + 0] = vD;
  corner_vertex_[3 * t2 + 1] = vB;
  corner_vertex_[3 * t2 + 2] = vC;

  for (int k = 0; k < 4; ++k) {
    const auto it = std::find(old_slots.begin(), old_slots.end(), old_partner[k]);
    if (it != old_slots.end()) {
      partner_[new_slots[k]] = new_slots[it - old_slots.begin()];
    } else {
      partner_[new_slots[k]] = old_partner[k];
      partner_[old_partner[k]] = new_slots[k];
    }
  }
  partner_[3 * t1 + 2] = 3 * t2 + 2;
  partner_[3 * t2 + 2] = 3 * t1 + 2;

  // Rebuild rings and edge ids but keep the existing vertex labels.
  const std::vector<int> labels = corner_vertex_;
  build_topology();
  std::vector<int> relabel(vertex_count_, -1);
  for (int c = 0; c < slot_count(); ++c) relabel[corner_vertex_[c]] = labels[c];
  std::vector<std::vector<CornerSlot>> rings(vertex_count_);
  for (int v = 0; v < vertex_count_; ++v) rings[relabel[v]] = std::move(vertex_corners_[v]);
  vertex_corners_ = std::move(rings);
  corner_vertex_ = labels;
}

void ConeSurface::relabel_vertices(std::span<const int> corner_labels) {
  if (!has_topology() || static_cast<int>(corner_labels.size()) != slot_count())
    throw Error(ErrorCode::DegenerateInput, "relabel_vertices: label count does not match corners");
  std::vector<int> image(vertex_count_, -1);
  std::vector<bool> used(vertex_count_, false);
  for (int c = 0; c < slot_count(); ++c) {
    const int v = corner_vertex_[c], l = corner_labels[c];
    if (l < 0 || l >= vertex_count_) throw Error(ErrorCode::IndexOutOfRange, "relabel_vertices: label out of range");
    if (image[v] < 0) {
      if (used[l]) throw Error(ErrorCode::DegenerateInput, "relabel_vertices: labels are not a bijection");
      image[v] = l;
      used[l] = true;
    } else if (image[v] != l) {
      throw Error(ErrorCode::DegenerateInput, "relabel_vertices: label varies within a vertex");
    }
  }
  std::vector<std::vector<CornerSlot>> rings(vertex_count_);
  for (int v = 0; v < vertex_count_; ++v) rings[image[v]] = std::move(vertex_corners_[v]);
  vertex_corners_ = std::move(rings);
  corner_vertex_.assign(corner_labels.begin(), corner_labels.end());
}

void ConeSurface::scale(double factor) {
  for (auto& t : triangles_)
    for (auto& l : t.len) l *= factor;
}

std::uint64_t ConeSurface::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  const auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  for (const auto& t : triangles_)
    for (double l : t.len) mix(std::bit_cast<std::uint64_t>(l));
  for (int p : partner_) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(p)));
  return h;
}

const ValidationCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

// ---------------------------------------------------------------------------------------------
// fsph v1

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view tok, int line) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorCode::Syntax, fmt::format("line {}: expected integer, got '{}'", line, tok), line);
  }
  return v;
}

double parse_length(std::string_view tok, int line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::Syntax, fmt::format("line {}: expected length, got '{}'", line, tok), line);
  }
  if (v <= 0.0) {
    throw Error(ErrorCode::NonpositiveLength, fmt::format("line {}: side length {} is not positive", line, tok),
                line);
  }
  return v;
}

}  // namespace

ConeSurface parse_surface(std::string_view text) {
  struct Glue {
    int t1, e1, t2, e2, line;
  };
  std::vector<std::pair<int, TriangleGeom>> tris;
  std::vector<int> tri_lines;
  std::vector<Glue> glues;
  bool header = false;
  int line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!header) {
      if (tok.size() != 2 || tok[0] != "fsph" || tok[1] != "1") {
        throw Error(ErrorCode::Syntax, fmt::format("line {}: expected header 'fsph 1'", line_no), line_no);
      }
      header = true;
    } else if (tok[0] == "t") {
      if (tok.size() != 5) {
        throw Error(ErrorCode::Syntax, fmt::format("line {}: 't' takes an index and three lengths", line_no),
                    line_no);
      }
      TriangleGeom g;
      const int idx = parse_int(tok[1], line_no);
      for (int e = 0; e < 3; ++e) g.len[e] = parse_length(tok[2 + e], line_no);
      tris.emplace_back(idx, g);
      tri_lines.push_back(line_no);
    } else if (tok[0] == "g") {
      if (tok.size() != 5) {
        throw Error(ErrorCode::Syntax, fmt::format("line {}: 'g' takes two edge slots", line_no), line_no);
      }
      glues.push_back({parse_int(tok[1], line_no), parse_int(tok[2], line_no), parse_int(tok[3], line_no),
                       parse_int(tok[4], line_no), line_no});
    } else {
      throw Error(ErrorCode::Syntax, fmt::format("line {}: unknown record '{}'", line_no, tok[0]), line_no);
    }
    if (end == text.size()) break;
  }
  if (!header) throw Error(ErrorCode::Syntax, "empty input: expected header 'fsph 1'", 1);

  const int count = static_cast<int>(tris.size());
  std::vector<TriangleGeom> triangles(count);
  std::vector<bool> seen(count, false);
  for (std::size_t k = 0; k < tris.size(); ++k) {
    const auto& [idx, g] = tris[k];
    if (idx < 0 || idx >= count) {
      throw Error(ErrorCode::IndexOutOfRange,
                  fmt::format("line {}: triangle index {} outside [0, {})", tri_lines[k], idx, count), tri_lines[k]);
    }
    if (seen[idx]) {
      throw Error(ErrorCode::Syntax, fmt::format("line {}: triangle {} declared twice", tri_lines[k], idx),
                  tri_lines[k]);
    }
    seen[idx] = true;
    triangles[idx] = g;
  }

  std::vector<int> partner(3 * count, -1);
  for (const auto& g : glues) {
    for (const auto& [t, e] : {std::pair{g.t1, g.e1}, std::pair{g.t2, g.e2}}) {
      if (t < 0 || t >= count || e < 0 || e > 2) {
        throw Error(ErrorCode::IndexOutOfRange, fmt::format("line {}: edge slot ({}, {}) out of range", g.line, t, e),
                    g.line);
      }
    }
    const int s1 = 3 * g.t1 + g.e1;
    const int s2 = 3 * g.t2 + g.e2;
    if (s1 == s2 || partner[s1] >= 0 || partner[s2] >= 0) {
      throw Error(ErrorCode::DuplicateGluing, fmt::format("line {}: edge slot glued more than once", g.line), g.line);
    }
    partner[s1] = s2;
    partner[s2] = s1;
  }
  return ConeSurface(std::move(triangles), std::move(partner));
}

std::string serialize_surface(const ConeSurface& s) {
  std::string out = "fsph 1\n";
  for (int t = 0; t < s.triangle_count(); ++t) {
    const auto& l = s.triangle(t).len;
    out += fmt::format("t {} {:.17g} {:.17g} {:.17g}\n", t, l[0], l[1], l[2]);
  }
  for (int i = 0; i < s.slot_count(); ++i) {
    const int p = s.partner_index(i);
    if (p > i) out += fmt::format("g {} {} {} {}\n", i / 3, i % 3, p / 3, p % 3);
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// Validation

ValidationReport validate_surface(const ConeSurface& s, double tol) {
  ValidationReport report;
  const auto add = [&report](std::string name, std::string reason, std::vector<int> slots) {
    ValidationCheck c{std::move(name), reason.empty(), std::move(reason), std::move(slots)};
    report.pass = report.pass && c.pass;
    report.checks.push_back(std::move(c));
  };
  const int T = s.triangle_count();
  const int slots = s.slot_count();

  {
    std::vector<int> bad;
    for (int t = 0; t < T; ++t) {
      const auto& l = s.triangle(t).len;
      for (int e = 0; e < 3; ++e) {
        const double others = l[next3(e)] + l[prev3(e)];
        if (!(l[e] < others * (1.0 - tol))) {
          bad.push_back(3 * t + e);
          break;
        }
      }
    }
    add("triangle-inequality", T == 0 ? "empty" : (bad.empty() ? "" : "degenerate-triangle"), bad);
  }

  bool involution = T > 0;
  {
    std::vector<int> bad;
    std::string reason;
    for (int i = 0; i < slots; ++i) {
      const int p = s.partner_index(i);
      if (p < 0) {
        bad.push_back(i);
        reason = "unglued-slot";
      } else if (p == i) {
        bad.push_back(i);
        reason = "self-glued-slot";
      } else if (p >= slots || s.partner_index(p) != i) {
        bad.push_back(i);
        reason = "not-an-involution";
      }
    }
    involution = involution && bad.empty();
    add("gluing-involution", bad.empty() ? "" : reason, bad);
  }

  {
    std::vector<int> bad;
    if (involution) {
      for (int i = 0; i < slots; ++i) {
        const int p = s.partner_index(i);
        if (p < i) continue;
        const double a = s.length(EdgeSlot::from_index(i));
        const double b = s.length(EdgeSlot::from_index(p));
        if (std::abs(a - b) > tol * std::max(a, b)) {
          bad.push_back(i);
          bad.push_back(p);
        }
      }
    }
    add("glued-lengths", !involution ? "needs-involution" : (bad.empty() ? "" : "length-mismatch"), bad);
  }

  if (!involution) {
    add("connected", "needs-involution", {});
    add("vertex-walk", "needs-involution", {});
    add("euler-characteristic", "needs-involution", {});
    add("vertex-count", "needs-involution", {});
    add("gauss-bonnet", "needs-involution", {});
    report.gauss_bonnet_residual = std::numeric_limits<double>::infinity();
    return report;
  }

  {
    std::vector<bool> seen(T, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
      const int t = q.front();
      q.pop();
      for (int e = 0; e < 3; ++e) {
        const int u = s.partner(EdgeSlot{t, e}).tri;
        if (!seen[u]) {
          seen[u] = true;
          ++reached;
          q.push(u);
        }
      }
    }
    std::vector<int> bad;
    for (int t = 0; t < T; ++t)
      if (!seen[t]) bad.push_back(3 * t);
    add("connected", bad.empty() ? "" : "disconnected", bad);
  }

  {
    std::vector<int> bad;
    int covered = 0;
    for (int v = 0; v < s.vertex_count(); ++v) {
      const auto& ring = s.corners_of(v);
      covered += static_cast<int>(ring.size());
      if (ring.empty() || s.next_corner_ccw(ring.back()) != ring.front()) bad.push_back(ring.front().index());
    }
    if (covered != slots) bad.push_back(-1);
    add("vertex-walk", bad.empty() ? "" : "walk-not-closed", bad);
  }

  const int V = s.vertex_count();
  {
    const bool even = (3 * T) % 2 == 0;
    const int chi = V - (3 * T) / 2 + T;
    add("euler-characteristic", (even && chi == 2) ? "" : fmt::format("euler-characteristic-{}", chi), {});
  }
  add("vertex-count", V >= 3 ? "" : "fewer-than-three-vertices", {});

  {
    double sum = 0.0;
    for (int v = 0; v < V; ++v) {
      double angle = 0.0;
      for (const auto c : s.corners_of(v)) angle += s.corner_angle(c);
      sum += (kTwoPi - angle) / kTwoPi;
    }
    report.gauss_bonnet_residual = std::abs(sum - 2.0);
    add("gauss-bonnet", report.gauss_bonnet_residual < 1e-9 ? "" : "curvature-sum", {});
  }
  return report;
}

ConeSurface validated(ConeSurface s, double tol) {
  const auto report = validate_surface(s, tol);
  if (!report.pass) {
    std::string msg = "invalid surface:";
    for (const auto& c : report.checks)
      if (!c.pass) msg += fmt::format(" {}={}", c.name, c.reason);
    throw Error(ErrorCode::InvalidSurface, msg);
  }
  s.valid_ = true;
  return s;
}

namespace {

void require_valid(const ConeSurface& s, std::string_view op) {
  if (!s.is_valid()) throw Error(ErrorCode::InvalidSurface, fmt::format("{}: surface has not been validated", op));
}

}  // namespace

std::vector<ConePoint> cone_data(const ConeSurface& s) {
  require_valid(s, "cone_data");
  std::vector<ConePoint> out;
  out.reserve(s.vertex_count());
  for (int v = 0; v < s.vertex_count(); ++v) {
    double angle = 0.0;
    for (const auto c : s.corners_of(v)) angle += s.corner_angle(c);
    out.push_back({v, angle, (kTwoPi - angle) / kTwoPi});
  }
  return out;
}

std::vector<double> curvatures(const ConeSurface& s) {
  std::vector<double> k;
  for (const auto& c : cone_data(s)) k.push_back(c.curvature);
  return k;
}

ConeSurface normalize_area(const ConeSurface& s) {
  require_valid(s, "normalize_area");
  const double a = s.area();
  if (!(a > 0.0) || !std::isfinite(a)) throw Error(ErrorCode::Domain, "normalize_area: area is zero or not finite");
  ConeSurface out = s;
  out.scale(1.0 / std::sqrt(a));
  return out;
}

ConeSurface generate_doubled_polygon(std::span<const Vec2> v) {
  const int m = static_cast<int>(v.size());
  if (m < 3) throw Error(ErrorCode::DegenerateInput, "doubled polygon needs at least three vertices");
  double scale = 0.0;
  for (const auto& p : v) scale = std::max(scale, (p - v[0]).norm());
  for (int i = 0; i < m; ++i) {
    const Vec2 a = v[(i + m - 1) % m], b = v[i], c = v[(i + 1) % m];
    if (orient(a, b, c) <= 1e-12 * scale * scale) {
      throw Error(ErrorCode::DegenerateInput,
                  fmt::format("polygon is not strictly convex and counterclockwise at vertex {}", i));
    }
  }
  // Convex turns at every vertex still allow a self-overlapping star; total turning must be 2pi.
  double turning = 0.0;
  for (int i = 0; i < m; ++i) {
    const Vec2 a = v[(i + m - 1) % m], b = v[i], c = v[(i + 1) % m];
    turning += std::atan2(cross(b - a, c - b), dot(b - a, c - b));
  }
  if (std::abs(turning - kTwoPi) > 1e-6) throw Error(ErrorCode::DegenerateInput, "polygon winds more than once");

  const int fan = m - 2;
  std::vector<TriangleGeom> tris(2 * fan);
  std::vector<int> partner(6 * fan, -1);
  const auto glue = [&partner](int t1, int e1, int t2, int e2) {
    partner[3 * t1 + e1] = 3 * t2 + e2;
    partner[3 * t2 + e2] = 3 * t1 + e1;
  };
  const auto dist = [&v](int i, int j) { return (v[i] - v[j]).norm(); };
  for (int j = 0; j < fan; ++j) {
    const int a = j + 1, b = j + 2;
    tris[j].len = {dist(0, a), dist(a, b), dist(b, 0)};
    tris[fan + j].len = {dist(0, b), dist(b, a), dist(a, 0)};
    glue(j, 1, fan + j, 1);
    if (j + 1 < fan) {
      glue(j, 2, j + 1, 0);
      glue(fan + j, 0, fan + j + 1, 2);
    }
  }
  glue(0, 0, fan, 2);
  glue(fan - 1, 2, 2 * fan - 1, 0);
  return validated(ConeSurface(std::move(tris), std::move(partner)));
}

std::vector<Vec2> random_convex_polygon(std::mt19937_64& rng, int m) {
  if (m < 3) throw Error(ErrorCode::DegenerateInput, "polygon needs at least three vertices");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Gaps are a floor plus a random share of the rest, so the smallest gap is a fixed fraction.
  const double floor_gap = 0.25 * kTwoPi / m;
  std::vector<double> w(m);
  double total = 0.0;
  for (auto& x : w) {
    x = unit(rng) + 0.05;
    total += x;
  }
  const double spread = kTwoPi - floor_gap * m;
  const double start = kTwoPi * unit(rng);
  const double stretch = 0.5 + unit(rng);
  std::vector<Vec2> pts;
  double angle = start;
  for (int i = 0; i < m; ++i) {
    pts.push_back({stretch * std::cos(angle), std::sin(angle)});
    angle += floor_gap + spread * w[i] / total;
  }
  return pts;
}

}  // namespace flatsphere
