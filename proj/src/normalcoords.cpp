#include "flatsphere/normalcoords.hpp"

#include <array>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numeric>

namespace flatsphere {

NormalCoordinate encode_normal(const ConeSurface& s, const SaddleConnection& c) {
  NormalCoordinate nc;
  nc.counts.assign(s.edge_count(), 0);
  nc.start = c.start;
  nc.end = c.end;
  if (c.is_edge()) {
    if (c.start.tri != c.end.tri || c.start.corner == c.end.corner)
      throw Error(ErrorCode::Mismatch, "edge connection must join two corners of one triangle");
    const int side = c.end.corner == next3(c.start.corner) ? c.start.corner : c.end.corner;
    nc.edge_id = s.edge_id({c.start.tri, side});
    return nc;
  }
  const Trajectory t = to_trajectory(s, c);
  if (count_self_intersections(t) > 0) throw Error(ErrorCode::Domain, "normal coordinates need a simple connection");
  for (const auto x : c.crossings) ++nc.counts[s.edge_id(x)];
  if (c.start == c.end) {
    const double side = next3(c.start.corner);
    const double f_first = t.segments.front().end_perimeter - side;
    const double f_last = t.segments.back().start_perimeter - side;
    nc.start_first = f_first < f_last;
  }
  return nc;
}

namespace {

struct Arcs {
  std::array<int, 3> p{};  // crossings on each side
  std::array<int, 3> a{};  // arcs cutting off each corner
  int terminal_side = -1;
  int terminals = 0;
};

}  // namespace

std::vector<EdgeSlot> decode_normal(const ConeSurface& s, const NormalCoordinate& nc) {
  if (static_cast<int>(nc.counts.size()) != s.edge_count())
    throw Error(ErrorCode::Inadmissible, fmt::format("expected {} counts, got {}", s.edge_count(), nc.counts.size()));
  for (const CornerSlot c : {nc.start, nc.end}) {
    if (c.tri < 0 || c.tri >= s.triangle_count() || c.corner < 0 || c.corner > 2)
      throw Error(ErrorCode::IndexOutOfRange, "endpoint corner out of range");
  }
  if (nc.is_edge()) return {};
  std::int64_t total = 0;
  for (int x : nc.counts) {
    if (x < 0) throw Error(ErrorCode::Inadmissible, "negative crossing count");
    total += x;
  }
  if (total == 0) throw Error(ErrorCode::Inadmissible, "all-zero coordinate is not a normal path");

  std::vector<Arcs> arcs(s.triangle_count());
  for (int t = 0; t < s.triangle_count(); ++t) {
    auto& ar = arcs[t];
    for (int j = 0; j < 3; ++j) ar.p[j] = nc.counts[s.edge_id({t, j})];
    int corner = -1;
    for (const CornerSlot c : {nc.start, nc.end}) {
      if (c.tri != t) continue;
      if (corner >= 0 && corner != c.corner)
        throw Error(ErrorCode::Inadmissible, fmt::format("terminal arcs at two corners of triangle {}", t));
      corner = c.corner;
      ++ar.terminals;
    }
    const auto& p = ar.p;
    if (ar.terminals == 0) {
      for (int j = 0; j < 3; ++j) {
        const int twice = p[j] + p[prev3(j)] - p[next3(j)];
        if (twice < 0 || twice % 2 != 0)
          throw Error(ErrorCode::Inadmissible, fmt::format("triangle {} fails the matching condition", t));
        ar.a[j] = twice / 2;
      }
    } else {
      const int c = corner, r = next3(c), l = prev3(c);
      if (p[r] != p[c] + p[l] + ar.terminals)
        throw Error(ErrorCode::Inadmissible, fmt::format("triangle {} fails the terminal matching condition", t));
      ar.a = {};
      ar.a[c] = 0;
      ar.a[r] = p[c];
      ar.a[l] = p[l];
      ar.terminal_side = r;
    }
  }

  // Arc pairing inside triangle t for point k on side j, as (side, index); side -1 marks a terminal.
  auto pair_in = [&](int t, int j, int k) -> std::pair<int, int> {
    const auto& ar = arcs[t];
    if (k < ar.a[j]) return {prev3(j), ar.p[prev3(j)] - 1 - k};
    if (k >= ar.p[j] - ar.a[next3(j)]) return {next3(j), ar.p[j] - 1 - k};
    return {-1, k - ar.a[j]};
  };

  const bool same = nc.start == nc.end;
  const int start_side = next3(nc.start.corner);
  const int end_term = same ? (nc.start_first ? 1 : 0) : 0;
  int t = nc.start.tri;
  int j = start_side;
  int k = arcs[t].a[j] + (same && !nc.start_first ? 1 : 0);

  std::vector<EdgeSlot> out;
  for (;;) {
    if (static_cast<std::int64_t>(out.size()) >= total)
      throw Error(ErrorCode::Inadmissible, "path does not close up within the counted crossings");
    out.push_back({t, j});
    const EdgeSlot p = s.partner({t, j});
    const int count = arcs[p.tri].p[p.edge];
    const auto [side, idx] = pair_in(p.tri, p.edge, count - 1 - k);
    t = p.tri;
    if (side < 0) {
      if (t != nc.end.tri || p.edge != arcs[t].terminal_side || idx != end_term)
        throw Error(ErrorCode::Inadmissible, "path returns to its own start");
      break;
    }
    j = side;
    k = idx;
  }
  if (static_cast<std::int64_t>(out.size()) != total)
    throw Error(ErrorCode::Inadmissible, "coordinate contains closed components besides the connection");
  return out;
}

std::vector<std::int64_t> injectivity_key(const ConeSurface& s, const NormalCoordinate& nc) {
  std::vector<std::int64_t> key(nc.counts.begin(), nc.counts.end());
  (void)s;
  const int a = nc.start.index(), b = nc.end.index();
  key.push_back(std::min(a, b));
  key.push_back(std::max(a, b));
  key.push_back(nc.edge_id);
  return key;
}

CompositionCount weak_composition_count(std::int64_t k, int n) {
  if (n < 3) throw Error(ErrorCode::Domain, "weak compositions need n >= 3");
  if (k < 0) throw Error(ErrorCode::Domain, "weak compositions need k >= 0");
  const std::int64_t parts = 3 * (n - 2);
  const std::int64_t q = 3 * n - 7;
  CompositionCount r;

  // C(k + parts - 1, parts - 1) as a running product of exact binomials C(k + i, i).
  unsigned __int128 acc = 1;
  bool overflow = false;
  for (std::int64_t i = 1; i <= parts - 1 && !overflow; ++i) {
    acc = acc * static_cast<unsigned __int128>(k + i) / static_cast<unsigned __int128>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) overflow = true;
  }
  if (!overflow) r.exact = static_cast<std::uint64_t>(acc);

  const double ln2 = std::log(2.0);
  const double kk = static_cast<double>(k);
  r.log2_count = (std::lgamma(kk + parts) - std::lgamma(kk + 1.0) - std::lgamma(static_cast<double>(parts))) / ln2;
  r.log2_bound = (q * std::log(kk + q) - std::lgamma(q + 1.0)) / ln2;
  if (r.exact && r.log2_bound < 62.0) {
    const long double bound = std::pow(static_cast<long double>(kk + q), static_cast<long double>(q)) /
                              std::tgamma(static_cast<long double>(q + 1));
    r.below_bound = static_cast<long double>(*r.exact) < bound;
  } else {
    r.below_bound = r.log2_count < r.log2_bound;
  }
  return r;
}

}  // namespace flatsphere
