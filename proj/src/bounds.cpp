#include "flatsphere/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fmt/format.h>
#include <map>
#include <set>
#include <thread>

#include "flatsphere/curvature.hpp"
#include "flatsphere/delaunay.hpp"
#include "flatsphere/geodesic.hpp"
#include "flatsphere/normalcoords.hpp"

namespace flatsphere {

namespace {

const double kSqrtPi = std::sqrt(kPi);
const double kSqrt2Pi = std::sqrt(2.0 * kPi);

void require_domain(int n, double delta) {
  if (n < 3) throw Error(ErrorCode::Domain, fmt::format("bounds need n >= 3, got {}", n));
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw Error(ErrorCode::Domain, fmt::format("bounds need a positive curvature gap, got {}", delta));
}

}  // namespace

double s_bound(int n, double delta, double k) {
  return (20.0 * n * (n - 1) * std::sqrt(k) + 20.0 * n) / delta;
}

double length_bound(int n, double delta, double k) {
  const double a = 40.0 * n * (n - 1) * std::sqrt(k) + 40.0 * n;
  const double b = 20.0 * n * (n - 1) * std::sqrt(k) + 20.0 * n;
  return a / (delta * kSqrtPi) + b / (std::pow(delta, 1.5) * kSqrt2Pi);
}

double si_comb_bound(int n, double l, double k) { return 4.0 * l * (n - 1) * std::sqrt(k) + 4.0 * l; }

BoundsReport compute_bounds(int n, double delta, std::int64_t k) {
  require_domain(n, delta);
  if (k < 0) throw Error(ErrorCode::Domain, "self-intersection count must be nonnegative");
  BoundsReport r;
  r.n = n;
  r.delta = delta;
  r.k = k;
  const double kk = static_cast<double>(k);
  r.s_bound = s_bound(n, delta, kk);
  r.count_bound_log2 = std::log2(3.0 * n - 6.0) + r.s_bound;
  r.comb_length_bound = 5.0 * n / delta;
  // (5n/delta + 3n - 7)^(3n-6) / (3n-7)! + 3n - 6, evaluated through logarithms.
  const double q = 3.0 * n - 7.0;
  const double log_main = (3.0 * n - 6.0) * std::log(r.comb_length_bound + q) - std::lgamma(q + 1.0);
  r.simple_count_bound = std::exp(log_main) + (3.0 * n - 6.0);
  r.simple_count_bound_log2 = std::isfinite(r.simple_count_bound)
                                  ? std::log2(r.simple_count_bound)
                                  : log_main / std::log(2.0);
  r.length_bound = length_bound(n, delta, kk);
  r.simple_length_bound = 10.0 * n / (delta * kSqrtPi) + 5.0 * n / (std::pow(delta, 1.5) * kSqrt2Pi);
  r.diameter_bound = (n + 1) * (2.0 / kSqrtPi + 1.0 / std::sqrt(2.0 * kPi * delta));
  r.delaunay_L2_bound = 4.0 / kPi + 1.0 / (2.0 * kPi * delta);
  r.chords_bound = 5.0 / (2.0 * delta);
  r.monogon_angle_bound = kPi - 2.0 * kPi * delta;
  r.si_comb_bound = si_comb_bound(n, r.comb_length_bound, kk);
  return r;
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

struct Measured {
  int self_intersections = 0;
  int comb = 0;
  int max_per_triangle = 0;
  double max_monogon = 0.0;
  int monogons = 0;
  bool round_trip = true;
  std::string error;
  std::vector<std::int64_t> key;
};

template <class F>
void parallel_for(int count, int threads, F&& f) {
  if (threads <= 1 || count < 64) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) f(i);
    });
  }
}

std::string describe(const SaddleConnection& c) {
  return fmt::format("length {:.9g} from vertex {} to vertex {} ({} crossings)", c.length, c.start_vertex,
                     c.end_vertex, c.crossings.size());
}

}  // namespace

VerificationReport verify_surface(const ConeSurface& input, const VerifyOptions& opt) {
  if (!input.is_valid()) throw Error(ErrorCode::InvalidSurface, "verify needs a validated surface");
  VerificationReport rep;
  rep.original_area = input.area();
  const ConeSurface s = normalize_area(input);
  const auto k = curvatures(s);
  rep.n = static_cast<int>(k.size());
  rep.delta = curvature_gap(k);
  if (rep.delta < 1e-9) {
    throw Error(ErrorCode::Domain,
                "curvature gap is zero: the bounds are vacuous and the surface may contain a flat cylinder");
  }
  const int n = rep.n;
  const double delta = rep.delta;
  const BoundsReport b = compute_bounds(n, delta, 0);
  rep.cutoff = b.simple_length_bound;

  auto add = [&rep](CheckResult c) { rep.checks.push_back(std::move(c)); };

  // Delaunay triangulation and the bounds that only need it.
  FlipReport fr = delaunayize(s, {.max_flips = -1, .tol = opt.tol});
  rep.flips = fr.flips;
  const ConeSurface& d = fr.surface;
  add({"flip-count", fr.flips <= fr.cap, false, fmt::format("{} flips, cap {}", fr.flips, fr.cap), ""});
  {
    int bad = -1;
    for (int id = 0; id < d.edge_count() && bad < 0; ++id)
      if (!is_locally_delaunay(d, d.edge_slot(id), opt.tol)) bad = id;
    add({"delaunay", bad < 0, false, "every edge locally Delaunay", bad < 0 ? "" : fmt::format("edge {}", bad)});
  }
  {
    const auto eb = check_edge_length_bound(d, delta);
    add({"edge-length", eb.pass, false, fmt::format("max L^2 {:.9g} vs bound {:.9g}", eb.max_sq, eb.threshold_sq),
         eb.pass ? "" : fmt::format("edge {}", eb.violations.front())});
  }
  rep.diameter = cone_graph_diameter(d);
  add({"diameter", rep.diameter <= b.diameter_bound + 1e-9, false,
       fmt::format("skeleton diameter {:.9g} vs bound {:.9g}", rep.diameter, b.diameter_bound), ""});

  // Enumeration, shrinking the cutoff until a run completes within the budget.
  EnumerationOptions eo;
  eo.node_budget = opt.node_budget;
  eo.threads = opt.threads;
  eo.time_budget_seconds = opt.time_budget_seconds;
  eo.max_length = rep.cutoff;
  EnumerationResult er;
  for (int attempt = 0;; ++attempt) {
    er = enumerate_saddle_connections(d, eo);
    if (!er.truncated) break;
    if (!rep.truncated) {
      rep.truncated = true;
      rep.truncation_reason = er.truncation_reason;
    }
    if (attempt + 1 >= opt.max_attempts || er.truncation_reason.starts_with("time")) {
      eo.max_length = 0.0;
      break;
    }
    eo.max_length *= opt.shrink;
  }
  rep.enumerated_to = eo.max_length;
  rep.nodes = er.nodes;
  if (rep.truncated) {
    rep.warnings.push_back(fmt::format("enumeration truncated ({}); complete up to length {:.9g} of {:.9g}",
                                       rep.truncation_reason, rep.enumerated_to, rep.cutoff));
  }
  const auto& cs = er.connections;
  rep.connections = static_cast<int>(cs.size());

  std::vector<Measured> m(cs.size());
  int threads = opt.threads > 0 ? opt.threads : static_cast<int>(std::thread::hardware_concurrency());
  parallel_for(static_cast<int>(cs.size()), threads, [&](int i) {
    auto& r = m[i];
    const auto& c = cs[i];
    try {
      const Trajectory t = to_trajectory(d, c);
      r.comb = combinatorial_length(t, d);
      const auto per = per_triangle_crossings(t, d);
      r.max_per_triangle = *std::max_element(per.begin(), per.end());
      const auto mono = extract_monogons(t);
      r.self_intersections = count_self_intersections(t);
      r.monogons = static_cast<int>(mono.size());
      for (const auto& mg : mono) r.max_monogon = std::max(r.max_monogon, mg.interior_angle);
      if (r.self_intersections == 0) {
        const NormalCoordinate nc = encode_normal(d, c);
        r.key = injectivity_key(d, nc);
        if (!c.is_edge()) r.round_trip = decode_normal(d, nc) == c.crossings;
      }
    } catch (const Error& e) {
      r.error = e.what();
    }
  });

  const bool part = rep.truncated;
  CheckResult errors{"measurement", true, false, "every connection developed and measured", ""};
  CheckResult comb{"simple-comb-length", true, part, fmt::format("bound {:.9g}", b.comb_length_bound), ""};
  CheckResult chords{"simple-per-triangle", true, part, fmt::format("bound {:.9g}", b.chords_bound), ""};
  CheckResult distinct{"normal-distinct", true, part, "", ""};
  CheckResult trip{"normal-round-trip", true, part, "", ""};
  CheckResult si_len{"si-length", true, part, "", ""};
  CheckResult si_comb{"si-comb-length", true, part, "", ""};
  CheckResult mono{"monogon-angle", true, part, fmt::format("bound {:.9g}", b.monogon_angle_bound), ""};
  std::set<std::vector<std::int64_t>> keys;
  std::map<int, std::int64_t> by_k;
  double worst_mono = 0.0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto& r = m[i];
    const auto& c = cs[i];
    auto fail = [&](CheckResult& chk, std::string why) {
      if (chk.pass) chk.witness = fmt::format("connection {}: {}; {}", i, describe(c), why);
      chk.pass = false;
    };
    if (!r.error.empty()) {
      fail(errors, r.error);
      continue;
    }
    ++by_k[r.self_intersections];
    rep.monogons += r.monogons;
    worst_mono = std::max(worst_mono, r.max_monogon);
    if (r.monogons > 0 && r.max_monogon > b.monogon_angle_bound + 1e-9)
      fail(mono, fmt::format("angle {:.12g}", r.max_monogon));
    if (r.self_intersections == 0) {
      ++rep.simple_connections;
      if (r.comb > b.comb_length_bound + 1e-9) fail(comb, fmt::format("combinatorial length {}", r.comb));
      if (r.max_per_triangle > b.chords_bound + 1e-9)
        fail(chords, fmt::format("{} passes through one triangle", r.max_per_triangle));
      if (!keys.insert(r.key).second) fail(distinct, "normal coordinate repeats an earlier connection");
      if (!r.round_trip) fail(trip, "decoded crossing sequence differs");
    } else {
      const double kk = r.self_intersections;
      const double lb = length_bound(n, delta, kk);
      const double cb = si_comb_bound(n, b.comb_length_bound, kk);
      if (c.length > lb + 1e-9) fail(si_len, fmt::format("{} self-intersections, bound {:.9g}", kk, lb));
      if (r.comb > cb + 1e-9) fail(si_comb, fmt::format("{} self-intersections, comb {}, bound {:.9g}", kk, r.comb, cb));
    }
  }
  distinct.detail = fmt::format("{} simple connections", rep.simple_connections);
  trip.detail = distinct.detail;
  mono.detail += fmt::format(", largest {:.9g} over {} monogons", worst_mono, rep.monogons);
  si_len.detail = fmt::format("{} self-intersecting connections", rep.connections - rep.simple_connections);
  si_comb.detail = si_len.detail;
  for (auto* c : {&errors, &comb, &chords, &distinct, &trip, &si_len, &si_comb, &mono}) add(std::move(*c));

  add({"simple-count", rep.simple_connections <= b.simple_count_bound, part,
       fmt::format("{} simple connections vs bound {:.9g}{}", rep.simple_connections, b.simple_count_bound,
                   part ? " (lower-bound sanity check only)" : ""),
       ""});
  {
    // Connections with at most k self-intersections against (3n-6) 2^s(k).
    CheckResult cnt{"saddle-count", true, part, "", ""};
    std::int64_t cumulative = 0;
    for (const auto& [kk, count] : by_k) {
      cumulative += count;
      const double lim = compute_bounds(n, delta, kk).count_bound_log2;
      if (std::log2(static_cast<double>(cumulative)) > lim) {
        cnt.pass = false;
        cnt.witness = fmt::format("{} connections with <= {} self-intersections", cumulative, kk);
      }
    }
    cnt.detail = fmt::format("{} connections", rep.connections);
    add(std::move(cnt));
  }
  return rep;
}

}  // namespace flatsphere
