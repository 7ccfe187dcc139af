#include "flatsphere/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "flatsphere/annulus.hpp"
#include "flatsphere/bounds.hpp"
#include "flatsphere/curvature.hpp"
#include "flatsphere/delaunay.hpp"
#include "flatsphere/normalcoords.hpp"

namespace flatsphere::cli {

namespace {

struct Globals {
  double tol = kDefaultTolerance;
  std::uint64_t seed = 1;
  std::int64_t budget_nodes = 10'000'000;
  std::optional<double> budget_seconds;
  int threads = 0;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, fmt::format("file not found: {}", path));
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, fmt::format("cannot write {}", path));
  f << text;
}

ConeSurface load(const std::string& path, std::istream& in, double tol) {
  return validated(parse_surface(read_input(path, in)), tol);
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw Error(ErrorCode::Syntax, fmt::format("bad number '{}'", tok));
    out.push_back(v);
  }
  return out;
}

std::string join_slots(std::span<const EdgeSlot> xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += fmt::format("{}{}:{}", i ? ";" : "", xs[i].tri, xs[i].edge);
  return s;
}

std::vector<Vec2> named_polygon(const std::string& name) {
  if (name == "equilateral") return {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
  if (name == "right") return {{0, 0}, {std::sqrt(3.0), 0}, {0, 1}};
  if (name == "obtuse") return {{0, 0}, {1, 0}, {0.5, 0.2}};
  if (name == "square") return {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  if (name == "thin") {
    const double s = std::sin(kPi / 20), c = std::cos(kPi / 20);
    return {{-s, 0}, {s, 0}, {0, c}};
  }
  throw Error(ErrorCode::Syntax, fmt::format("unknown shape '{}'", name));
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Syntax:
    case ErrorCode::DuplicateGluing:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::NonpositiveLength:
    case ErrorCode::Io:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

std::string trajectory_svg(const Trajectory& t) {
  double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
  auto grow = [&](Vec2 p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  };
  for (const auto& tri : t.developed_triangles)
    for (const auto& p : tri) grow(p);
  for (const auto& p : t.developed) grow(p);
  const double span = std::max({x1 - x0, y1 - y0, 1e-12});
  const double pad = 0.05 * span;
  const double size = 800.0;
  const double k = size / (span + 2 * pad);
  // SVG y grows downwards.
  auto X = [&](Vec2 p) { return (p.x - x0 + pad) * k; };
  auto Y = [&](Vec2 p) { return (y1 - p.y + pad) * k; };

  std::string s = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\">\n",
      (x1 - x0 + 2 * pad) * k, (y1 - y0 + 2 * pad) * k);
  s += "<g fill=\"none\" stroke=\"#999\" stroke-width=\"1\">\n";
  for (const auto& tri : t.developed_triangles) {
    s += fmt::format("<polygon points=\"{:.3f},{:.3f} {:.3f},{:.3f} {:.3f},{:.3f}\"/>\n", X(tri[0]), Y(tri[0]),
                     X(tri[1]), Y(tri[1]), X(tri[2]), Y(tri[2]));
  }
  s += "</g>\n<polyline fill=\"none\" stroke=\"#c00\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < t.developed.size(); ++i)
    s += fmt::format("{}{:.3f},{:.3f}", i ? " " : "", X(t.developed[i]), Y(t.developed[i]));
  s += "\"/>\n</svg>\n";
  return s;
}

std::string saddles_csv(const ConeSurface& d, const std::vector<SaddleConnection>& cs, bool simple_only) {
  std::string s = "length,crossings,self_intersections,start_vertex,end_vertex,normal_coordinate\n";
  for (const auto& c : cs) {
    const Trajectory t = to_trajectory(d, c);
    const int k = count_self_intersections(t);
    if (simple_only && k > 0) continue;
    std::string nc;
    if (c.is_edge()) {
      nc = "edge";
    } else if (k == 0) {
      const auto code = encode_normal(d, c);
      for (std::size_t i = 0; i < code.counts.size(); ++i) nc += fmt::format("{}{}", i ? ";" : "", code.counts[i]);
    }
    s += fmt::format("{:.12f},{},{},{},{},{}\n", c.length, c.crossings.size(), k, c.start_vertex, c.end_vertex, nc);
  }
  return s;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flat spheres with cone singularities: validation, geodesics and bounds", "flatsphere"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol", g.tol, "Numeric tolerance for validation and Delaunay tests");
  app.add_option("--seed", g.seed, "Seed for randomized generators");
  app.add_option("--budget-nodes", g.budget_nodes, "Node cap for saddle connection search");
  app.add_option("--budget-seconds", g.budget_seconds, "Wall-clock cap for saddle connection search");
  app.add_option("--threads", g.threads, "Worker threads (0 = hardware concurrency)");

  std::string file;
  auto add_sub = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  auto* validate = add_sub("validate", "Check every invariant of a surface");
  validate->add_option("file", file, "fsph file or -")->required();

  auto* info = add_sub("info", "Cone angles, curvatures, gap and area");
  info->add_option("file", file, "fsph file or -")->required();

  auto* gap = add_sub("gap", "Curvature gap of a surface or a raw curvature multiset");
  std::string curv_list;
  gap->add_option("file", file, "fsph file or -");
  gap->add_option("--curvatures", curv_list, "Comma-separated curvatures");

  auto* del = add_sub("delaunay", "Flip to a Delaunay triangulation");
  std::string out_path;
  bool report = false;
  del->add_option("file", file, "fsph file or -")->required();
  del->add_option("--out", out_path, "Output fsph file");
  del->add_flag("--report", report, "Print the flip report");

  auto* trace_cmd = add_sub("trace", "Trace a geodesic by unfolding");
  int tri = 0;
  std::string bary, corner, svg_path;
  double angle = 0.0, max_length = 1.0;
  trace_cmd->add_option("file", file, "fsph file or -")->required();
  trace_cmd->add_option("--triangle", tri, "Start triangle");
  auto* bary_opt = trace_cmd->add_option("--bary", bary, "Barycentric start u,v: (1-u-v) c0 + u c1 + v c2");
  trace_cmd->add_option("--corner", corner, "Start at corner t,c instead of an interior point")->excludes(bary_opt);
  trace_cmd->add_option("--angle", angle, "Direction in radians")->required();
  trace_cmd->add_option("--max-length", max_length, "Length cap")->required();
  trace_cmd->add_option("--svg", svg_path, "Write the developed trajectory as SVG");

  auto* saddles = add_sub("saddles", "Enumerate saddle connections on the Delaunay triangulation as CSV");
  bool simple_only = false;
  saddles->add_option("file", file, "fsph file or -")->required();
  saddles->add_option("--max-length", max_length, "Length cutoff")->required();
  saddles->add_flag("--simple-only", simple_only, "Only simple connections");

  auto* bounds = add_sub("bounds", "Evaluate every closed-form bound");
  int n = 3;
  double delta = 1.0 / 3.0;
  std::int64_t kk = 0;
  bounds->add_option("--n", n, "Number of cone points")->required();
  bounds->add_option("--delta", delta, "Curvature gap")->required();
  bounds->add_option("--k", kk, "Self-intersection count");

  auto* verify = add_sub("verify", "Run every bound check on a surface");
  verify->add_option("file", file, "fsph file or -")->required();

  auto* ann = add_sub("annulus", "Straight trajectories in a flat annulus");
  AnnulusSpec spec;
  std::optional<double> alpha;
  std::string start = "outer";
  ann->add_option("--R", spec.inner, "Inner radius")->required();
  ann->add_option("--Rp", spec.outer, "Outer radius")->required();
  ann->add_option("--theta", spec.theta, "Apex angle")->required();
  ann->add_option("--alpha", alpha, "Angle with the radial leaf");
  ann->add_option("--start", start, "inner or outer")->check(CLI::IsMember({"inner", "outer"}));

  auto* gen = add_sub("generate", "Doubled convex polygon");
  std::string shape;
  int vertices = 0;
  double min_gap = 0.01;
  gen->add_option("--shape", shape, "equilateral, right, obtuse, square or thin (unit sides, not normalized)");
  gen->add_option("--vertices", vertices, "Polygon vertex count, 3..12 (random when omitted)");
  gen->add_option("--min-gap", min_gap, "Reject random polygons with a smaller curvature gap");
  gen->add_option("--out", out_path, "Output fsph file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      const ConeSurface s = parse_surface(read_input(file, in));
      const auto r = validate_surface(s, g.tol);
      for (const auto& c : r.checks) {
        out << fmt::format("check {} {}", c.name, c.pass ? "pass" : "fail");
        if (!c.pass) {
          out << " " << c.reason;
          for (int slot : c.slots) out << " " << slot;
        }
        out << "\n";
      }
      out << fmt::format("gauss_bonnet_residual={:.3e}\nvalid={}\n", r.gauss_bonnet_residual, r.pass);
      return r.pass ? 0 : 1;
    }
    if (*info) {
      const ConeSurface s = load(file, in, g.tol);
      const auto cones = cone_data(s);
      const auto k = curvatures(s);
      out << fmt::format("n={}\ntriangles={}\nedges={}\narea={:.9g}\n", s.vertex_count(), s.triangle_count(),
                         s.edge_count(), s.area());
      out << fmt::format("gap={:.9g}\n", curvature_gap(k));
      for (const auto& c : cones)
        out << fmt::format("cone {} angle={:.9g} angle_over_pi={:.9g} curvature={:.9g}\n", c.id, c.angle,
                           c.angle / kPi, c.curvature);
      return 0;
    }
    if (*gap) {
      std::vector<double> k;
      if (!curv_list.empty()) {
        k = parse_list(curv_list);
      } else if (!file.empty()) {
        k = curvatures(load(file, in, g.tol));
      } else {
        err << "gap: give a surface file or --curvatures\n";
        return 2;
      }
      out << fmt::format("n={}\ngap={:.12g}\n", k.size(), curvature_gap(k));
      return 0;
    }
    if (*del) {
      const auto r = delaunayize(load(file, in, g.tol), {.max_flips = -1, .tol = g.tol});
      if (report) {
        out << fmt::format("flips={}\ncap={}\ndelaunay={}\n", r.flips, r.cap, is_delaunay(r.surface, g.tol));
        for (int id = 0; id < r.surface.edge_count(); ++id)
          out << fmt::format("edge {} length={:.12g}\n", id, r.surface.length(r.surface.edge_slot(id)));
        if (!out_path.empty()) write_output(out_path, serialize_surface(r.surface), out);
      } else {
        write_output(out_path, serialize_surface(r.surface), out);
      }
      return 0;
    }
    if (*trace_cmd) {
      const ConeSurface s = load(file, in, g.tol);
      Anchor a;
      if (!corner.empty()) {
        const auto v = parse_list(corner);
        if (v.size() != 2) throw Error(ErrorCode::Syntax, "--corner expects t,c");
        a = VertexAnchor{{static_cast<int>(v[0]), static_cast<int>(v[1])}};
      } else {
        const auto v = bary.empty() ? std::vector<double>{1.0 / 3, 1.0 / 3} : parse_list(bary);
        if (v.size() != 2) throw Error(ErrorCode::Syntax, "--bary expects u,v");
        if (tri < 0 || tri >= s.triangle_count()) throw Error(ErrorCode::IndexOutOfRange, "triangle out of range");
        const auto c = s.chart(tri);
        a = PointAnchor{tri, c[0] * (1.0 - v[0] - v[1]) + c[1] * v[0] + c[2] * v[1]};
      }
      const Trajectory t = trace(s, a, angle, {.max_length = max_length});
      out << fmt::format("status={}\nlength={:.12g}\nsegments={}\ncrossings={}\n", to_string(t.status), t.length,
                         t.segments.size(), t.crossings.size());
      out << fmt::format("crossing_sequence={}\nself_intersections={}\n", join_slots(t.crossings),
                         count_self_intersections(t));
      if (t.end_corner) out << fmt::format("end_vertex={}\n", s.vertex_of(*t.end_corner));
      if (!svg_path.empty()) write_output(svg_path, trajectory_svg(t), out);
      return 0;
    }
    if (*saddles) {
      const auto d = delaunayize(load(file, in, g.tol), {.max_flips = -1, .tol = g.tol}).surface;
      EnumerationOptions eo{max_length, g.budget_nodes, g.threads, g.budget_seconds};
      const auto r = enumerate_saddle_connections(d, eo);
      out << saddles_csv(d, r.connections, simple_only);
      if (r.truncated) {
        err << fmt::format("warning: enumeration truncated ({}); list is incomplete\n", r.truncation_reason);
        return 1;
      }
      return 0;
    }
    if (*bounds) {
      const auto b = compute_bounds(n, delta, kk);
      out << fmt::format("n={}\ndelta={:.12g}\nk={}\n", b.n, b.delta, b.k);
      out << fmt::format("s_bound={:.12g}\ncount_bound_log2={:.12g}\n", b.s_bound, b.count_bound_log2);
      out << fmt::format("simple_count_bound={:.12g}\nsimple_count_bound_log2={:.12g}\n", b.simple_count_bound,
                         b.simple_count_bound_log2);
      out << fmt::format("length_bound={:.12g}\nsimple_length_bound={:.12g}\n", b.length_bound, b.simple_length_bound);
      out << fmt::format("diameter_bound={:.12g}\ndelaunay_L2_bound={:.12g}\n", b.diameter_bound, b.delaunay_L2_bound);
      out << fmt::format("comb_length_bound={:.12g}\nchords_bound={:.12g}\n", b.comb_length_bound, b.chords_bound);
      out << fmt::format("monogon_angle_bound={:.12g}\nsi_comb_bound={:.12g}\n", b.monogon_angle_bound,
                         b.si_comb_bound);
      return 0;
    }
    if (*verify) {
      const ConeSurface s = load(file, in, g.tol);
      VerificationReport r;
      try {
        r = verify_surface(s, {.node_budget = g.budget_nodes, .time_budget_seconds = g.budget_seconds,
                               .threads = g.threads, .tol = g.tol});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Domain) throw;
        err << "verify refused: " << e.what() << "\n";
        return 1;
      }
      out << fmt::format("n={}\ndelta={:.12g}\nflips={}\ncutoff={:.12g}\nenumerated_to={:.12g}\n", r.n, r.delta,
                         r.flips, r.cutoff, r.enumerated_to);
      out << fmt::format("connections={}\nsimple={}\nmonogons={}\ndiameter={:.12g}\n", r.connections,
                         r.simple_connections, r.monogons, r.diameter);
      for (const auto& c : r.checks) {
        out << fmt::format("check {} {}{}: {}", c.name, c.pass ? "pass" : "FAIL", c.partial ? " (partial)" : "",
                           c.detail);
        if (!c.witness.empty()) out << " [" << c.witness << "]";
        out << "\n";
      }
      for (const auto& w : r.warnings) err << "warning: " << w << "\n";
      out << fmt::format("result={}\n", r.pass() ? "pass" : "fail");
      return r.pass() ? 0 : 1;
    }
    if (*ann) {
      check_annulus(spec);
      if (spec.inner > 0) out << fmt::format("modulus={:.12g}\n", modulus(spec));
      out << fmt::format("sc_lower_bound={:.12g}\n", annulus_sc_lower_bound(spec));
      if (alpha) {
        const auto r = classify_trajectory(spec, start == "inner" ? AnnulusStart::Inner : AnnulusStart::Outer, *alpha);
        out << fmt::format("regime={}\nmin_radius={:.12g}\nexit={}\nself_intersections={}\n", to_string(r.regime),
                           r.min_radius, r.exit == AnnulusBoundary::Inner ? "inner" : "outer", r.self_intersections);
      }
      return 0;
    }
    if (*gen) {
      ConeSurface s;
      if (!shape.empty()) {
        s = generate_doubled_polygon(named_polygon(shape));
      } else {
        std::mt19937_64 rng(g.seed);
        for (int attempt = 0;; ++attempt) {
          if (attempt >= 10000) throw Error(ErrorCode::Domain, "no polygon met the minimum curvature gap");
          const int m = vertices > 0 ? vertices : std::uniform_int_distribution<int>(3, 12)(rng);
          if (m < 3) throw Error(ErrorCode::Domain, "a polygon needs at least three vertices");
          const auto poly = random_convex_polygon(rng, m);
          s = normalize_area(generate_doubled_polygon(poly));
          if (curvature_gap(curvatures(s)) > min_gap) break;
        }
      }
      write_output(out_path, serialize_surface(s), out);
      return 0;
    }
  } catch (const Error& e) {
    if (e.line() > 0) err << fmt::format("error ({}) at line {}: {}\n", to_string(e.code()), e.line(), e.what());
    else err << fmt::format("error ({}): {}\n", to_string(e.code()), e.what());
    return exit_code(e);
  }
  return 2;
}

}  // namespace flatsphere::cli
