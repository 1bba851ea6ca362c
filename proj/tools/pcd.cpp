// pcd: command line front end.
//
// Exit codes: 0 success, 2 input error, 3 refusal at a degenerate limit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pepcd/asymptotics.hpp"
#include "pepcd/io.hpp"
#include "pepcd/montecarlo.hpp"
#include "pepcd/mtdensity.hpp"
#include "pepcd/spatial.hpp"

using namespace pepcd;
using io::Json;

namespace {

constexpr int kInputError = 2;
constexpr int kDegenerateLimit = 3;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << text;
}

void emit_json(const std::string& path, const Json& j) { emit(path, j.dump(2) + "\n"); }

Point2d parse_point(const std::string& text) {
  std::istringstream in(text);
  const auto pts = io::parse_points_csv(in, "--x");
  if (pts.size() != 1) throw Error(ErrorKind::InvalidArgument, "expected a single point \"x,y\"");
  return pts.front();
}

Triangle2d parse_triangle(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    std::istringstream one(field + ",0");
    v.push_back(io::parse_points_csv(one, "--tri").front().x());
  }
  if (v.size() != 6) throw Error(ErrorKind::InvalidArgument, "--tri expects x1,y1,x2,y2,x3,y3");
  return Triangle2d(Point2d(v[0], v[1]), Point2d(v[2], v[3]), Point2d(v[4], v[5]));
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// key=value lines fill options the command line left unset.
void apply_config(const std::string& path, CLI::App& app, CLI::App& sub) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open config " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Io, path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(t.substr(0, eq)), value = trim(t.substr(eq + 1));
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (!opt) opt = app.get_option_no_throw("--" + key);
    if (!opt) throw Error(ErrorKind::InvalidArgument, path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (opt->count() > 0) continue;
    opt->add_result(value);
    opt->run_callback();
  }
}

std::uint64_t parse_seed(const std::string& text, const char* source) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidArgument, std::string("bad seed in ") + source + ": '" + text + "'");
}

std::vector<Point2d> filtered(const Triangulation& t, const std::vector<Point2d>& x, bool drop, std::size_t& excluded) {
  if (!drop) {
    excluded = 0;
    return x;
  }
  HullFilter f = filter_to_hull(t, x);
  excluded = f.outside.size();
  return f.inside;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proportional-edge proximity catch digraphs: densities, asymptotics, CSR tests", "pcd"};
  app.require_subcommand(1);
  std::string config_path;
  bool exact = true;
  app.add_option("--config", config_path, "key=value file with defaults for the subcommand");
  app.add_flag("--exact-predicates,!--no-exact-predicates", exact, "exact orientation/in-circle tests (default on)");

  // curves
  auto* curves = app.add_subcommand("curves", "closed-form p, Var[h12] and nu over an r grid (CSV)");
  double from = 1.0, to = 5.0;
  std::size_t points = 201;
  std::vector<std::string> r_list;
  std::string out_path;
  curves->add_option("--from", from, "grid start")->capture_default_str();
  curves->add_option("--to", to, "grid end")->capture_default_str();
  curves->add_option("--points", points, "grid size")->capture_default_str()->check(CLI::PositiveNumber);
  curves->add_option("--r", r_list, "explicit r values instead of the grid (\"inf\" allowed)");
  curves->add_option("--out,-o", out_path, "output file (default stdout)");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo densities under uniform data");
  std::size_t n = 100, reps = 1000;
  std::string r_text = "2";
  std::string seed_text;
  std::vector<std::string> kinds;
  std::string geometry = "te";
  unsigned threads = 1;
  std::optional<std::size_t> bins;
  std::string hist_dir, dump_path;
  bool values = false;
  simulate->add_option("--n", n, "sample size")->capture_default_str();
  simulate->add_option("--r", r_text, "expansion parameter, number or inf")->capture_default_str();
  simulate->add_option("--reps", reps, "replicates")->capture_default_str();
  simulate->add_option("--seed", seed_text, "master seed (default $PCD_SEED, else 0)");
  simulate->add_option("--kind", kinds, "arc|and|or, repeatable (default all)");
  simulate->add_option("--geometry", geometry, "te or a CSV of anchor points")->capture_default_str();
  simulate->add_option("--threads", threads, "worker cap; results do not depend on it")->capture_default_str();
  simulate->add_option("--bins", bins, "histogram bins (default Freedman-Diaconis)");
  simulate->add_option("--histogram-dir", hist_dir, "write hist_<kind>.csv files here");
  simulate->add_option("--dump-sample", dump_path, "write the sample of replicate 0 as CSV");
  simulate->add_flag("--values", values, "include per-replicate densities in the JSON");
  simulate->add_option("--out,-o", out_path, "output file (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "densities of a given sample");
  std::string x_path, y_path, adjacency_path;
  bool drop_outside = false;
  analyze->add_option("--x", x_path, "sample CSV")->required();
  analyze->add_option("--y", y_path, "anchor CSV (default: T_e)");
  analyze->add_option("--r", r_text, "expansion parameter")->capture_default_str();
  analyze->add_flag("--drop-outside", drop_outside, "ignore sample points outside the hull");
  analyze->add_option("--adjacency", adjacency_path, "write {n, arcs} JSON here");
  analyze->add_option("--out,-o", out_path, "output file (default stdout)");

  // test
  auto* test = app.add_subcommand("test", "CSR test of X against the triangulation of Y");
  std::string kind_text = "and";
  bool allow_boundary = false;
  test->add_option("--x", x_path, "sample CSV")->required();
  test->add_option("--y", y_path, "anchor CSV")->required();
  test->add_option("--r", r_text, "expansion parameter")->capture_default_str();
  test->add_option("--kind", kind_text, "and|or")->capture_default_str();
  test->add_flag("--drop-outside", drop_outside, "ignore sample points outside the hull");
  test->add_flag("--allow-boundary-r", allow_boundary, "permit r = inf when the weights give a normal limit");
  test->add_option("--out,-o", out_path, "output file (default stdout)");

  // region
  auto* region = app.add_subcommand("region", "proximity region N(x) as a polygon (JSON)");
  std::string tri_text, point_text;
  region->add_option("--tri", tri_text, "x1,y1,x2,y2,x3,y3 (default T_e)");
  region->add_option("--r", r_text, "expansion parameter")->capture_default_str();
  region->add_option("--x", point_text, "point \"x,y\"")->required();
  region->add_option("--out,-o", out_path, "output file (default stdout)");

  // delaunay
  auto* tri_cmd = app.add_subcommand("delaunay", "Delaunay triangulation of anchor points (JSON)");
  tri_cmd->add_option("--y", y_path, "anchor CSV")->required();
  tri_cmd->add_option("--out,-o", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (!config_path.empty()) apply_config(config_path, app, *sub);
    predicates::set_exact(exact);

    if (sub == curves) {
      std::vector<ExpansionParameter> grid;
      if (!r_list.empty()) {
        for (const auto& s : r_list) grid.push_back(ExpansionParameter::parse(s));
      } else {
        if (!(from >= 1.0) || !(to >= from)) throw Error(ErrorKind::InvalidArgument, "grid needs 1 <= from <= to");
        for (std::size_t i = 0; i < points; ++i)
          grid.emplace_back(points == 1 ? from : from + (to - from) * static_cast<double>(i) / static_cast<double>(points - 1));
      }
      std::ostringstream os;
      io::write_curves_csv(os, grid);
      emit(out_path, os.str());
      return 0;
    }

    const ExpansionParameter r = ExpansionParameter::parse(r_text);

    if (sub == simulate) {
      SimConfig cfg;
      cfg.r = r;
      cfg.n = n;
      cfg.replicates = reps;
      cfg.threads = threads;
      cfg.histogram_bins = bins;
      if (!seed_text.empty())
        cfg.seed = parse_seed(seed_text, "--seed");
      else if (const char* env = std::getenv("PCD_SEED"))
        cfg.seed = parse_seed(env, "PCD_SEED");
      if (!kinds.empty()) {
        cfg.statistics.clear();
        for (const auto& k : kinds) cfg.statistics.push_back(parse_statistic(k));
      }
      if (geometry != "te") cfg.anchors = io::read_points_csv(geometry);

      const std::vector<ReplicateStats> stats = run_replicates(cfg);
      const Triangulation geo = simulation_geometry(cfg);
      Json j;
      j["config"] = {{"n", cfg.n}, {"r", r.str()}, {"reps", cfg.replicates}, {"seed", cfg.seed},
                     {"geometry", geometry}, {"triangles", geo.size()}};
      j["statistics"] = Json::array();
      for (const auto& s : stats) {
        Json sj = io::to_json(s, values);
        if (s.statistic != Statistic::Arc) {
          const EdgeKind kind = s.statistic == Statistic::And ? EdgeKind::And : EdgeKind::Or;
          const MultiTriangleParams p = multi_triangle_params_I(geo.weights(), r, kind);
          sj["closed_form"] = {{"mean", p.mean},
                               {"variance", cfg.n >= 2 && geo.size() == 1 ? finite_sample_variance(cfg.n, r, kind)
                                                                          : p.scaled_variance() / static_cast<double>(cfg.n)}};
        }
        j["statistics"].push_back(sj);
        if (!hist_dir.empty()) {
          std::ostringstream os;
          io::write_histogram_csv(os, s.histogram);
          emit(hist_dir + "/hist_" + to_string(s.statistic) + ".csv", os.str());
        }
      }
      if (!dump_path.empty()) {
        std::ostringstream os;
        io::write_points_csv(os, replicate_sample(geo, cfg, 0));
        emit(dump_path, os.str());
      }
      emit_json(out_path, j);
      return 0;
    }

    if (sub == analyze) {
      const Triangulation geo =
          y_path.empty() ? single_triangle(Triangle2d::equilateral()) : delaunay(io::read_points_csv(y_path));
      std::size_t excluded = 0;
      const std::vector<Point2d> x = filtered(geo, io::read_points_csv(x_path), drop_outside, excluded);
      const Pcd pcd = build_pcd(geo, x, r);
      Json j = io::density_json(pcd.digraph, r);
      j["excluded"] = excluded;
      j["triangles"] = geo.size();
      j["multi"] = {{"and", io::to_json(multi_density(pcd, EdgeKind::And))},
                    {"or", io::to_json(multi_density(pcd, EdgeKind::Or))}};
      if (!adjacency_path.empty()) emit_json(adjacency_path, io::adjacency_json(pcd.digraph));
      emit_json(out_path, j);
      return 0;
    }

    if (sub == test) {
      CsrOptions opt;
      opt.drop_outside = drop_outside;
      opt.allow_boundary_r = allow_boundary;
      const CsrTestResult res =
          csr_test(io::read_points_csv(x_path), io::read_points_csv(y_path), r, parse_edge_kind(kind_text), opt);
      emit_json(out_path, io::to_json(res));
      return 0;
    }

    if (sub == region) {
      const Triangle2d tri = tri_text.empty() ? Triangle2d::equilateral() : parse_triangle(tri_text);
      const Point2d x = parse_point(point_text);
      Json j;
      j["vertex_region"] = vertex_region(tri, x) + 1;
      j["r"] = r.str();
      ConvexPolygon<double> poly;
      if (r.is_infinite()) {
        if (tri.vertex_index(x) >= 0) throw Error(ErrorKind::DegeneratePoint, "x is a triangle vertex");
        poly.vertices = {tri[0], tri[1], tri[2]};
      } else {
        poly = proximity_polygon(tri, r.value(), x);
      }
      j["polygon"] = Json::array();
      for (const Point2d& p : poly.vertices) j["polygon"].push_back({p.x(), p.y()});
      j["area"] = poly.area();
      j["triangle_area"] = tri.area();
      emit_json(out_path, j);
      return 0;
    }

    if (sub == tri_cmd) {
      emit_json(out_path, io::to_json(delaunay(io::read_points_csv(y_path))));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "pcd: " << e.what() << "\n";
    return e.kind() == ErrorKind::DegenerateLimit ? kDegenerateLimit : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "pcd: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
