#include "pepcd/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "pepcd/asymptotics.hpp"

namespace pepcd::io {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_number(const std::string& field, double& out) {
  const std::string t = trim(field);
  if (t.empty()) return false;
  const char* first = t.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), out);
  return ec == std::errc() && ptr == t.data() + t.size();
}

// JSON has no inf/nan; non-finite values become null.
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

std::vector<Point2d> parse_points_csv(std::istream& in, const std::string& source) {
  std::vector<Point2d> pts;
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (first && (t == "x,y" || t == "\"x\",\"y\"")) {
      first = false;
      continue;
    }
    first = false;
    const auto comma = t.find(',');
    double x = 0.0, y = 0.0;
    if (comma == std::string::npos || !parse_number(t.substr(0, comma), x) || !parse_number(t.substr(comma + 1), y))
      throw Error(ErrorKind::Io, source + ":" + std::to_string(lineno) + ": expected \"x,y\", got \"" + t + "\"");
    if (!std::isfinite(x) || !std::isfinite(y))
      throw Error(ErrorKind::Io, source + ":" + std::to_string(lineno) + ": non-finite coordinate", pts.size());
    pts.emplace_back(x, y);
  }
  return pts;
}

std::vector<Point2d> read_points_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return parse_points_csv(in, path.string());
}

void write_points_csv(std::ostream& out, const std::vector<Point2d>& points) {
  out << "x,y\n";
  for (const Point2d& p : points) out << format_double(p.x()) << ',' << format_double(p.y()) << '\n';
}

Json to_json(const Triangulation& t) {
  Json j;
  j["sites"] = Json::array();
  for (const Point2d& p : t.sites) j["sites"].push_back({p.x(), p.y()});
  j["triangles"] = t.triangles;
  j["hull"] = t.hull;
  return j;
}

Triangulation triangulation_from_json(const Json& j) {
  try {
    std::vector<Point2d> sites;
    for (const auto& p : j.at("sites")) sites.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    Triangulation t;
    t.sites = sites;
    t.triangles = j.at("triangles").get<std::vector<std::array<int, 3>>>();
    for (const auto& tri : t.triangles)
      for (int v : tri)
        if (v < 0 || static_cast<std::size_t>(v) >= sites.size())
          throw Error(ErrorKind::Io, "triangle refers to a missing site");
    t.hull = j.contains("hull") ? j.at("hull").get<std::vector<int>>() : convex_hull(sites);
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Io, std::string("malformed triangulation JSON: ") + e.what());
  }
}

Json adjacency_json(const Digraph& d) {
  Json arcs = Json::array();
  for (Eigen::Index i = 0; i < d.arcs.rows(); ++i)
    for (Eigen::Index j = 0; j < d.arcs.cols(); ++j)
      if (d.arcs(i, j)) arcs.push_back({i, j});
  return {{"n", d.size()}, {"arcs", arcs}};
}

Json edge_list_json(const EdgeSet& e) {
  Json edges = Json::array();
  for (Eigen::Index i = 0; i < e.edges.rows(); ++i)
    for (Eigen::Index j = i + 1; j < e.edges.cols(); ++j)
      if (e.edges(i, j)) edges.push_back({i, j});
  return {{"n", e.size()}, {"kind", to_string(e.kind)}, {"edges", edges}};
}

Json density_json(const Digraph& d, const ExpansionParameter& r) {
  return {{"rho_a", arc_density(d)},
          {"rho_and", density(d, Statistic::And)},
          {"rho_or", density(d, Statistic::Or)},
          {"n", d.size()},
          {"r", r.str()}};
}

Json to_json(const MultiDensityReport& rep) {
  Json dens = Json::array();
  for (const auto& d : rep.densities) dens.push_back(d ? Json(*d) : Json(nullptr));
  return {{"kind", to_string(rep.kind)},
          {"n", rep.n},
          {"counts", rep.counts},
          {"edge_counts", rep.edge_counts},
          {"densities", dens},
          {"weights", rep.weights},
          {"edges", rep.edges},
          {"within_pairs", rep.within_pairs},
          {"rho_I", rep.rho_I},
          {"rho_II", rep.rho_II ? Json(*rep.rho_II) : Json(nullptr)},
          {"xi", rep.xi},
          {"xi_hat", rep.xi_hat}};
}

Json to_json(const CsrTestResult& res) {
  return {{"kind", to_string(res.kind)},
          {"r", res.r.str()},
          {"n", res.n},
          {"m", res.m},
          {"triangles", res.triangles},
          {"excluded", res.excluded},
          {"observed", number(res.observed)},
          {"null_mean", number(res.null_mean)},
          {"null_variance", number(res.null_variance)},
          {"z", number(res.z)},
          {"p_lower", number(res.p_lower)},
          {"p_upper", number(res.p_upper)},
          {"p_two_sided", number(res.p_two_sided)}};
}

Json to_json(const MomentReport& m) {
  return {{"count", m.count},
          {"mean", number(m.mean)},
          {"variance", number(m.variance)},
          {"skewness", number(m.skewness)},
          {"excess_kurtosis", number(m.excess_kurtosis)},
          {"ks_distance", number(m.ks_distance)},
          {"degenerate", m.degenerate}};
}

Json to_json(const ReplicateStats& s, bool include_values) {
  Json j = {{"statistic", to_string(s.statistic)}, {"moments", to_json(s.moments)}};
  j["histogram"] = {{"edges", s.histogram.edges}, {"counts", s.histogram.counts}};
  if (include_values) j["values"] = s.values;
  return j;
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  out << "bin_left,bin_right,count\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    out << format_double(h.edges[i]) << ',' << format_double(h.edges[i + 1]) << ',' << h.counts[i] << '\n';
}

void write_curves_csv(std::ostream& out, const std::vector<ExpansionParameter>& grid) {
  out << "r,p_and,p_or,var_and,var_or,nu_and,nu_or\n";
  for (const ExpansionParameter& r : grid) {
    out << r.str() << ',' << format_double(mean_and(r)) << ',' << format_double(mean_or(r)) << ','
        << format_double(var_kernel_and(r)) << ',' << format_double(var_kernel_or(r)) << ','
        << format_double(cov_kernel_and(r)) << ',' << format_double(cov_kernel_or(r)) << '\n';
  }
}

}  // namespace pepcd::io
