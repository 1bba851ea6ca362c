#pragma once

// Text formats: point CSV, triangulation / adjacency / report JSON, and the
// curve and histogram CSV tables. Output never depends on the locale.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pepcd/graphs.hpp"
#include "pepcd/montecarlo.hpp"
#include "pepcd/mtdensity.hpp"
#include "pepcd/spatial.hpp"

namespace pepcd::io {

using Json = nlohmann::ordered_json;

/// 17 significant digits, '.' separator; "inf"/"-inf"/"nan" for non-finite.
std::string format_double(double v);

/// One "x,y" point per line; an optional literal "x,y" header is skipped,
/// blank lines are ignored. Malformed lines raise Io naming the line.
std::vector<Point2d> parse_points_csv(std::istream& in, const std::string& source = "<input>");
std::vector<Point2d> read_points_csv(const std::filesystem::path& path);
void write_points_csv(std::ostream& out, const std::vector<Point2d>& points);

Json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

/// {n, arcs: [[i, j], ...]} with arcs in row-major order.
Json adjacency_json(const Digraph& d);
/// {n, kind, edges: [[i, j], ...]} with i < j.
Json edge_list_json(const EdgeSet& e);

/// {rho_a, rho_and, rho_or, n, r}
Json density_json(const Digraph& d, const ExpansionParameter& r);
Json to_json(const MultiDensityReport& rep);
Json to_json(const CsrTestResult& res);
Json to_json(const MomentReport& m);
Json to_json(const ReplicateStats& s, bool include_values);

/// bin_left,bin_right,count
void write_histogram_csv(std::ostream& out, const Histogram& h);

/// r,p_and,p_or,var_and,var_or,nu_and,nu_or
void write_curves_csv(std::ostream& out, const std::vector<ExpansionParameter>& grid);

}  // namespace pepcd::io
