#pragma once

#include <string>
#include <string_view>

namespace pepcd {

// Graph derived from a digraph: AND keeps symmetric arcs only (reflexivity
// graph), OR keeps any arc (underlying graph). Simple marks graphs not built
// from a digraph.
enum class EdgeKind { And, Or, Simple };

// Density statistic of a digraph: arcs, AND edges or OR edges.
enum class Statistic { Arc, And, Or };

const char* to_string(EdgeKind kind);
const char* to_string(Statistic stat);

// "and" / "or"; throws InvalidArgument otherwise.
EdgeKind parse_edge_kind(std::string_view text);
// "arc" / "and" / "or"
Statistic parse_statistic(std::string_view text);

}  // namespace pepcd
