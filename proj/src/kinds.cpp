#include "pepcd/kinds.hpp"

#include "pepcd/error.hpp"

namespace pepcd {

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::And: return "and";
    case EdgeKind::Or: return "or";
    case EdgeKind::Simple: return "simple";
  }
  return "?";
}

const char* to_string(Statistic stat) {
  switch (stat) {
    case Statistic::Arc: return "arc";
    case Statistic::And: return "and";
    case Statistic::Or: return "or";
  }
  return "?";
}

EdgeKind parse_edge_kind(std::string_view text) {
  if (text == "and") return EdgeKind::And;
  if (text == "or") return EdgeKind::Or;
  throw Error(ErrorKind::InvalidArgument, "unknown edge kind '" + std::string(text) + "' (expected and|or)");
}

Statistic parse_statistic(std::string_view text) {
  if (text == "arc") return Statistic::Arc;
  if (text == "and") return Statistic::And;
  if (text == "or") return Statistic::Or;
  throw Error(ErrorKind::InvalidArgument, "unknown statistic '" + std::string(text) + "' (expected arc|and|or)");
}

}  // namespace pepcd
