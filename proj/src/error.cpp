#include "pepcd/error.hpp"

namespace pepcd {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::DegeneratePoint: return "DegeneratePoint";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DegenerateLimit: return "DegenerateLimit";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

static std::string decorate(ErrorKind kind, const std::string& what, std::optional<std::size_t> index) {
  std::string msg = std::string(to_string(kind)) + ": " + what;
  if (index) msg += " (point " + std::to_string(*index) + ")";
  return msg;
}

Error::Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> index)
    : std::runtime_error(decorate(kind, what, index)), kind_(kind), index_(index) {}

}  // namespace pepcd
