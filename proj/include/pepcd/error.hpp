#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace pepcd {

enum class ErrorKind {
  DegenerateInput,
  OutsideDomain,
  DegeneratePoint,
  TooFewVertices,
  DomainError,
  DegenerateLimit,
  InvalidArgument,
  Io,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind and, where it applies,
// the index of the offending input point.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> index = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace pepcd
