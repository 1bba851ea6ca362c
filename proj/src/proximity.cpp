#include "pepcd/proximity.hpp"

#include <charconv>

namespace pepcd {

ExpansionParameter ExpansionParameter::parse(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity") return infinity();
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw Error(ErrorKind::InvalidArgument, "cannot parse expansion parameter '" + text + "'");
  return ExpansionParameter(v);
}

std::string ExpansionParameter::str() const {
  if (is_infinite()) return "inf";
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, value_, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace pepcd
