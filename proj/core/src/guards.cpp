#include "treedegree/guards.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

namespace treedegree {

namespace {

int parse_limit(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw std::invalid_argument("TREEDEGREE_GUARD: bad limit '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

EnumerationGuards parse_guards(std::string_view text) {
  EnumerationGuards guards;
  const auto comma = text.find(',');
  guards.plane_edges = parse_limit(text.substr(0, comma));
  if (comma != std::string_view::npos) {
    guards.kary_product = parse_limit(text.substr(comma + 1));
  }
  return guards;
}

const EnumerationGuards& default_guards() {
  static const EnumerationGuards guards = [] {
    const char* env = std::getenv("TREEDEGREE_GUARD");
    return env != nullptr && *env != '\0' ? parse_guards(env) : EnumerationGuards{};
  }();
  return guards;
}

}  // namespace treedegree
