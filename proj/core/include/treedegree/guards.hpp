#pragma once

#include <stdexcept>
#include <string_view>

namespace treedegree {

/// Size limits for exhaustive enumeration.
struct EnumerationGuards {
  /// Largest edge count accepted by plane-tree enumeration.
  int plane_edges = 14;
  /// Largest k * n accepted by k-ary tree enumeration.
  int kary_product = 24;
};

class GuardViolation : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Parses a TREEDEGREE_GUARD value: "<plane>" or "<plane>,<kary>". Throws
/// std::invalid_argument on malformed input.
EnumerationGuards parse_guards(std::string_view text);

/// Defaults, overridden by the TREEDEGREE_GUARD environment variable when it is
/// set. Read once per process.
const EnumerationGuards& default_guards();

}  // namespace treedegree
