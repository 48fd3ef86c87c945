#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace treedegree::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  /// A verification found a mismatch; the counterexample is printed.
  kMismatch = 1,
  /// Bad flags, malformed input, or a request outside the enumeration guards.
  kUsage = 2,
};

/// Runs one command line. `args` excludes the program name. Output goes to
/// `out`, diagnostics to `err`; identical arguments produce identical bytes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treedegree::cli
