#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treedegree/bigcount.hpp"
#include "treedegree/guards.hpp"

namespace treedegree::cli {

/// Closed forms under test. Defaults are the library formulas; tests swap in
/// tampered versions to check that mismatches are caught and reported.
struct FormulaTable {
  std::function<BigCount(std::int64_t n, std::int64_t i)> plane_outdegree;
  std::function<BigCount(std::int64_t n, std::int64_t k, std::int64_t i)> kary_outdegree;
  std::function<BigCount(std::int64_t n, std::int64_t i)> plane_degree;
  std::function<BigInt(std::int64_t n)> fine;

  static FormulaTable library();
};

struct CheckResult {
  std::string name;
  std::string range;
  std::size_t cells = 0;
  bool passed = true;
  /// First failing cell in sweep order, with both sides of the comparison.
  std::string counterexample;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
};

enum class Suite { kTheorem1, kTheorem2, kIdentity1, kFine, kLagrange, kBijections, kAll };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct VerifyBounds {
  int max_edges = 8;
  int max_arity = 3;
};

/// Largest k * n swept by the k-ary bijection round-trips.
inline constexpr int kBijectionKaryProduct = 12;

/// Runs one suite. Each check sweeps its cells in increasing (k, n, i) order
/// and stops at the first mismatch.
VerifyReport run_suite(Suite suite, const VerifyBounds& bounds,
                       const FormulaTable& formulas = FormulaTable::library(),
                       const EnumerationGuards& guards = default_guards());

/// Every suite in a fixed order.
VerifyReport verify_all(int max_edges, int max_arity,
                        const FormulaTable& formulas = FormulaTable::library(),
                        const EnumerationGuards& guards = default_guards());

}  // namespace treedegree::cli
