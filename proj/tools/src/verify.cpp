#include "treedegree/cli/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <utility>

#include "treedegree/composition.hpp"
#include "treedegree/exact_math.hpp"
#include "treedegree/kary_tree.hpp"
#include "treedegree/plane_tree.hpp"
#include "treedegree/series.hpp"

namespace treedegree::cli {

FormulaTable FormulaTable::library() {
  FormulaTable table;
  table.plane_outdegree = [](std::int64_t n, std::int64_t i) { return count_plane_outdegree(n, i); };
  table.kary_outdegree = [](std::int64_t n, std::int64_t k, std::int64_t i) {
    return count_kary_outdegree(n, k, i);
  };
  table.plane_degree = [](std::int64_t n, std::int64_t i) { return count_plane_degree(n, i); };
  table.fine = [](std::int64_t n) { return fine_number(n); };
  return table;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

constexpr std::array<std::pair<std::string_view, Suite>, 7> kSuiteNames{{
    {"theorem1", Suite::kTheorem1},
    {"theorem2", Suite::kTheorem2},
    {"identity1", Suite::kIdentity1},
    {"fine", Suite::kFine},
    {"lagrange", Suite::kLagrange},
    {"bijections", Suite::kBijections},
    {"all", Suite::kAll},
}};

std::string cell(std::initializer_list<std::pair<const char*, std::int64_t>> coords) {
  std::string out;
  for (const auto& [name, value] : coords) {
    if (!out.empty()) {
      out += ' ';
    }
    out += name;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

class Recorder {
 public:
  Recorder(std::string name, std::string range) {
    result_.name = std::move(name);
    result_.range = std::move(range);
  }

  bool equal(const std::string& where, const BigInt& oracle, const BigInt& formula,
             std::string_view oracle_label = "oracle",
             std::string_view formula_label = "formula") {
    ++result_.cells;
    if (oracle == formula) {
      return true;
    }
    return fail(where + ": " + std::string(oracle_label) + "=" + oracle.str() + ", " +
                std::string(formula_label) + "=" + formula.str());
  }

  bool expect(bool condition, const std::string& where, const std::string& detail) {
    ++result_.cells;
    return condition || fail(where + ": " + detail);
  }

  CheckResult take() { return std::move(result_); }

 private:
  bool fail(std::string message) {
    result_.passed = false;
    result_.counterexample = std::move(message);
    return false;
  }

  CheckResult result_;
};

std::vector<std::uint64_t> plane_outdegree_totals(int n, const EnumerationGuards& guards) {
  std::vector<std::uint64_t> totals(static_cast<std::size_t>(n) + 1, 0);
  for_each_plane_tree(
      n,
      [&](const PlaneTree& tree) {
        for (int d : preorder_outdegrees(tree)) {
          ++totals[static_cast<std::size_t>(d)];
        }
      },
      guards);
  return totals;
}

CheckResult check_plane_outdegree(const VerifyBounds& b, const FormulaTable& f,
                                  const EnumerationGuards& g) {
  Recorder rec("theorem1/plane-outdegree",
               "n=1.." + std::to_string(b.max_edges) + ", i=0..n (brute force)");
  for (int n = 1; n <= b.max_edges; ++n) {
    const auto totals = plane_outdegree_totals(n, g);
    for (int i = 0; i <= n; ++i) {
      if (!rec.equal(cell({{"n", n}, {"i", i}}), totals[static_cast<std::size_t>(i)],
                     f.plane_outdegree(n, i), "brute_force", "C(2n-i-1,n-1)")) {
        return rec.take();
      }
    }
  }
  return rec.take();
}

CheckResult check_plane_degree(const VerifyBounds& b, const FormulaTable& f,
                               const EnumerationGuards& g) {
  Recorder rec("theorem1/plane-degree",
               "n=1.." + std::to_string(b.max_edges) + ", i=1..n (brute force)");
  for (int n = 1; n <= b.max_edges; ++n) {
    std::map<int, std::uint64_t> totals;
    for_each_plane_tree(
        n,
        [&](const PlaneTree& tree) {
          for (const auto& [degree, count] : degree_histogram(tree)) {
            totals[degree] += count;
          }
        },
        g);
    for (int i = 1; i <= n; ++i) {
      if (!rec.equal(cell({{"n", n}, {"i", i}}), totals[i], f.plane_degree(n, i), "brute_force",
                     "2*C(2n-i-1,n-1)")) {
        return rec.take();
      }
    }
  }
  return rec.take();
}

CheckResult check_kary_outdegree(const VerifyBounds& b, const FormulaTable& f,
                                 const EnumerationGuards& g) {
  Recorder rec("theorem2/kary-outdegree", "k=1.." + std::to_string(b.max_arity) + ", n=1.." +
                                              std::to_string(b.max_edges) +
                                              ", i=0..k (brute force)");
  for (int k = 1; k <= b.max_arity; ++k) {
    for (int n = 1; n <= b.max_edges; ++n) {
      std::vector<std::uint64_t> totals(static_cast<std::size_t>(k) + 1, 0);
      for_each_kary_tree(
          k, n,
          [&](const KaryTree& tree) {
            for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
              ++totals[static_cast<std::size_t>(tree.outdegree(v))];
            }
          },
          g);
      for (int i = 0; i <= k; ++i) {
        if (!rec.equal(cell({{"k", k}, {"n", n}, {"i", i}}), totals[static_cast<std::size_t>(i)],
                       f.kary_outdegree(n, k, i), "brute_force", "C(k,i)*C(kn,n-i)")) {
          return rec.take();
        }
      }
    }
  }
  return rec.take();
}

CheckResult check_identity1(const VerifyBounds& b, const FormulaTable& f) {
  const int top = std::min<int>(b.max_edges, static_cast<int>(kOutdegreeSequenceLimit));
  Recorder rec("identity1/outdegree-sequences",
               "n=1.." + std::to_string(top) + ", i=0..n (sequence enumeration)");
  for (int n = 1; n <= top; ++n) {
    for (int i = 0; i <= n; ++i) {
      const auto check = verify_outdegree_sequence_identity(n, i);
      if (!rec.equal(cell({{"n", n}, {"i", i}}), check.lhs, f.plane_outdegree(n, i),
                     "sequence_sum", "C(2n-i-1,n-1)")) {
        return rec.take();
      }
    }
  }
  return rec.take();
}

CheckResult check_fine(const VerifyBounds& b, const FormulaTable& f, const EnumerationGuards& g) {
  Recorder rec("fine/odd-outdegree",
               "n=1.." + std::to_string(b.max_edges) + " (brute force, Fine relation)");
  for (int n = 1; n <= b.max_edges; ++n) {
    const auto totals = plane_outdegree_totals(n, g);
    BigCount brute = 0;
    BigCount summed = 0;
    for (int i = 1; i <= n; i += 2) {
      brute += totals[static_cast<std::size_t>(i)];
      summed += f.plane_outdegree(n, i);
    }
    const std::string where = cell({{"n", n}});
    if (!rec.equal(where, brute, summed, "brute_force", "sum_odd_i C(2n-i-1,n-1)")) {
      return rec.take();
    }
    // brute = 2/3 C(2n-1, n) + 1/3 F_{n-1}, compared without division.
    if (!rec.equal(where, 3 * brute - 2 * binomial(2 * n - 1, n), f.fine(n - 1),
                   "3*odd-2*C(2n-1,n)", "F_{n-1}")) {
      return rec.take();
    }
  }
  return rec.take();
}

std::vector<CheckResult> check_lagrange(const VerifyBounds& b, const FormulaTable& f) {
  std::vector<CheckResult> out;
  const auto order = static_cast<std::size_t>(b.max_edges);
  const std::string n_range = "n=0.." + std::to_string(b.max_edges);
  {
    Recorder rec("lagrange/defining-equations",
                 "mod z^" + std::to_string(order + 1) + ", k=1.." + std::to_string(b.max_arity));
    const auto c = catalan_series(order);
    const auto one = TruncatedSeries::one(order);
    bool ok = rec.expect((c - one - (c * c).shifted(1)).is_zero(), "C", "C - 1 - zC^2 != 0") &&
              rec.expect(((one - c.shifted(1)) * c) == one, "C", "(1 - zC) C != 1");
    for (int k = 1; ok && k <= b.max_arity; ++k) {
      const auto bk = kary_series(k, order);
      ok = rec.expect((bk - (one + bk.shifted(1)).pow(static_cast<std::uint64_t>(k))).is_zero(),
                      cell({{"k", k}}), "B_k - (1 + zB_k)^k != 0");
    }
    out.push_back(rec.take());
  }
  {
    Recorder rec("lagrange/catalan-power", n_range + ", l=1.." + std::to_string(b.max_edges));
    for (int n = 0; n <= b.max_edges; ++n) {
      bool ok = true;
      for (int l = 1; ok && l <= std::max(1, b.max_edges); ++l) {
        const auto check = verify_catalan_power_coeff(n, l);
        ok = rec.equal(cell({{"n", n}, {"l", l}}), check.series_value, check.closed_form,
                       "[z^n]C^l", "l/(2n+l)*C(2n+l,n)");
      }
      if (!ok) {
        break;
      }
    }
    out.push_back(rec.take());
  }
  {
    Recorder rec("lagrange/kary-power", "k=1.." + std::to_string(b.max_arity) + ", " + n_range +
                                            ", l=1.." + std::to_string(b.max_edges));
    bool ok = true;
    for (int k = 1; ok && k <= b.max_arity; ++k) {
      for (int n = 0; ok && n <= b.max_edges; ++n) {
        for (int l = 1; ok && l <= std::max(1, b.max_edges); ++l) {
          const auto check = verify_kary_power_coeff(k, n, l);
          ok = rec.equal(cell({{"k", k}, {"n", n}, {"l", l}}), check.series_value,
                         check.closed_form, "[z^n]B_k^l", "l/(n+l)*C(k(n+l),n)");
        }
      }
    }
    out.push_back(rec.take());
  }
  {
    Recorder rec("lagrange/plane-derivative-series",
                 "i=0.." + std::to_string(b.max_edges) + ", n=1.." + std::to_string(b.max_edges));
    bool ok = true;
    for (int i = 0; ok && i <= b.max_edges; ++i) {
      const auto series = plane_derivative_series(i, order);
      for (int n = 1; ok && n <= b.max_edges; ++n) {
        ok = rec.equal(cell({{"n", n}, {"i", i}}), series[static_cast<std::size_t>(n)],
                       f.plane_outdegree(n, i), "series", "C(2n-i-1,n-1)");
      }
    }
    out.push_back(rec.take());
  }
  {
    Recorder rec("lagrange/kary-derivative-series", "k=1.." + std::to_string(b.max_arity) +
                                                        ", i=0..k, n=1.." +
                                                        std::to_string(b.max_edges));
    bool ok = true;
    for (int k = 1; ok && k <= b.max_arity; ++k) {
      for (int i = 0; ok && i <= k; ++i) {
        const auto series = kary_derivative_series(k, i, order);
        for (int n = 1; ok && n <= b.max_edges; ++n) {
          ok = rec.equal(cell({{"k", k}, {"n", n}, {"i", i}}), series[static_cast<std::size_t>(n)],
                         f.kary_outdegree(n, k, i), "series", "C(k,i)*C(kn,n-i)");
        }
      }
    }
    out.push_back(rec.take());
  }
  return out;
}

CheckResult check_delta(const VerifyBounds& b, const EnumerationGuards& g) {
  Recorder rec("bijections/delta", "n=0.." + std::to_string(b.max_edges) + ", every tree");
  for (int n = 0; n <= b.max_edges; ++n) {
    std::size_t seen = 0;
    bool ok = true;
    for_each_plane_tree(
        n,
        [&](const PlaneTree& tree) {
          ++seen;
          if (!ok) {
            return;
          }
          const Composition word = preorder_outdegrees(tree);
          ok = rec.expect(is_unit(word), tree.to_string(), "preorder word " + word.to_string() +
                                                               " is not a unit composition") &&
               rec.expect(delta_decode(word) == tree, tree.to_string(), "delta round trip failed");
        },
        g);
    if (!ok || !rec.equal(cell({{"n", n}}), seen, catalan(n), "enumerated", "catalan(n)")) {
      break;
    }
  }
  return rec.take();
}

CheckResult check_bar_delta(const VerifyBounds& b, const EnumerationGuards& g) {
  Recorder rec("bijections/bar-delta",
               "n=1.." + std::to_string(b.max_edges) + ", every tree and mark; image = A(n-i,n)");
  for (int n = 1; n <= b.max_edges; ++n) {
    std::vector<std::vector<Composition>> images(static_cast<std::size_t>(n) + 1);
    bool ok = true;
    for_each_plane_tree(
        n,
        [&](const PlaneTree& tree) {
          for (std::size_t mark = 1; ok && mark <= tree.vertex_count(); ++mark) {
            const MarkedPlaneTree marked{tree, mark};
            const int i = outdegree_at(tree, mark);
            const Composition word = bar_delta_encode(marked);
            ok = rec.expect(bar_delta_decode(word, i) == marked, marked.to_string(),
                            "bar-delta round trip failed via " + word.to_string());
            images[static_cast<std::size_t>(i)].push_back(word);
          }
        },
        g);
    if (!ok) {
      break;
    }
    for (int i = 0; ok && i <= n; ++i) {
      auto& image = images[static_cast<std::size_t>(i)];
      std::sort(image.begin(), image.end());
      std::vector<Composition> expected;
      for_each_composition(n - i, n, [&](std::span<const int> parts) {
        expected.emplace_back(std::vector<int>(parts.begin(), parts.end()));
      });
      ok = rec.expect(image == expected, cell({{"n", n}, {"i", i}}),
                      "image has " + std::to_string(image.size()) + " words, A(n-i,n) has " +
                          std::to_string(expected.size()) + " (or the sets differ)");
    }
    if (!ok) {
      break;
    }
  }
  return rec.take();
}

CheckResult check_kary_bijections(const VerifyBounds& b, const EnumerationGuards& g) {
  Recorder rec("bijections/kary-phi",
               "k=1.." + std::to_string(b.max_arity) + ", k*n<=" +
                   std::to_string(kBijectionKaryProduct) + ", every tree and mark");
  for (int k = 1; k <= b.max_arity; ++k) {
    for (int n = 0; n <= b.max_edges && k * n <= kBijectionKaryProduct; ++n) {
      std::vector<std::set<std::pair<std::vector<int>, std::vector<int>>>> images(
          static_cast<std::size_t>(k) + 1);
      std::vector<std::size_t> pairs(static_cast<std::size_t>(k) + 1, 0);
      bool ok = true;
      for_each_kary_tree(
          k, n,
          [&](const KaryTree& tree) {
            if (!ok) {
              return;
            }
            const Completion completion = complete(tree);
            ok = rec.expect(uncomplete(completion.tree, k) == tree, tree.to_string(),
                            "uncomplete(complete(T)) != T");
            if (n == 0) {
              return;
            }
            for (std::size_t mark = 1; ok && mark <= tree.vertex_count(); ++mark) {
              const MarkedKaryTree marked{tree, mark};
              const int i = tree.outdegree(mark - 1);
              const Composition word = kary_pair_to_composition(marked);
              const SubsetPair pair = phi(word, k, n);
              ok = rec.expect(composition_to_kary_pair(word, k, n, i) == marked,
                              marked.to_string(), "composition round trip failed") &&
                   rec.expect(phi_inverse(pair) == word, marked.to_string(),
                              "phi_inverse(phi(a)) != a for a=" + word.to_string());
              images[static_cast<std::size_t>(i)].emplace(pair.X, pair.Y);
              ++pairs[static_cast<std::size_t>(i)];
            }
          },
          g);
      if (!ok) {
        return rec.take();
      }
      for (int i = 0; n > 0 && i <= k; ++i) {
        const std::string where = cell({{"k", k}, {"n", n}, {"i", i}});
        const BigCount subsets = binomial(k, i) * binomial(static_cast<std::int64_t>(k) * n, n - i);
        if (!rec.equal(where, pairs[static_cast<std::size_t>(i)],
                       images[static_cast<std::size_t>(i)].size(), "marked_pairs",
                       "distinct_images") ||
            !rec.equal(where, images[static_cast<std::size_t>(i)].size(), subsets,
                       "distinct_images", "C(k,i)*C(kn,n-i)")) {
          return rec.take();
        }
      }
    }
  }
  return rec.take();
}

void append(VerifyReport& report, Suite suite, const VerifyBounds& b, const FormulaTable& f,
            const EnumerationGuards& g) {
  auto& checks = report.checks;
  switch (suite) {
    case Suite::kTheorem1:
      checks.push_back(check_plane_outdegree(b, f, g));
      checks.push_back(check_plane_degree(b, f, g));
      break;
    case Suite::kTheorem2:
      checks.push_back(check_kary_outdegree(b, f, g));
      break;
    case Suite::kIdentity1:
      checks.push_back(check_identity1(b, f));
      break;
    case Suite::kFine:
      checks.push_back(check_fine(b, f, g));
      break;
    case Suite::kLagrange:
      for (auto& check : check_lagrange(b, f)) {
        checks.push_back(std::move(check));
      }
      break;
    case Suite::kBijections:
      checks.push_back(check_delta(b, g));
      checks.push_back(check_bar_delta(b, g));
      checks.push_back(check_kary_bijections(b, g));
      break;
    case Suite::kAll:
      for (Suite s : {Suite::kTheorem1, Suite::kTheorem2, Suite::kIdentity1, Suite::kFine,
                      Suite::kLagrange, Suite::kBijections}) {
        append(report, s, b, f, g);
      }
      break;
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& [text, suite] : kSuiteNames) {
    if (text == name) {
      return suite;
    }
  }
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  for (const auto& [text, s] : kSuiteNames) {
    if (s == suite) {
      return text;
    }
  }
  return "unknown";
}

VerifyReport run_suite(Suite suite, const VerifyBounds& bounds, const FormulaTable& formulas,
                       const EnumerationGuards& guards) {
  if (bounds.max_edges < 1 || bounds.max_arity < 1) {
    throw std::invalid_argument("verify: --max-edges and --arity must be >= 1");
  }
  VerifyReport report;
  append(report, suite, bounds, formulas, guards);
  return report;
}

VerifyReport verify_all(int max_edges, int max_arity, const FormulaTable& formulas,
                        const EnumerationGuards& guards) {
  return run_suite(Suite::kAll, VerifyBounds{max_edges, max_arity}, formulas, guards);
}

}  // namespace treedegree::cli
