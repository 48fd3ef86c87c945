#include "treedegree/cli/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "treedegree/cli/verify.hpp"
#include "treedegree/composition.hpp"
#include "treedegree/exact_math.hpp"
#include "treedegree/guards.hpp"
#include "treedegree/kary_tree.hpp"
#include "treedegree/plane_tree.hpp"

namespace treedegree::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct Options {
  std::optional<int> edges;
  std::optional<int> arity;
  std::optional<int> outdegree;
  int max_edges = 8;
  std::string format = "text";
  std::optional<std::string> word;
  std::optional<std::string> tree;
  std::optional<std::size_t> mark;
  std::optional<std::string> x;
  std::optional<std::string> y;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int need(const std::optional<int>& value, const char* flag) {
  if (!value) {
    throw UsageError(std::string("missing required flag ") + flag);
  }
  return *value;
}

const std::string& need(const std::optional<std::string>& value, const char* flag) {
  if (!value) {
    throw UsageError(std::string("missing required flag ") + flag);
  }
  return *value;
}

void need_at_least(int value, int lower, const char* flag) {
  if (value < lower) {
    throw UsageError(std::string(flag) + " must be >= " + std::to_string(lower));
  }
}

Json document(const std::string& command) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  return doc;
}

std::string dec(std::int64_t value) { return std::to_string(value); }

void emit(std::ostream& out, const Json& doc) { out << doc.dump() << '\n'; }

std::vector<int> parse_index_list(std::string_view text, const char* flag) {
  std::vector<int> values;
  std::size_t pos = 0;
  auto separator = [](char ch) {
    return ch == ',' || ch == '{' || ch == '}' || ch == '[' || ch == ']' ||
           std::isspace(static_cast<unsigned char>(ch));
  };
  while (pos < text.size()) {
    if (separator(text[pos])) {
      ++pos;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos) {
      throw UsageError(std::string(flag) + ": expected a list of integers, got '" +
                       std::string(text) + "'");
    }
    values.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  std::sort(values.begin(), values.end());
  return values;
}

MarkedPlaneTree marked_plane_from(const Options& o) {
  const std::string& text = need(o.tree, "--tree");
  if (o.mark) {
    if (text.find('@') != std::string::npos) {
      throw UsageError("give the mark either as <tree>@<mark> or with --mark, not both");
    }
    MarkedPlaneTree marked{PlaneTree::parse(text), *o.mark};
    // Round-trips through the text form so the mark is range-checked once.
    return MarkedPlaneTree::parse(marked.to_string());
  }
  return MarkedPlaneTree::parse(text);
}

MarkedKaryTree marked_kary_from(const Options& o) {
  const std::string& text = need(o.tree, "--tree");
  if (o.mark) {
    if (text.find('@') != std::string::npos) {
      throw UsageError("give the mark either as <tree>@<mark> or with --mark, not both");
    }
    return MarkedKaryTree::parse(text + "@" + std::to_string(*o.mark));
  }
  return MarkedKaryTree::parse(text);
}

// ---- count ----------------------------------------------------------------

int count_plane(const Options& o, std::ostream& out) {
  const int n = need(o.edges, "--edges");
  const int i = need(o.outdegree, "--outdegree");
  need_at_least(n, 1, "--edges");
  need_at_least(i, 0, "--outdegree");
  const BigCount count = count_plane_outdegree(n, i);
  if (o.format == "json") {
    Json doc = document("count plane");
    doc["n"] = dec(n);
    doc["i"] = dec(i);
    doc["count"] = count.str();
    emit(out, doc);
  } else {
    out << count << '\n';
  }
  return kSuccess;
}

int count_kary(const Options& o, std::ostream& out) {
  const int k = need(o.arity, "--arity");
  const int n = need(o.edges, "--edges");
  const int i = need(o.outdegree, "--outdegree");
  need_at_least(k, 1, "--arity");
  need_at_least(n, 1, "--edges");
  need_at_least(i, 0, "--outdegree");
  const BigCount count = count_kary_outdegree(n, k, i);
  if (o.format == "json") {
    Json doc = document("count kary");
    doc["n"] = dec(n);
    doc["k"] = dec(k);
    doc["i"] = dec(i);
    doc["count"] = count.str();
    emit(out, doc);
  } else {
    out << count << '\n';
  }
  return kSuccess;
}

// ---- enumerate ------------------------------------------------------------

int enumerate_plane(const Options& o, std::ostream& out) {
  const int n = need(o.edges, "--edges");
  check_plane_guard(n, default_guards());
  if (o.format == "json") {
    Json trees = Json::array();
    for_each_plane_tree(n, [&](const PlaneTree& tree) { trees.push_back(tree.to_string()); });
    Json doc = document("enumerate plane");
    doc["n"] = dec(n);
    doc["count"] = std::to_string(trees.size());
    doc["trees"] = std::move(trees);
    emit(out, doc);
  } else {
    for_each_plane_tree(n, [&](const PlaneTree& tree) { out << tree.to_string() << '\n'; });
  }
  return kSuccess;
}

int enumerate_kary(const Options& o, std::ostream& out) {
  const int k = need(o.arity, "--arity");
  const int n = need(o.edges, "--edges");
  check_kary_guard(k, n, default_guards());
  if (o.format == "json") {
    Json trees = Json::array();
    for_each_kary_tree(k, n, [&](const KaryTree& tree) { trees.push_back(tree.to_string()); });
    Json doc = document("enumerate kary");
    doc["n"] = dec(n);
    doc["k"] = dec(k);
    doc["count"] = std::to_string(trees.size());
    doc["trees"] = std::move(trees);
    emit(out, doc);
  } else {
    for_each_kary_tree(k, n, [&](const KaryTree& tree) { out << tree.to_string() << '\n'; });
  }
  return kSuccess;
}

// ---- encode ---------------------------------------------------------------

int encode_plane(const Options& o, std::ostream& out) {
  const PlaneTree tree = PlaneTree::parse(need(o.tree, "--tree"));
  const Composition word = preorder_outdegrees(tree);
  if (o.format == "json") {
    Json doc = document("encode plane");
    doc["tree"] = tree.to_string();
    doc["word"] = word.to_string();
    emit(out, doc);
  } else {
    out << word.to_string() << '\n';
  }
  return kSuccess;
}

int encode_plane_pair(const Options& o, std::ostream& out) {
  const MarkedPlaneTree marked = marked_plane_from(o);
  const Composition word = bar_delta_encode(marked);
  if (o.format == "json") {
    Json doc = document("encode plane-pair");
    doc["pair"] = marked.to_string();
    doc["n"] = dec(static_cast<std::int64_t>(marked.tree.edge_count()));
    doc["i"] = dec(outdegree_at(marked.tree, marked.mark));
    doc["word"] = word.to_string();
    emit(out, doc);
  } else {
    out << word.to_string() << '\n';
  }
  return kSuccess;
}

int encode_kary_pair(const Options& o, std::ostream& out) {
  const MarkedKaryTree marked = marked_kary_from(o);
  const Composition word = kary_pair_to_composition(marked);
  if (o.format == "json") {
    Json doc = document("encode kary-pair");
    doc["pair"] = marked.to_string();
    doc["n"] = dec(static_cast<std::int64_t>(marked.tree.edge_count()));
    doc["k"] = dec(marked.tree.arity());
    doc["i"] = dec(marked.tree.outdegree(marked.mark - 1));
    doc["word"] = word.to_string();
    emit(out, doc);
  } else {
    out << word.to_string() << '\n';
  }
  return kSuccess;
}

int encode_subsets(const Options& o, std::ostream& out) {
  const int k = need(o.arity, "--arity");
  const int n = need(o.edges, "--edges");
  const Composition word = Composition::parse(need(o.word, "--word"));
  const SubsetPair pair = phi(word, k, n);
  if (o.format == "json") {
    Json doc = document("encode subsets");
    doc["word"] = word.to_string();
    doc["pair"] = Json::parse(pair.to_json());
    emit(out, doc);
  } else {
    out << pair.to_json() << '\n';
  }
  return kSuccess;
}

// ---- decode ---------------------------------------------------------------

int decode_plane_pair_impl(const Composition& word, int i, const std::string& command,
                           const Options& o, std::ostream& out) {
  need_at_least(i, 0, "--outdegree");
  const MarkedPlaneTree marked = bar_delta_decode(word, i);
  if (o.format == "json") {
    Json doc = document(command);
    doc["word"] = word.to_string();
    doc["i"] = dec(i);
    doc["pair"] = marked.to_string();
    emit(out, doc);
  } else {
    out << marked.to_string() << '\n';
  }
  return kSuccess;
}

int decode_plane(const Options& o, std::ostream& out) {
  const Composition word = Composition::parse(need(o.word, "--word"));
  if (o.outdegree) {
    return decode_plane_pair_impl(word, *o.outdegree, "decode plane", o, out);
  }
  const PlaneTree tree = delta_decode(word);
  if (o.format == "json") {
    Json doc = document("decode plane");
    doc["word"] = word.to_string();
    doc["tree"] = tree.to_string();
    emit(out, doc);
  } else {
    out << tree.to_string() << '\n';
  }
  return kSuccess;
}

int decode_plane_pair(const Options& o, std::ostream& out) {
  const Composition word = Composition::parse(need(o.word, "--word"));
  return decode_plane_pair_impl(word, need(o.outdegree, "--outdegree"), "decode plane-pair", o,
                                out);
}

int decode_kary_pair(const Options& o, std::ostream& out) {
  const int k = need(o.arity, "--arity");
  const int n = need(o.edges, "--edges");
  const Composition word = Composition::parse(need(o.word, "--word"));
  const int i = o.outdegree ? *o.outdegree : check_kary_composition(word, k, n);
  const MarkedKaryTree marked = composition_to_kary_pair(word, k, n, i);
  if (o.format == "json") {
    Json doc = document("decode kary-pair");
    doc["word"] = word.to_string();
    doc["n"] = dec(n);
    doc["k"] = dec(k);
    doc["i"] = dec(i);
    doc["pair"] = marked.to_string();
    emit(out, doc);
  } else {
    out << marked.to_string() << '\n';
  }
  return kSuccess;
}

int decode_subsets(const Options& o, std::ostream& out) {
  SubsetPair pair;
  pair.k = need(o.arity, "--arity");
  pair.n = need(o.edges, "--edges");
  pair.X = parse_index_list(o.x.value_or(""), "--X");
  pair.Y = parse_index_list(o.y.value_or(""), "--Y");
  const Composition word = phi_inverse(pair);
  if (o.format == "json") {
    Json doc = document("decode subsets");
    doc["pair"] = Json::parse(pair.to_json());
    doc["word"] = word.to_string();
    emit(out, doc);
  } else {
    out << word.to_string() << '\n';
  }
  return kSuccess;
}

// ---- table ----------------------------------------------------------------

int table(const Options& o, std::ostream& out) {
  const int max_n = o.max_edges;
  need_at_least(max_n, 1, "--max-edges");
  if (o.arity) {
    need_at_least(*o.arity, 1, "--arity");
  }
  const bool kary = o.arity.has_value();
  const int k = o.arity.value_or(0);
  const int max_i = kary ? k : max_n;

  auto value = [&](int n, int i) {
    return kary ? count_kary_outdegree(n, k, i) : count_plane_outdegree(n, i);
  };

  if (o.format == "json") {
    Json doc = document("table");
    doc["family"] = kary ? "kary" : "plane";
    Json cells = Json::array();
    for (int n = 1; n <= max_n; ++n) {
      for (int i = 0; i <= max_i; ++i) {
        Json c;
        c["n"] = dec(n);
        if (kary) {
          c["k"] = dec(k);
        }
        c["i"] = dec(i);
        c["count"] = value(n, i).str();
        cells.push_back(std::move(c));
      }
    }
    doc["cells"] = std::move(cells);
    emit(out, doc);
    return kSuccess;
  }

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"n"};
  for (int i = 0; i <= max_i; ++i) {
    header.push_back("i=" + std::to_string(i));
  }
  rows.push_back(header);
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (int i = 0; i <= max_i; ++i) {
      row.push_back(value(n, i).str());
    }
    rows.push_back(std::move(row));
  }

  if (o.format == "csv") {
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c == 0 ? "" : ",") << row[c];
      }
      out << '\n';
    }
    return kSuccess;
  }

  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c == 0 ? "" : "  ") << std::setw(static_cast<int>(widths[c])) << row[c];
    }
    out << '\n';
  }
  return kSuccess;
}

// ---- verify ---------------------------------------------------------------

void check_verify_guards(Suite suite, const VerifyBounds& bounds) {
  const auto& guards = default_guards();
  const bool plane = suite == Suite::kAll || suite == Suite::kTheorem1 ||
                     suite == Suite::kFine || suite == Suite::kBijections;
  if (plane) {
    check_plane_guard(bounds.max_edges, guards);
  }
  if (suite == Suite::kAll || suite == Suite::kTheorem2) {
    check_kary_guard(bounds.max_arity, bounds.max_edges, guards);
  }
}

int verify(Suite suite, const Options& o, std::ostream& out) {
  VerifyBounds bounds{o.max_edges, o.arity.value_or(3)};
  need_at_least(bounds.max_edges, 1, "--max-edges");
  need_at_least(bounds.max_arity, 1, "--arity");
  check_verify_guards(suite, bounds);

  const VerifyReport report = run_suite(suite, bounds);
  const std::string name(suite_name(suite));
  if (o.format == "json") {
    Json doc = document("verify " + name);
    doc["max_edges"] = dec(bounds.max_edges);
    doc["max_arity"] = dec(bounds.max_arity);
    doc["passed"] = report.passed();
    Json checks = Json::array();
    for (const auto& check : report.checks) {
      Json c;
      c["name"] = check.name;
      c["range"] = check.range;
      c["cells"] = std::to_string(check.cells);
      c["passed"] = check.passed;
      if (!check.passed) {
        c["counterexample"] = check.counterexample;
      }
      checks.push_back(std::move(c));
    }
    doc["checks"] = std::move(checks);
    emit(out, doc);
  } else {
    out << "verify " << name << ": max_edges=" << bounds.max_edges
        << " max_arity=" << bounds.max_arity << '\n';
    for (const auto& check : report.checks) {
      out << (check.passed ? "PASS  " : "FAIL  ") << check.name << "  [" << check.range << "]  "
          << check.cells << " cells\n";
      if (!check.passed) {
        out << "      counterexample: " << check.counterexample << '\n';
      }
    }
    out << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  }
  return report.passed() ? kSuccess : kMismatch;
}

// ---- wiring ---------------------------------------------------------------

void add_format(CLI::App* sub, Options& o, bool allow_csv = false) {
  std::vector<std::string> formats{"text", "json"};
  if (allow_csv) {
    formats.emplace_back("csv");
  }
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
}

void add_edges(CLI::App* sub, Options& o) {
  sub->add_option("-n,--edges", o.edges, "Number of edges n");
}
void add_arity(CLI::App* sub, Options& o) {
  sub->add_option("-k,--arity", o.arity, "Arity k");
}
void add_outdegree(CLI::App* sub, Options& o) {
  sub->add_option("-i,--outdegree", o.outdegree, "Outdegree i");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts, enumerates and verifies vertices of given outdegree in plane and k-ary trees",
               "treedegree"};
  app.require_subcommand(1);
  Options o;

  using Handler = int (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> leaves;

  auto* count = app.add_subcommand("count", "Closed-form vertex counts");
  count->require_subcommand(1);
  {
    auto* sub = count->add_subcommand("plane", "Outdegree-i vertices over all n-edge plane trees");
    add_edges(sub, o);
    add_outdegree(sub, o);
    add_format(sub, o);
    leaves.emplace_back(sub, count_plane);
  }
  {
    auto* sub = count->add_subcommand("kary", "Outdegree-i vertices over all n-edge k-ary trees");
    add_arity(sub, o);
    add_edges(sub, o);
    add_outdegree(sub, o);
    add_format(sub, o);
    leaves.emplace_back(sub, count_kary);
  }

  auto* enumerate = app.add_subcommand("enumerate", "List every tree of a given size");
  enumerate->require_subcommand(1);
  {
    auto* sub = enumerate->add_subcommand("plane", "Plane trees with n edges");
    add_edges(sub, o);
    add_format(sub, o);
    leaves.emplace_back(sub, enumerate_plane);
  }
  {
    auto* sub = enumerate->add_subcommand("kary", "k-ary trees with n edges");
    add_arity(sub, o);
    add_edges(sub, o);
    add_format(sub, o);
    leaves.emplace_back(sub, enumerate_kary);
  }

  auto* encode = app.add_subcommand("encode", "Trees and marked trees to compositions");
  encode->require_subcommand(1);
  {
    auto* sub = encode->add_subcommand("plane", "Plane tree to its preorder outdegree word");
    sub->add_option("--tree", o.tree, "Plane tree (balanced parentheses)");
    add_format(sub, o);
    leaves.emplace_back(sub, encode_plane);
  }
  {
    auto* sub = encode->add_subcommand("plane-pair", "Marked plane tree to an (n-i)-into-n composition");
    sub->add_option("--tree", o.tree, "Marked plane tree <tree>@<mark>, or a tree with --mark");
    sub->add_option("--mark", o.mark, "1-based preorder index of the marked vertex");
    add_format(sub, o);
    leaves.emplace_back(sub, encode_plane_pair);
  }
  {
    auto* sub = encode->add_subcommand("kary-pair", "Marked k-ary tree to its composition");
    sub->add_option("--tree", o.tree, "Marked k-ary tree <tree>@<mark>, or a tree with --mark");
    sub->add_option("--mark", o.mark, "1-based preorder index of the marked vertex");
    add_format(sub, o);
    leaves.emplace_back(sub, encode_kary_pair);
  }
  {
    auto* sub = encode->add_subcommand("subsets", "k-ary composition to its subset pair (X, Y)");
    sub->add_option("--word", o.word, "Composition, e.g. (2,2,0,0,0,0)");
    add_arity(sub, o);
    add_edges(sub, o);
    add_format(sub, o);
    leaves.emplace_back(sub, encode_subsets);
  }

  auto* decode = app.add_subcommand("decode", "Compositions back to trees and marked trees");
  decode->require_subcommand(1);
  {
    auto* sub = decode->add_subcommand(
        "plane", "Unit composition to a plane tree, or with --outdegree to a marked tree");
    sub->add_option("--word", o.word, "Composition");
    add_outdegree(sub, o);
    add_format(sub, o);
    leaves.emplace_back(sub, decode_plane);
  }
  {
    auto* sub = decode->add_subcommand("plane-pair", "Composition to a marked plane tree");
    sub->add_option("--word", o.word, "Composition");
    add_outdegree(sub, o);
    add_format(sub, o);
    leaves.emplace_back(sub, decode_plane_pair);
  }
  {
    auto* sub = decode->add_subcommand("kary-pair", "Composition to a marked k-ary tree");
    sub->add_option("--word", o.word, "Composition");
    add_arity(sub, o);
    add_edges(sub, o);
    add_outdegree(sub, o);
    add_format(sub, o);
    leaves.emplace_back(sub, decode_kary_pair);
  }
  {
    auto* sub = decode->add_subcommand("subsets", "Subset pair (X, Y) to its k-ary composition");
    sub->add_option("--X", o.x, "Subset of {1..k}, e.g. 1,3");
    sub->add_option("--Y", o.y, "Subset of {1..kn}, e.g. 8,11,12");
    add_arity(sub, o);
    add_edges(sub, o);
    add_format(sub, o);
    leaves.emplace_back(sub, decode_subsets);
  }

  auto* tab = app.add_subcommand("table", "Count matrix over n and i, for plane or k-ary trees");
  tab->add_option("--max-edges", o.max_edges, "Largest n")->capture_default_str();
  add_arity(tab, o);
  add_format(tab, o, /*allow_csv=*/true);
  leaves.emplace_back(tab, table);

  auto* ver = app.add_subcommand("verify", "Check formulas against brute force and each other");
  ver->require_subcommand(1);
  std::vector<std::pair<CLI::App*, Suite>> suites;
  for (Suite suite : {Suite::kTheorem1, Suite::kTheorem2, Suite::kIdentity1, Suite::kFine,
                      Suite::kLagrange, Suite::kBijections, Suite::kAll}) {
    auto* sub = ver->add_subcommand(std::string(suite_name(suite)));
    sub->add_option("--max-edges", o.max_edges, "Largest n swept")->capture_default_str();
    sub->add_option("-k,--arity", o.arity, "Largest k swept (default 3)");
    add_format(sub, o);
    suites.emplace_back(sub, suite);
  }

  std::vector<const char*> argv{"treedegree"};
  for (const auto& arg : args) {
    argv.push_back(arg.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    for (const auto& [sub, handler] : leaves) {
      if (sub->parsed()) {
        return handler(o, out);
      }
    }
    for (const auto& [sub, suite] : suites) {
      if (sub->parsed()) {
        return verify(suite, o, out);
      }
    }
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "error: no command given\n";
  return kUsage;
}

}  // namespace treedegree::cli
