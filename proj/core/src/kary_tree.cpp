#include "treedegree/kary_tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

#include "json.hpp"

namespace treedegree {

KaryTree::KaryTree(int arity) : arity_(arity) {
  if (arity < 1) {
    throw std::invalid_argument("k-ary tree arity must be >= 1");
  }
  slots_.assign(static_cast<std::size_t>(arity), kEmpty);
}

KaryTree KaryTree::from_occupancy(int arity, std::span<const std::uint8_t> occupancy) {
  if (arity < 1) {
    throw std::invalid_argument("k-ary tree arity must be >= 1");
  }
  const auto k = static_cast<std::size_t>(arity);
  if (occupancy.empty() || occupancy.size() % k != 0) {
    throw std::invalid_argument("occupancy length must be a positive multiple of the arity");
  }
  const std::size_t vertices = occupancy.size() / k;

  KaryTree tree;
  tree.arity_ = arity;
  tree.slots_.assign(occupancy.size(), kEmpty);

  // (vertex, next slot to inspect); descending into a slot numbers the child.
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  std::size_t next = 1;
  while (!stack.empty()) {
    auto& [vertex, slot] = stack.back();
    while (slot < k && occupancy[vertex * k + slot] == 0) {
      ++slot;
    }
    if (slot == k) {
      stack.pop_back();
      continue;
    }
    if (next >= vertices) {
      throw std::invalid_argument("occupancy describes more vertices than it has rows for");
    }
    tree.slots_[vertex * k + slot] = static_cast<std::int32_t>(next);
    ++slot;
    stack.emplace_back(next, 0);
    ++next;
  }
  if (next != vertices) {
    throw std::invalid_argument("occupancy has rows for unreachable vertices");
  }
  return tree;
}

int KaryTree::outdegree(std::size_t vertex) const {
  int count = 0;
  for (int s = 0; s < arity_; ++s) {
    count += child(vertex, s) != kEmpty ? 1 : 0;
  }
  return count;
}

namespace {

// Preorder slot lists; entry -1 marks an empty slot.
struct RawKary {
  std::vector<std::vector<std::int32_t>> slots;
};

class KaryParser {
 public:
  explicit KaryParser(std::string_view text) : text_(text) {}

  RawKary run() {
    skip_space();
    parse_vertex();
    skip_space();
    if (pos_ != text_.size()) {
      fail("trailing characters");
    }
    return std::move(raw_);
  }

 private:
  [[noreturn]] void fail(const char* why) const {
    throw std::invalid_argument("malformed k-ary tree at offset " + std::to_string(pos_) + ": " +
                                why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::int32_t parse_vertex() {
    if (pos_ >= text_.size() || text_[pos_] != '(') {
      fail("expected '('");
    }
    ++pos_;
    const auto index = static_cast<std::int32_t>(raw_.slots.size());
    raw_.slots.emplace_back();
    std::vector<std::int32_t> slots;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        fail("unexpected end of input");
      }
      const char ch = text_[pos_];
      if (ch == ')') {
        ++pos_;
        break;
      }
      if (ch == '.') {
        ++pos_;
        slots.push_back(KaryTree::kEmpty);
      } else if (ch == '(') {
        slots.push_back(parse_vertex());
      } else {
        fail("unexpected character");
      }
    }
    raw_.slots[static_cast<std::size_t>(index)] = std::move(slots);
    return index;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  RawKary raw_;
};

void emit_tokens(const KaryTree& tree, std::size_t vertex, std::string& tokens) {
  tokens += '(';
  for (int s = 0; s < tree.arity(); ++s) {
    const auto c = tree.child(vertex, s);
    if (c == KaryTree::kEmpty) {
      tokens += '.';
    } else {
      emit_tokens(tree, static_cast<std::size_t>(c), tokens);
    }
  }
  tokens += ')';
}

}  // namespace

KaryTree KaryTree::parse(std::string_view text) {
  RawKary raw = KaryParser(text).run();
  const auto arity = static_cast<int>(raw.slots.front().size());
  if (arity < 1) {
    throw std::invalid_argument("malformed k-ary tree: a vertex needs at least one slot");
  }
  std::vector<std::uint8_t> occupancy;
  occupancy.reserve(raw.slots.size() * static_cast<std::size_t>(arity));
  for (const auto& slots : raw.slots) {
    if (static_cast<int>(slots.size()) != arity) {
      throw std::invalid_argument("malformed k-ary tree: vertices have differing slot counts");
    }
    for (auto c : slots) {
      occupancy.push_back(c == kEmpty ? 0 : 1);
    }
  }
  // Parser numbering is preorder, so the flags are already in the layout
  // from_occupancy expects.
  return from_occupancy(arity, occupancy);
}

std::string KaryTree::to_string() const {
  std::string tokens;
  emit_tokens(*this, 0, tokens);
  std::string out;
  out.reserve(tokens.size() * 2);
  for (std::size_t j = 0; j < tokens.size(); ++j) {
    if (j != 0 && !(tokens[j - 1] == '(' && tokens[j] == '(')) {
      out += ' ';
    }
    out += tokens[j];
  }
  return out;
}

namespace {

std::pair<std::string_view, std::size_t> split_kary_mark(std::string_view text) {
  const auto at = text.rfind('@');
  if (at == std::string_view::npos) {
    throw std::invalid_argument("marked tree must have the form <tree>@<mark>");
  }
  auto digits = text.substr(at + 1);
  while (!digits.empty() && std::isspace(static_cast<unsigned char>(digits.front()))) {
    digits.remove_prefix(1);
  }
  std::size_t mark = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), mark);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("marked tree: bad mark '" + std::string(digits) + "'");
  }
  return {text.substr(0, at), mark};
}

void check_kary_mark(const KaryTree& tree, std::size_t mark) {
  if (mark < 1 || mark > tree.vertex_count()) {
    throw std::out_of_range("mark " + std::to_string(mark) + " outside [1, " +
                            std::to_string(tree.vertex_count()) + "]");
  }
}

}  // namespace

MarkedKaryTree MarkedKaryTree::parse(std::string_view text) {
  auto [tree_text, mark] = split_kary_mark(text);
  MarkedKaryTree marked{KaryTree::parse(tree_text), mark};
  check_kary_mark(marked.tree, marked.mark);
  return marked;
}

std::string MarkedKaryTree::to_string() const {
  return tree.to_string() + "@" + std::to_string(mark);
}

std::string SubsetPair::to_json() const {
  nlohmann::ordered_json doc;
  doc["k"] = k;
  doc["n"] = n;
  doc["X"] = X;
  doc["Y"] = Y;
  return doc.dump();
}

SubsetPair SubsetPair::from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    SubsetPair pair;
    pair.k = doc.at("k").get<int>();
    pair.n = doc.at("n").get<int>();
    pair.X = doc.at("X").get<std::vector<int>>();
    pair.Y = doc.at("Y").get<std::vector<int>>();
    return pair;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed subset pair: ") + e.what());
  }
}

namespace {

PlaneTree complete_at(const KaryTree& tree, std::size_t vertex, std::size_t& counter,
                      std::vector<std::size_t>& image) {
  image[vertex] = ++counter;
  PlaneTree node;
  node.children.reserve(static_cast<std::size_t>(tree.arity()));
  for (int s = 0; s < tree.arity(); ++s) {
    const auto c = tree.child(vertex, s);
    if (c == KaryTree::kEmpty) {
      ++counter;
      node.children.emplace_back();
    } else {
      node.children.push_back(complete_at(tree, static_cast<std::size_t>(c), counter, image));
    }
  }
  return node;
}

void collect_occupancy(const PlaneTree& node, std::size_t arity,
                       std::vector<std::uint8_t>& occupancy) {
  if (node.children.size() != arity) {
    throw std::invalid_argument("uncomplete: internal vertex with outdegree " +
                                std::to_string(node.children.size()) + ", expected " +
                                std::to_string(arity));
  }
  for (const auto& child : node.children) {
    occupancy.push_back(child.children.empty() ? 0 : 1);
  }
  for (const auto& child : node.children) {
    if (!child.children.empty()) {
      collect_occupancy(child, arity, occupancy);
    }
  }
}

}  // namespace

Completion complete(const KaryTree& tree) {
  Completion result;
  result.image.assign(tree.vertex_count(), 0);
  std::size_t counter = 0;
  result.tree = complete_at(tree, 0, counter, result.image);
  return result;
}

KaryTree uncomplete(const PlaneTree& tree, int arity) {
  if (arity < 1) {
    throw std::invalid_argument("uncomplete: arity must be >= 1");
  }
  if (tree.children.empty()) {
    throw std::invalid_argument("uncomplete: a single vertex is not a complete k-ary tree");
  }
  std::vector<std::uint8_t> occupancy;
  collect_occupancy(tree, static_cast<std::size_t>(arity), occupancy);
  return KaryTree::from_occupancy(arity, occupancy);
}

int check_kary_composition(const Composition& word, int arity, int edges) {
  if (arity < 1 || edges < 0) {
    throw std::invalid_argument("check_kary_composition: need k >= 1 and n >= 0");
  }
  const auto k = static_cast<std::size_t>(arity);
  const auto n = static_cast<std::size_t>(edges);
  const auto count_k = static_cast<std::size_t>(std::count(word.begin(), word.end(), arity));
  const auto count_0 = static_cast<std::size_t>(std::count(word.begin(), word.end(), 0));
  if (word.size() != k * (n + 1) || count_k != n || count_0 + count_k != word.size()) {
    throw KaryConditionError(
        KaryCondition::kPartCounts,
        "condition (i) violated: " + word.to_string() + " must have length " +
            std::to_string(k * (n + 1)) + " with exactly " + std::to_string(n) + " parts equal to " +
            std::to_string(arity) + " and all other parts 0");
  }
  const FundamentalDecomposition parts = fundamental_decomposition(word);
  if (parts.units.size() < k) {
    throw KaryConditionError(KaryCondition::kLeadingUnits,
                             "condition (ii) violated: fundamental decomposition of " +
                                 word.to_string() + " has " + std::to_string(parts.units.size()) +
                                 " unit compositions, fewer than k=" + std::to_string(arity));
  }
  int leading = 0;
  for (std::size_t j = 0; j < k; ++j) {
    leading += parts.units[j][0] == arity ? 1 : 0;
  }
  return leading;
}

Composition kary_pair_to_composition(const MarkedKaryTree& marked) {
  check_kary_mark(marked.tree, marked.mark);
  const Completion completion = complete(marked.tree);
  const Composition word =
      bar_delta_encode(MarkedPlaneTree{completion.tree, completion.image[marked.mark - 1]});
  const int arity = marked.tree.arity();
  const int edges = static_cast<int>(marked.tree.edge_count());
  int leading = -1;
  try {
    leading = check_kary_composition(word, arity, edges);
  } catch (const KaryConditionError& e) {
    throw InconsistencyError(std::string("kary_pair_to_composition: ") + e.what());
  }
  if (leading != marked.tree.outdegree(marked.mark - 1)) {
    throw InconsistencyError("kary_pair_to_composition: leading unit count does not match outdegree");
  }
  return word;
}

MarkedKaryTree composition_to_kary_pair(const Composition& word, int arity, int edges,
                                        int outdegree) {
  const int leading = check_kary_composition(word, arity, edges);
  if (leading != outdegree) {
    throw KaryConditionError(KaryCondition::kLeadingUnits,
                             "condition (ii) violated: " + std::to_string(leading) +
                                 " of the first k units begin with k, expected " +
                                 std::to_string(outdegree));
  }
  const MarkedPlaneTree completed = bar_delta_decode(word, arity);
  KaryTree tree = uncomplete(completed.tree, arity);

  // Internal vertices of T' in preorder are the vertices of T in preorder.
  const Composition outdegrees = preorder_outdegrees(completed.tree);
  std::size_t mark = 0;
  for (std::size_t j = 0; j < completed.mark; ++j) {
    mark += outdegrees[j] != 0 ? 1 : 0;
  }
  return MarkedKaryTree{std::move(tree), mark};
}

SubsetPair phi(const Composition& word, int arity, int edges) {
  check_kary_composition(word, arity, edges);
  const FundamentalDecomposition parts = fundamental_decomposition(word);

  SubsetPair pair;
  pair.k = arity;
  pair.n = edges;
  std::vector<int> beta;
  beta.reserve(word.size());
  for (std::size_t j = 0; j < parts.units.size(); ++j) {
    const auto& unit = parts.units[j];
    const bool leading = j < static_cast<std::size_t>(arity);
    if (leading && unit[0] == arity) {
      pair.X.push_back(static_cast<int>(j) + 1);
    }
    beta.insert(beta.end(), unit.begin() + (leading ? 1 : 0), unit.end());
  }
  beta.insert(beta.end(), parts.tail.begin(), parts.tail.end());
  for (std::size_t j = 0; j < beta.size(); ++j) {
    if (beta[j] == arity) {
      pair.Y.push_back(static_cast<int>(j) + 1);
    }
  }
  return pair;
}

namespace {

void check_subset(const std::vector<int>& subset, int upper, const char* name) {
  for (std::size_t j = 0; j < subset.size(); ++j) {
    if (subset[j] < 1 || subset[j] > upper) {
      throw std::invalid_argument(std::string(name) + " contains " + std::to_string(subset[j]) +
                                  ", outside [1, " + std::to_string(upper) + "]");
    }
    if (j > 0 && subset[j] <= subset[j - 1]) {
      throw std::invalid_argument(std::string(name) + " must be strictly increasing");
    }
  }
}

}  // namespace

Composition phi_inverse(const SubsetPair& pair) {
  if (pair.k < 1 || pair.n < 0) {
    throw std::invalid_argument("phi_inverse: need k >= 1 and n >= 0");
  }
  check_subset(pair.X, pair.k, "X");
  check_subset(pair.Y, pair.k * pair.n, "Y");
  if (static_cast<int>(pair.X.size() + pair.Y.size()) != pair.n) {
    throw std::invalid_argument("phi_inverse: |X| + |Y| must equal n");
  }

  std::vector<int> beta(static_cast<std::size_t>(pair.k * pair.n), 0);
  for (int y : pair.Y) {
    beta[static_cast<std::size_t>(y - 1)] = pair.k;
  }
  std::vector<int> word;
  word.reserve(beta.size() + static_cast<std::size_t>(pair.k));
  std::size_t next = 0;
  for (int j = 1; j <= pair.k; ++j) {
    const int lead = std::binary_search(pair.X.begin(), pair.X.end(), j) ? pair.k : 0;
    // Unit j starts with lead and runs until its height first reaches -1.
    word.push_back(lead);
    std::int64_t height = lead - 1;
    while (height >= 0) {
      if (next == beta.size()) {
        throw InconsistencyError("phi_inverse: ran out of entries while building unit " +
                                 std::to_string(j));
      }
      height += beta[next] - 1;
      word.push_back(beta[next++]);
    }
  }
  word.insert(word.end(), beta.begin() + static_cast<std::ptrdiff_t>(next), beta.end());

  Composition result(std::move(word));
  if (check_kary_composition(result, pair.k, pair.n) != static_cast<int>(pair.X.size())) {
    throw InconsistencyError("phi_inverse: result fails the leading-unit condition");
  }
  return result;
}

void check_kary_guard(int arity, int edges, const EnumerationGuards& guards) {
  if (arity < 1 || edges < 0) {
    throw std::invalid_argument("k-ary enumeration needs k >= 1 and n >= 0");
  }
  if (static_cast<std::int64_t>(arity) * edges > guards.kary_product) {
    throw GuardViolation("k-ary enumeration with k*n = " + std::to_string(arity * edges) +
                         " exceeds the guard of " + std::to_string(guards.kary_product) +
                         " (set TREEDEGREE_GUARD to raise it)");
  }
}

namespace detail {

std::vector<std::vector<std::uint8_t>> slot_subsets(int arity, int size) {
  std::vector<std::vector<std::uint8_t>> result;
  if (size < 0 || size > arity) {
    return result;
  }
  std::vector<int> chosen(static_cast<std::size_t>(size));
  for (int j = 0; j < size; ++j) {
    chosen[static_cast<std::size_t>(j)] = j;
  }
  while (true) {
    std::vector<std::uint8_t> flags(static_cast<std::size_t>(arity), 0);
    for (int c : chosen) {
      flags[static_cast<std::size_t>(c)] = 1;
    }
    result.push_back(std::move(flags));
    // Next combination in lexicographic order.
    int j = size - 1;
    while (j >= 0 && chosen[static_cast<std::size_t>(j)] == arity - size + j) {
      --j;
    }
    if (j < 0) {
      break;
    }
    ++chosen[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < size; ++t) {
      chosen[static_cast<std::size_t>(t)] = chosen[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return result;
}

}  // namespace detail

std::vector<KaryTree> enumerate_kary_trees(int arity, int edges,
                                           const EnumerationGuards& guards) {
  std::vector<KaryTree> trees;
  for_each_kary_tree(arity, edges, [&](KaryTree tree) { trees.push_back(std::move(tree)); },
                     guards);
  return trees;
}

BigCount count_kary_outdegree_bruteforce(int arity, int edges, int outdegree,
                                         const EnumerationGuards& guards) {
  std::uint64_t total = 0;
  for_each_kary_tree(
      arity, edges,
      [&](const KaryTree& tree) {
        for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
          total += tree.outdegree(v) == outdegree ? 1 : 0;
        }
      },
      guards);
  return total;
}

}  // namespace treedegree
