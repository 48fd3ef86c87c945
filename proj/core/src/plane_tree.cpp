#include "treedegree/plane_tree.hpp"

#include <charconv>
#include <stdexcept>

namespace treedegree {

std::size_t PlaneTree::edge_count() const {
  std::size_t edges = children.size();
  for (const auto& child : children) {
    edges += child.edge_count();
  }
  return edges;
}

namespace {

void write_children(const PlaneTree& tree, std::string& out) {
  for (const auto& child : tree.children) {
    out += '(';
    write_children(child, out);
    out += ')';
  }
}

void collect_outdegrees(const PlaneTree& tree, std::vector<int>& out) {
  out.push_back(static_cast<int>(tree.children.size()));
  for (const auto& child : tree.children) {
    collect_outdegrees(child, out);
  }
}

// Builds the subtree rooted at word[position] and advances position past it.
PlaneTree decode_at(std::span<const int> word, std::size_t& position) {
  PlaneTree tree;
  const int outdegree = word[position++];
  tree.children.reserve(static_cast<std::size_t>(outdegree));
  for (int c = 0; c < outdegree; ++c) {
    tree.children.push_back(decode_at(word, position));
  }
  return tree;
}

void collect_degrees(const PlaneTree& tree, bool is_root, std::map<int, std::size_t>& out) {
  ++out[static_cast<int>(tree.children.size()) + (is_root ? 0 : 1)];
  for (const auto& child : tree.children) {
    collect_degrees(child, false, out);
  }
}

}  // namespace

PlaneTree PlaneTree::parse(std::string_view text) {
  // Stack of open vertices; the bottom entry is the root.
  std::vector<PlaneTree> open(1);
  for (char ch : text) {
    if (ch == '(') {
      open.emplace_back();
    } else if (ch == ')') {
      if (open.size() < 2) {
        throw std::invalid_argument("malformed plane tree: unmatched ')'");
      }
      PlaneTree done = std::move(open.back());
      open.pop_back();
      open.back().children.push_back(std::move(done));
    } else {
      throw std::invalid_argument(std::string("malformed plane tree: unexpected character '") +
                                  ch + "'");
    }
  }
  if (open.size() != 1) {
    throw std::invalid_argument("malformed plane tree: unmatched '('");
  }
  return std::move(open.front());
}

std::string PlaneTree::to_string() const {
  std::string out;
  write_children(*this, out);
  return out;
}

namespace {

std::pair<std::string_view, std::size_t> split_mark(std::string_view text) {
  const auto at = text.rfind('@');
  if (at == std::string_view::npos) {
    throw std::invalid_argument("marked tree must have the form <tree>@<mark>");
  }
  const auto digits = text.substr(at + 1);
  std::size_t mark = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), mark);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("marked tree: bad mark '" + std::string(digits) + "'");
  }
  return {text.substr(0, at), mark};
}

void check_mark(std::size_t mark, std::size_t vertex_count) {
  if (mark < 1 || mark > vertex_count) {
    throw std::out_of_range("mark " + std::to_string(mark) + " outside [1, " +
                            std::to_string(vertex_count) + "]");
  }
}

}  // namespace

MarkedPlaneTree MarkedPlaneTree::parse(std::string_view text) {
  auto [tree_text, mark] = split_mark(text);
  MarkedPlaneTree marked{PlaneTree::parse(tree_text), mark};
  check_mark(marked.mark, marked.tree.vertex_count());
  return marked;
}

std::string MarkedPlaneTree::to_string() const {
  return tree.to_string() + "@" + std::to_string(mark);
}

Composition preorder_outdegrees(const PlaneTree& tree) {
  std::vector<int> word;
  collect_outdegrees(tree, word);
  return Composition(std::move(word));
}

int outdegree_at(const PlaneTree& tree, std::size_t mark) {
  const Composition word = preorder_outdegrees(tree);
  check_mark(mark, word.size());
  return word[mark - 1];
}

PlaneTree delta_decode(const Composition& word) {
  if (!is_unit(word)) {
    throw std::invalid_argument("delta_decode: " + word.to_string() +
                                " is not a unit composition");
  }
  std::size_t position = 0;
  return decode_at(word.parts(), position);
}

std::map<int, std::size_t> outdegree_histogram(const PlaneTree& tree) {
  std::map<int, std::size_t> histogram;
  for (int d : preorder_outdegrees(tree)) {
    ++histogram[d];
  }
  return histogram;
}

std::map<int, std::size_t> degree_histogram(const PlaneTree& tree) {
  std::map<int, std::size_t> histogram;
  collect_degrees(tree, true, histogram);
  return histogram;
}

Composition bar_delta_encode(const MarkedPlaneTree& marked) {
  const Composition word = preorder_outdegrees(marked.tree);
  check_mark(marked.mark, word.size());
  const std::size_t j = marked.mark;
  return word.slice(j, word.size() - j) + word.slice(0, j - 1);
}

MarkedPlaneTree bar_delta_decode(const Composition& word, int outdegree) {
  if (outdegree < 0) {
    throw std::invalid_argument("bar_delta_decode: outdegree must be nonnegative");
  }
  const auto length = static_cast<std::int64_t>(word.size());
  if (word.sum() + outdegree != length) {
    throw std::invalid_argument("bar_delta_decode: " + word.to_string() +
                                " has length " + std::to_string(length) + " and sum " +
                                std::to_string(word.sum()) + ", inconsistent with outdegree " +
                                std::to_string(outdegree));
  }
  const FundamentalDecomposition parts = fundamental_decomposition(word);
  const auto s = static_cast<std::int64_t>(parts.units.size());
  if (f_statistic(parts.tail) != s - outdegree) {
    throw InconsistencyError("bar_delta_decode: tail f-statistic does not equal s - i");
  }

  Composition rotated = parts.tail + Composition{outdegree};
  for (const auto& unit : parts.units) {
    rotated = rotated + unit;
  }
  if (!is_unit(rotated)) {
    throw InconsistencyError("bar_delta_decode: rotated word " + rotated.to_string() +
                             " is not a unit composition");
  }
  return MarkedPlaneTree{delta_decode(rotated), parts.tail.size() + 1};
}

void check_plane_guard(int edges, const EnumerationGuards& guards) {
  if (edges < 0) {
    throw std::invalid_argument("edge count must be nonnegative");
  }
  if (edges > guards.plane_edges) {
    throw GuardViolation("plane-tree enumeration with " + std::to_string(edges) +
                         " edges exceeds the guard of " + std::to_string(guards.plane_edges) +
                         " (set TREEDEGREE_GUARD to raise it)");
  }
}

std::vector<PlaneTree> enumerate_plane_trees(int edges, const EnumerationGuards& guards) {
  std::vector<PlaneTree> trees;
  for_each_plane_tree(edges, [&](PlaneTree tree) { trees.push_back(std::move(tree)); }, guards);
  return trees;
}

BigCount count_outdegree_bruteforce(int edges, int outdegree, const EnumerationGuards& guards) {
  std::uint64_t total = 0;
  for_each_plane_tree(
      edges,
      [&](const PlaneTree& tree) {
        const auto histogram = outdegree_histogram(tree);
        if (auto it = histogram.find(outdegree); it != histogram.end()) {
          total += it->second;
        }
      },
      guards);
  return total;
}

BigCount count_degree_bruteforce(int edges, int degree, const EnumerationGuards& guards) {
  std::uint64_t total = 0;
  for_each_plane_tree(
      edges,
      [&](const PlaneTree& tree) {
        const auto histogram = degree_histogram(tree);
        if (auto it = histogram.find(degree); it != histogram.end()) {
          total += it->second;
        }
      },
      guards);
  return total;
}

}  // namespace treedegree
