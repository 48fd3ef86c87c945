#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "treedegree/bigcount.hpp"
#include "treedegree/composition.hpp"
#include "treedegree/guards.hpp"

namespace treedegree {

/// Rooted tree with linearly ordered subtrees. Vertices carry no data and are
/// addressed by 1-based preorder index, computed on demand.
///
/// Text form: one balanced pair of parentheses per non-root vertex, in
/// preorder, with no whitespace. The single vertex is the empty string, the
/// cherry is "()()", the 2-edge path is "(())".
struct PlaneTree {
  std::vector<PlaneTree> children;

  std::size_t edge_count() const;
  std::size_t vertex_count() const { return edge_count() + 1; }

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;

  /// Throws std::invalid_argument on unbalanced input or stray characters.
  static PlaneTree parse(std::string_view text);
  std::string to_string() const;
};

/// A plane tree with one distinguished vertex, given by 1-based preorder index.
/// Text form: "<tree>@<mark>".
struct MarkedPlaneTree {
  PlaneTree tree;
  std::size_t mark = 1;

  friend bool operator==(const MarkedPlaneTree&, const MarkedPlaneTree&) = default;

  static MarkedPlaneTree parse(std::string_view text);
  std::string to_string() const;
};

/// (d_1, ..., d_{n+1}): outdegrees in preorder. Always a unit composition.
Composition preorder_outdegrees(const PlaneTree& tree);

/// Outdegree of the vertex with 1-based preorder index `mark`.
int outdegree_at(const PlaneTree& tree, std::size_t mark);

/// Inverse of preorder_outdegrees. Throws std::invalid_argument unless
/// is_unit(word).
PlaneTree delta_decode(const Composition& word);

/// outdegree -> number of vertices with that outdegree. Absent keys are zero.
std::map<int, std::size_t> outdegree_histogram(const PlaneTree& tree);

/// degree -> number of vertices, where the root's degree is its outdegree and
/// every other vertex's degree is its outdegree plus one.
std::map<int, std::size_t> degree_histogram(const PlaneTree& tree);

/// Removes d_j from the preorder word and rotates so the word starts just
/// after the mark: (d_{j+1}, ..., d_{n+1}, d_1, ..., d_{j-1}). The result has
/// length n and sum n - i, where i is the marked vertex's outdegree.
/// Throws std::out_of_range for a mark outside [1, vertex_count].
Composition bar_delta_encode(const MarkedPlaneTree& marked);

/// Inverse of bar_delta_encode. `outdegree` is the marked vertex's outdegree
/// and must equal word.size() - word.sum(); a mismatch throws
/// std::invalid_argument.
///
/// With word = units... tail, the tree is delta_decode(tail (i) units...) and
/// the mark sits right after the tail.
MarkedPlaneTree bar_delta_decode(const Composition& word, int outdegree);

/// Visits every plane tree with `edges` edges exactly once, ordered
/// lexicographically by preorder outdegree word. Throws GuardViolation when
/// edges exceeds guards.plane_edges.
template <class Visit>
void for_each_plane_tree(int edges, Visit&& visit,
                         const EnumerationGuards& guards = default_guards());

std::vector<PlaneTree> enumerate_plane_trees(int edges,
                                             const EnumerationGuards& guards = default_guards());

/// Number of outdegree-i vertices summed over every enumerated n-edge tree.
BigCount count_outdegree_bruteforce(int edges, int outdegree,
                                    const EnumerationGuards& guards = default_guards());

/// Number of degree-i vertices summed over every enumerated n-edge tree.
BigCount count_degree_bruteforce(int edges, int degree,
                                 const EnumerationGuards& guards = default_guards());

void check_plane_guard(int edges, const EnumerationGuards& guards);

template <class Visit>
void for_each_plane_tree(int edges, Visit&& visit, const EnumerationGuards& guards) {
  check_plane_guard(edges, guards);
  for_each_unit_word(edges, edges, [&](std::span<const int> word) {
    visit(delta_decode(Composition(std::vector<int>(word.begin(), word.end()))));
  });
}

}  // namespace treedegree
