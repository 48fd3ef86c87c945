#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "treedegree/bigcount.hpp"
#include "treedegree/composition.hpp"
#include "treedegree/guards.hpp"
#include "treedegree/plane_tree.hpp"

namespace treedegree {

/// Rooted tree in which every vertex has exactly `arity` ordered slots, each
/// empty or holding a subtree. Stored flat: vertices are numbered 0..V-1 in
/// preorder (present vertices only, slots visited in order) and slot s of
/// vertex v lives at slots_[v * arity + s].
///
/// Text form: a vertex is "(" followed by its `arity` slots and ")"; a slot is
/// "." when empty or a nested vertex. Tokens are separated by one space except
/// that consecutive "(" are written adjacent, so the binary left-left path is
/// "((( . . ) . ) . )". Parsing ignores whitespace.
class KaryTree {
 public:
  static constexpr std::int32_t kEmpty = -1;

  /// The single-vertex tree.
  explicit KaryTree(int arity);

  /// Builds a tree from preorder slot occupancy: entry v * arity + s is
  /// nonzero iff slot s of the v-th vertex (preorder) holds a subtree. Throws
  /// std::invalid_argument if the flags do not describe exactly that many
  /// vertices.
  static KaryTree from_occupancy(int arity, std::span<const std::uint8_t> occupancy);

  int arity() const { return arity_; }
  std::size_t vertex_count() const { return slots_.size() / static_cast<std::size_t>(arity_); }
  std::size_t edge_count() const { return vertex_count() - 1; }

  /// Preorder index (0-based) of the child in slot `slot` of `vertex`, or
  /// kEmpty.
  std::int32_t child(std::size_t vertex, int slot) const {
    return slots_[vertex * static_cast<std::size_t>(arity_) + static_cast<std::size_t>(slot)];
  }
  /// Number of nonempty slots of `vertex` (0-based preorder index).
  int outdegree(std::size_t vertex) const;

  friend bool operator==(const KaryTree&, const KaryTree&) = default;

  static KaryTree parse(std::string_view text);
  std::string to_string() const;

 private:
  KaryTree() = default;

  int arity_ = 1;
  std::vector<std::int32_t> slots_;
};

/// k-ary tree with a distinguished vertex (1-based preorder over present
/// vertices). Text form: "<tree>@<mark>".
struct MarkedKaryTree {
  KaryTree tree;
  std::size_t mark = 1;

  friend bool operator==(const MarkedKaryTree&, const MarkedKaryTree&) = default;

  static MarkedKaryTree parse(std::string_view text);
  std::string to_string() const;
};

/// (X, Y) with X a subset of {1..k} and Y a subset of {1..kn}, both sorted.
/// JSON form: {"k":3,"n":8,"X":[1,3],"Y":[8,11,12,16,21,22]} (key order and
/// compact spacing are part of the format).
struct SubsetPair {
  int k = 1;
  int n = 0;
  std::vector<int> X;
  std::vector<int> Y;

  friend bool operator==(const SubsetPair&, const SubsetPair&) = default;

  std::string to_json() const;
  /// Throws std::invalid_argument on malformed JSON or missing keys.
  static SubsetPair from_json(std::string_view text);
};

/// The complete k-ary tree T' of T together with the vertex map: image[v] is
/// the 1-based T' preorder index of T's vertex with 0-based preorder index v.
struct Completion {
  PlaneTree tree;
  std::vector<std::size_t> image;
};

/// Materializes every empty slot as a leaf. T' has n+1 internal vertices, all
/// of outdegree k, and k(n+1) edges.
Completion complete(const KaryTree& tree);

/// Inverse of complete(): leaves become empty slots. Throws
/// std::invalid_argument if an internal vertex has outdegree other than k or
/// the tree is a single vertex.
KaryTree uncomplete(const PlaneTree& tree, int arity);

/// Which characterizing condition a composition fails.
enum class KaryCondition {
  /// Length k(n+1) with exactly n parts equal to k and the rest 0.
  kPartCounts,
  /// At least k units in the fundamental decomposition, exactly i of the
  /// first k starting with k.
  kLeadingUnits,
};

class KaryConditionError : public std::invalid_argument {
 public:
  KaryConditionError(KaryCondition condition, const std::string& what)
      : std::invalid_argument(what), condition_(condition) {}

  KaryCondition condition() const { return condition_; }

 private:
  KaryCondition condition_;
};

/// Checks that `word` is the encoding of some marked k-ary tree with n edges
/// and returns the marked vertex's outdegree i (the number of the first k
/// units that begin with k). Throws KaryConditionError otherwise.
int check_kary_composition(const Composition& word, int arity, int edges);

/// bar_delta_encode of the completion, marked at the image of the mark.
Composition kary_pair_to_composition(const MarkedKaryTree& marked);

/// Inverse of kary_pair_to_composition. Throws KaryConditionError if `word`
/// fails either condition or if its outdegree is not `outdegree`.
MarkedKaryTree composition_to_kary_pair(const Composition& word, int arity, int edges,
                                        int outdegree);

/// X = indices among the first k units that begin with k; Y = 1-based
/// positions of k in the word with the first part of each of those k units
/// deleted. Throws KaryConditionError when `word` is not a valid encoding.
SubsetPair phi(const Composition& word, int arity, int edges);

/// Inverse of phi. Throws std::invalid_argument unless X is a subset of
/// {1..k}, Y a subset of {1..kn}, and |X| + |Y| = n.
Composition phi_inverse(const SubsetPair& pair);

void check_kary_guard(int arity, int edges, const EnumerationGuards& guards);

/// Visits every k-ary tree with `edges` edges exactly once. Order: by
/// preorder outdegree word (lexicographic), then by the slot subsets chosen
/// at each vertex in preorder (lexicographic). Throws GuardViolation when
/// k * edges exceeds guards.kary_product.
template <class Visit>
void for_each_kary_tree(int arity, int edges, Visit&& visit,
                        const EnumerationGuards& guards = default_guards());

std::vector<KaryTree> enumerate_kary_trees(int arity, int edges,
                                           const EnumerationGuards& guards = default_guards());

/// Number of vertices with exactly i nonempty slots, over all enumerated
/// k-ary trees with n edges.
BigCount count_kary_outdegree_bruteforce(int arity, int edges, int outdegree,
                                         const EnumerationGuards& guards = default_guards());

namespace detail {

/// Occupancy flags of every `size`-subset of `arity` slots, lexicographic by
/// chosen slot indices.
std::vector<std::vector<std::uint8_t>> slot_subsets(int arity, int size);

}  // namespace detail

template <class Visit>
void for_each_kary_tree(int arity, int edges, Visit&& visit, const EnumerationGuards& guards) {
  check_kary_guard(arity, edges, guards);
  std::vector<std::vector<std::vector<std::uint8_t>>> subsets;
  for (int size = 0; size <= arity; ++size) {
    subsets.push_back(detail::slot_subsets(arity, size));
  }
  const auto k = static_cast<std::size_t>(arity);
  std::vector<std::uint8_t> occupancy;
  for_each_unit_word(edges, arity, [&](std::span<const int> word) {
    const std::size_t vertices = word.size();
    std::vector<std::size_t> choice(vertices, 0);
    occupancy.assign(vertices * k, 0);
    while (true) {
      for (std::size_t v = 0; v < vertices; ++v) {
        const auto& flags = subsets[static_cast<std::size_t>(word[v])][choice[v]];
        std::copy(flags.begin(), flags.end(), occupancy.begin() + static_cast<std::ptrdiff_t>(v * k));
      }
      visit(KaryTree::from_occupancy(arity, occupancy));
      // Odometer over per-vertex subset choices, last vertex fastest.
      bool advanced = false;
      for (std::size_t v = vertices; v-- > 0;) {
        if (++choice[v] < subsets[static_cast<std::size_t>(word[v])].size()) {
          advanced = true;
          break;
        }
        choice[v] = 0;
      }
      if (!advanced) {
        return;
      }
    }
  });
}

}  // namespace treedegree
