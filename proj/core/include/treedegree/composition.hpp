#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treedegree {

/// Finite sequence of nonnegative integers. The carrier of every bijection in
/// this library: a plane tree is its preorder outdegree word, a marked tree is
/// that word rotated past the mark.
///
/// Text form: decimal parts separated by commas inside parentheses with no
/// whitespace, e.g. "(3,2,0)". The empty composition is "()".
class Composition {
 public:
  Composition() = default;
  /// Throws std::invalid_argument if any part is negative.
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  std::span<const int> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t index) const { return parts_[index]; }
  std::int64_t sum() const;

  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  /// Subsequence [first, first + count).
  Composition slice(std::size_t first, std::size_t count) const;

  friend Composition operator+(const Composition& lhs, const Composition& rhs);
  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition&, const Composition&) = default;

  /// Accepts optional whitespace around parts; throws std::invalid_argument
  /// on anything else that is not the canonical form.
  static Composition parse(std::string_view text);
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// f(c) = sum of (part - 1) = sum - length.
std::int64_t f_statistic(const Composition& c);

/// Every proper prefix has f >= 0 and f(c) == -1. Unit compositions are
/// exactly the preorder outdegree words of plane trees.
bool is_unit(const Composition& c);

/// Every nonempty prefix has f >= 0. The empty composition is positive.
bool is_positive(const Composition& c);

/// c = units[0] units[1] ... units[s-1] tail, each unit a unit composition and
/// tail positive.
struct FundamentalDecomposition {
  std::vector<Composition> units;
  Composition tail;

  Composition flatten() const;
  friend bool operator==(const FundamentalDecomposition&,
                         const FundamentalDecomposition&) = default;
};

/// Cuts a unit off at the earliest prefix whose f reaches -1, repeatedly; what
/// is left when no prefix reaches -1 is the tail. Single pass.
FundamentalDecomposition fundamental_decomposition(const Composition& c);

/// Visits every unit composition of length edges + 1 and sum edges whose parts
/// are all <= max_part, in lexicographic order, as a span of parts.
template <class Visit>
void for_each_unit_word(int edges, int max_part, Visit&& visit);

/// Visits every composition of `total` into exactly `length` nonnegative
/// parts, in lexicographic order.
template <class Visit>
void for_each_composition(int total, int length, Visit&& visit);

namespace detail {

template <class Visit>
void unit_word_step(std::vector<int>& word, std::size_t position, int sum_left, int height,
                    int max_part, Visit& visit) {
  const std::size_t last = word.size() - 1;
  if (position == last) {
    if (sum_left <= max_part) {
      word[position] = sum_left;
      visit(std::span<const int>(word));
    }
    return;
  }
  // A non-final part must keep the running height >= 0, so it is at least
  // 1 - height. No branch dead-ends: the tail can always absorb sum_left.
  const int lowest = height >= 1 ? 0 : 1;
  const int highest = sum_left < max_part ? sum_left : max_part;
  for (int part = lowest; part <= highest; ++part) {
    // Remaining positions after this one must be able to hold the rest.
    const int rest = sum_left - part;
    const auto slots_after = static_cast<std::int64_t>(last - position);
    if (static_cast<std::int64_t>(rest) > slots_after * max_part) {
      continue;
    }
    word[position] = part;
    unit_word_step(word, position + 1, rest, height + part - 1, max_part, visit);
  }
}

template <class Visit>
void composition_step(std::vector<int>& parts, std::size_t position, int total_left,
                      Visit& visit) {
  if (position + 1 == parts.size()) {
    parts[position] = total_left;
    visit(std::span<const int>(parts));
    return;
  }
  for (int part = 0; part <= total_left; ++part) {
    parts[position] = part;
    composition_step(parts, position + 1, total_left - part, visit);
  }
}

}  // namespace detail

template <class Visit>
void for_each_unit_word(int edges, int max_part, Visit&& visit) {
  if (edges < 0 || max_part < 0) {
    return;
  }
  std::vector<int> word(static_cast<std::size_t>(edges) + 1, 0);
  detail::unit_word_step(word, 0, edges, 0, max_part, visit);
}

template <class Visit>
void for_each_composition(int total, int length, Visit&& visit) {
  if (total < 0 || length < 0) {
    return;
  }
  if (length == 0) {
    if (total == 0) {
      visit(std::span<const int>());
    }
    return;
  }
  std::vector<int> parts(static_cast<std::size_t>(length), 0);
  detail::composition_step(parts, 0, total, visit);
}

}  // namespace treedegree
