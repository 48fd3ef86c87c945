#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "treedegree/exact_math.hpp"
#include "treedegree/plane_tree.hpp"

using namespace treedegree;

namespace {

const char* const kPlaneExample = "(()(()(()())))()(()()(()()))";

}  // namespace

TEST_CASE("text form") {
  CHECK(PlaneTree::parse("").edge_count() == 0);
  CHECK(PlaneTree::parse("()()").children.size() == 2);
  CHECK(PlaneTree::parse(kPlaneExample).to_string() == kPlaneExample);
  CHECK(PlaneTree::parse(kPlaneExample).vertex_count() == 15);
  CHECK_THROWS_AS(PlaneTree::parse("(()"), std::invalid_argument);
  CHECK_THROWS_AS(PlaneTree::parse("())"), std::invalid_argument);
  CHECK_THROWS_AS(PlaneTree::parse("(x)"), std::invalid_argument);

  const auto marked = MarkedPlaneTree::parse(std::string(kPlaneExample) + "@4");
  CHECK(marked.mark == 4);
  CHECK(marked.to_string() == std::string(kPlaneExample) + "@4");
  CHECK(MarkedPlaneTree::parse("@1").tree.edge_count() == 0);
  CHECK_THROWS_AS(MarkedPlaneTree::parse("()@3"), std::out_of_range);
  CHECK_THROWS_AS(MarkedPlaneTree::parse("()@0"), std::out_of_range);
  CHECK_THROWS_AS(MarkedPlaneTree::parse("()"), std::invalid_argument);
}

TEST_CASE("preorder outdegree word of the worked example") {
  const auto tree = PlaneTree::parse(kPlaneExample);
  CHECK(preorder_outdegrees(tree).to_string() == "(3,2,0,2,0,2,0,0,0,3,0,0,2,0,0)");
  CHECK(delta_decode(preorder_outdegrees(tree)) == tree);
  CHECK(outdegree_at(tree, 1) == 3);
  CHECK(outdegree_at(tree, 4) == 2);
  CHECK_THROWS_AS(outdegree_at(tree, 16), std::out_of_range);
}

TEST_CASE("histograms") {
  const auto tree = PlaneTree::parse(kPlaneExample);
  CHECK(outdegree_histogram(tree) == std::map<int, std::size_t>{{0, 9}, {2, 4}, {3, 2}});
  CHECK(degree_histogram(tree) == std::map<int, std::size_t>{{1, 9}, {3, 5}, {4, 1}});
  CHECK(outdegree_histogram(PlaneTree{}) == std::map<int, std::size_t>{{0, 1}});
}

TEST_CASE("marked encoding of the worked example") {
  const auto marked = MarkedPlaneTree::parse(std::string(kPlaneExample) + "@4");
  const auto word = bar_delta_encode(marked);
  CHECK(word.to_string() == "(0,2,0,0,0,3,0,0,2,0,0,3,2,0)");
  CHECK(word.size() == 14);
  CHECK(word.sum() == 12);
  CHECK(bar_delta_decode(word, 2) == marked);
  CHECK_THROWS_AS(bar_delta_decode(word, 3), std::invalid_argument);
}

TEST_CASE("decoding rejects non-unit words") {
  CHECK_THROWS_AS(delta_decode(Composition{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(delta_decode(Composition{1}), std::invalid_argument);
  CHECK(delta_decode(Composition{0}) == PlaneTree{});
}

TEST_CASE("enumeration matches a structural generator") {
  for (int n = 0; n <= 9; ++n) {
    const auto trees = enumerate_plane_trees(n);
    REQUIRE(trees.size() == catalan(n));
    std::set<std::string> mine;
    for (const auto& t : trees) {
      mine.insert(t.to_string());
    }
    std::set<std::string> theirs;
    for (const auto& t : oracle::plane_trees(n)) {
      theirs.insert(t.to_string());
    }
    REQUIRE(mine.size() == trees.size());
    REQUIRE(mine == theirs);
  }
}

TEST_CASE("enumeration order is lexicographic in the outdegree word") {
  const auto trees = enumerate_plane_trees(6);
  std::vector<Composition> words;
  for (const auto& t : trees) {
    words.push_back(preorder_outdegrees(t));
  }
  CHECK(std::is_sorted(words.begin(), words.end()));
  CHECK(enumerate_plane_trees(3).front().to_string() == "((()))");
}

TEST_CASE("delta round trip and unit image") {
  for (int n = 0; n <= 10; ++n) {
    for_each_plane_tree(n, [&](const PlaneTree& t) {
      const auto word = preorder_outdegrees(t);
      REQUIRE(is_unit(word));
      REQUIRE(delta_decode(word) == t);
    });
  }
}

TEST_CASE("marked round trip and image") {
  for (int n = 1; n <= 8; ++n) {
    std::map<int, std::multiset<Composition>> images;
    for_each_plane_tree(n, [&](const PlaneTree& t) {
      for (std::size_t j = 1; j <= t.vertex_count(); ++j) {
        const MarkedPlaneTree marked{t, j};
        const auto word = bar_delta_encode(marked);
        const int i = outdegree_at(t, j);
        REQUIRE(bar_delta_decode(word, i) == marked);
        images[i].insert(word);
      }
    });
    for (int i = 0; i <= n; ++i) {
      std::multiset<Composition> expected;
      for_each_composition(n - i, n, [&](std::span<const int> parts) {
        expected.insert(Composition(std::vector<int>(parts.begin(), parts.end())));
      });
      REQUIRE(images[i] == expected);
      REQUIRE(expected.size() == count_plane_outdegree(n, i));
    }
  }
}

TEST_CASE("brute force matches closed forms") {
  CHECK(count_outdegree_bruteforce(2, 0) == 3);
  CHECK(count_outdegree_bruteforce(3, 1) == 6);
  CHECK(count_outdegree_bruteforce(3, 3) == 1);
  for (int n = 1; n <= 10; ++n) {
    const auto trees = oracle::plane_trees(n);
    for (int i = 0; i <= n; ++i) {
      REQUIRE(count_outdegree_bruteforce(n, i) == count_plane_outdegree(n, i));
      REQUIRE(oracle::outdegree_total(trees, i) == count_plane_outdegree(n, i));
    }
    for (int i = 1; i <= n; ++i) {
      REQUIRE(count_degree_bruteforce(n, i) == 2 * count_outdegree_bruteforce(n, i));
      REQUIRE(count_degree_bruteforce(n, i) == count_plane_degree(n, i));
    }
  }
}

TEST_CASE("enumeration guard") {
  EnumerationGuards tight;
  tight.plane_edges = 3;
  CHECK_NOTHROW(enumerate_plane_trees(3, tight));
  CHECK_THROWS_AS(enumerate_plane_trees(4, tight), GuardViolation);
  CHECK_THROWS_AS(enumerate_plane_trees(-1), std::invalid_argument);
  CHECK(parse_guards("9").plane_edges == 9);
  CHECK(parse_guards("9,30").kary_product == 30);
  CHECK_THROWS_AS(parse_guards("x"), std::invalid_argument);
}
