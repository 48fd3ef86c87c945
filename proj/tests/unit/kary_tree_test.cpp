#include "doctest.h"

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "treedegree/exact_math.hpp"
#include "treedegree/kary_tree.hpp"

using namespace treedegree;

namespace {

const char* const kKaryExample =
    "(( . . (( . . . ) . ( . . . ) ) ) . ( . . (( . . . ) ( . . . ) . ) ) )";
const char* const kKaryExampleWord = "(3,0,0,0,0,3,0,0,0,0,3,0,0,3,3,0,0,0,3,0,0,0,0,3,3,0,0)";

struct TableRow {
  std::vector<int> x;
  std::vector<int> y;
  const char* word;
  const char* pair;
};

const std::vector<TableRow> kBinaryTwoEdgeRows{
    {{1}, {1}, "(2,2,0,0,0,0)", "((( . . ) . ) . )@1"},
    {{2}, {1}, "(0,2,2,0,0,0)", "( . (( . . ) . ) )@1"},
    {{1}, {2}, "(2,0,2,0,0,0)", "(( . ( . . ) ) . )@1"},
    {{2}, {2}, "(0,2,0,2,0,0)", "( . ( . ( . . ) ) )@1"},
    {{1}, {3}, "(2,0,0,0,2,0)", "( . (( . . ) . ) )@2"},
    {{2}, {3}, "(0,2,0,0,2,0)", "( . ( . ( . . ) ) )@2"},
    {{1}, {4}, "(2,0,0,0,0,2)", "((( . . ) . ) . )@2"},
    {{2}, {4}, "(0,2,0,0,0,2)", "(( . ( . . ) ) . )@2"},
};

}  // namespace

TEST_CASE("text form") {
  const auto tree = KaryTree::parse(kKaryExample);
  CHECK(tree.arity() == 3);
  CHECK(tree.edge_count() == 8);
  CHECK(tree.to_string() == kKaryExample);
  CHECK(KaryTree::parse("( . . )").edge_count() == 0);
  CHECK(KaryTree::parse("((( . . ) . ) . )").to_string() == "((( . . ) . ) . )");
  CHECK(KaryTree::parse("( ( ( . . ) . ) . )").to_string() == "((( . . ) . ) . )");
  CHECK_THROWS_AS(KaryTree::parse("( . . ) ."), std::invalid_argument);
  CHECK_THROWS_AS(KaryTree::parse("( . ( . . . ) )"), std::invalid_argument);
  CHECK_THROWS_AS(KaryTree::parse("( . "), std::invalid_argument);
  CHECK_THROWS_AS(MarkedKaryTree::parse("( . . )@2"), std::out_of_range);
}

TEST_CASE("slot identity distinguishes trees") {
  CHECK(KaryTree::parse("(( . . ) . )") != KaryTree::parse("( . ( . . ) )"));
  CHECK(KaryTree::parse("(( . . ) . )").outdegree(0) == 1);
}

TEST_CASE("subset pair json") {
  const SubsetPair pair{3, 8, {1, 3}, {8, 11, 12, 16, 21, 22}};
  CHECK(pair.to_json() == R"({"k":3,"n":8,"X":[1,3],"Y":[8,11,12,16,21,22]})");
  CHECK(SubsetPair::from_json(pair.to_json()) == pair);
  CHECK_THROWS_AS(SubsetPair::from_json("{\"k\":3}"), std::invalid_argument);
  CHECK_THROWS_AS(SubsetPair::from_json("not json"), std::invalid_argument);
}

TEST_CASE("completion of the worked example") {
  const auto tree = KaryTree::parse(kKaryExample);
  const auto completion = complete(tree);
  CHECK(completion.tree.edge_count() == 27);
  CHECK(completion.image.size() == 9);
  CHECK(completion.image[2] == 5);
  CHECK(uncomplete(completion.tree, 3) == tree);
}

TEST_CASE("encoding of the worked example") {
  const MarkedKaryTree marked{KaryTree::parse(kKaryExample), 3};
  const auto word = kary_pair_to_composition(marked);
  CHECK(word.to_string() == kKaryExampleWord);
  CHECK(check_kary_composition(word, 3, 8) == 2);
  const auto pair = phi(word, 3, 8);
  CHECK(pair == SubsetPair{3, 8, {1, 3}, {8, 11, 12, 16, 21, 22}});
  CHECK(phi_inverse(pair) == word);
  CHECK(composition_to_kary_pair(word, 3, 8, 2) == marked);
}

TEST_CASE("every row of the binary two-edge table") {
  for (const auto& row : kBinaryTwoEdgeRows) {
    CAPTURE(row.word);
    const SubsetPair pair{2, 2, row.x, row.y};
    const auto word = Composition::parse(row.word);
    const auto marked = MarkedKaryTree::parse(row.pair);
    CHECK(phi_inverse(pair) == word);
    CHECK(phi(word, 2, 2) == pair);
    CHECK(composition_to_kary_pair(word, 2, 2, 1).to_string() == row.pair);
    CHECK(kary_pair_to_composition(marked) == word);
  }
  CHECK(kary_pair_to_composition(MarkedKaryTree::parse("(( . . ) . )@1")).to_string() ==
        "(2,0,0,0)");
}

TEST_CASE("composition conditions") {
  const auto word = Composition::parse("(2,2,0,0,0,0)");
  CHECK(check_kary_composition(word, 2, 2) == 1);
  CHECK(check_kary_composition(Composition::parse("(0,0,0,0,2,2)"), 2, 2) == 0);
  try {
    check_kary_composition(Composition::parse("(2,1,0,0,0,0)"), 2, 2);
    FAIL("expected a part-count violation");
  } catch (const KaryConditionError& e) {
    CHECK(e.condition() == KaryCondition::kPartCounts);
  }
  try {
    composition_to_kary_pair(word, 2, 2, 2);
    FAIL("expected a leading-unit violation");
  } catch (const KaryConditionError& e) {
    CHECK(e.condition() == KaryCondition::kLeadingUnits);
  }
  CHECK_THROWS_AS(phi_inverse(SubsetPair{2, 2, {1, 2}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(phi_inverse(SubsetPair{2, 2, {3}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(phi_inverse(SubsetPair{2, 2, {1}, {5}}), std::invalid_argument);
  CHECK_THROWS_AS(phi_inverse(SubsetPair{2, 2, {2, 1}, {}}), std::invalid_argument);
}

TEST_CASE("enumeration matches a structural generator") {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 0; k * n <= 16; ++n) {
      std::set<std::string> mine;
      std::size_t count = 0;
      for_each_kary_tree(k, n, [&](const KaryTree& t) {
        mine.insert(oracle::kary_plain(t));
        REQUIRE(KaryTree::parse(t.to_string()) == t);
        ++count;
      });
      const auto theirs = oracle::kary_tree_strings(k, n);
      REQUIRE(count == mine.size());
      REQUIRE(mine == std::set<std::string>(theirs.begin(), theirs.end()));
      REQUIRE(count == binomial(k * (n + 1), n + 1) / ((k - 1) * (n + 1) + 1));
    }
  }
}

TEST_CASE("completion round trip and outdegree transport") {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 0; k * n <= 20; ++n) {
      for_each_kary_tree(k, n, [&](const KaryTree& t) {
        const auto c = complete(t);
        REQUIRE(uncomplete(c.tree, k) == t);
        const auto word = preorder_outdegrees(c.tree);
        std::size_t internal = 0;
        for (int part : word) {
          REQUIRE((part == 0 || part == k));
          internal += part == k ? 1 : 0;
        }
        REQUIRE(internal == t.vertex_count());
        for (std::size_t v = 0; v < t.vertex_count(); ++v) {
          REQUIRE(word[c.image[v] - 1] == k);
        }
      });
    }
  }
}

TEST_CASE("marked pairs, compositions and subset pairs correspond") {
  const std::vector<std::pair<int, int>> grid{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1},
                                              {3, 2}, {3, 3}, {4, 1}, {4, 2}};
  for (const auto& [k, n] : grid) {
    std::map<int, std::set<Composition>> words;
    std::map<int, std::size_t> pairs;
    for_each_kary_tree(k, n, [&](const KaryTree& t) {
      for (std::size_t j = 1; j <= t.vertex_count(); ++j) {
        const MarkedKaryTree marked{t, j};
        const int i = t.outdegree(j - 1);
        const auto word = kary_pair_to_composition(marked);
        std::size_t ks = 0;
        std::size_t zeros = 0;
        for (int part : word) {
          ks += part == k ? 1 : 0;
          zeros += part == 0 ? 1 : 0;
        }
        REQUIRE(ks == static_cast<std::size_t>(n));
        REQUIRE(zeros == static_cast<std::size_t>(k * n + k - n));
        REQUIRE(check_kary_composition(word, k, n) == i);
        REQUIRE(composition_to_kary_pair(word, k, n, i) == marked);
        const auto pair = phi(word, k, n);
        REQUIRE(static_cast<int>(pair.X.size()) == i);
        REQUIRE(phi_inverse(pair) == word);
        words[i].insert(word);
        ++pairs[i];
      }
    });
    for (int i = 0; i <= k; ++i) {
      REQUIRE(words[i].size() == pairs[i]);
      REQUIRE(pairs[i] == count_kary_outdegree(n, k, i));
      REQUIRE(binomial(k, i) * binomial(k * n, n - i) == count_kary_outdegree(n, k, i));
    }
  }
}

TEST_CASE("brute force matches closed forms") {
  CHECK(count_kary_outdegree_bruteforce(2, 2, 1) == 8);
  CHECK(count_kary_outdegree_bruteforce(2, 3, 2) == 6);
  CHECK(count_kary_outdegree_bruteforce(3, 1, 0) == 3);
  for (int k = 1; k <= 4; ++k) {
    for (int n = 1; k * n <= 16; ++n) {
      for (int i = 0; i <= k; ++i) {
        REQUIRE(count_kary_outdegree_bruteforce(k, n, i) == count_kary_outdegree(n, k, i));
      }
    }
  }
}

TEST_CASE("enumeration guard") {
  EnumerationGuards tight;
  tight.kary_product = 6;
  CHECK_NOTHROW(enumerate_kary_trees(2, 3, tight));
  CHECK_THROWS_AS(enumerate_kary_trees(2, 4, tight), GuardViolation);
  CHECK_THROWS_AS(enumerate_kary_trees(0, 1), std::invalid_argument);
}
