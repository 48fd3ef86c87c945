#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "treedegree/composition.hpp"

using namespace treedegree;

TEST_CASE("text form") {
  CHECK(Composition::parse("(3,2,0)") == Composition{3, 2, 0});
  CHECK(Composition::parse(" ( 3 , 2,0 ) ") == Composition{3, 2, 0});
  CHECK(Composition::parse("()").empty());
  CHECK(Composition{3, 2, 0}.to_string() == "(3,2,0)");
  CHECK(Composition{}.to_string() == "()");
  CHECK_THROWS_AS(Composition::parse("(3,-1)"), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse("3,2"), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse("(3,,2)"), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse("(3,2"), std::invalid_argument);
  CHECK_THROWS_AS(Composition({1, -2}), std::invalid_argument);
}

TEST_CASE("f statistic") {
  CHECK(f_statistic(Composition{3, 2, 0}) == 2);
  CHECK(f_statistic(Composition{0}) == -1);
  CHECK(f_statistic(Composition{}) == 0);
  CHECK(f_statistic(Composition{1, 1, 1}) == 0);
}

TEST_CASE("unit and positive") {
  CHECK(is_unit(Composition{0}));
  CHECK(is_unit(Composition{2, 0, 0}));
  CHECK(is_unit(Composition{3, 0, 0, 2, 0, 0}));
  CHECK_FALSE(is_unit(Composition{0, 0}));
  CHECK_FALSE(is_unit(Composition{2, 0}));
  CHECK_FALSE(is_unit(Composition{}));
  CHECK(is_positive(Composition{3, 2, 0}));
  CHECK(is_positive(Composition{}));
  CHECK_FALSE(is_positive(Composition{0}));
}

TEST_CASE("fundamental decomposition examples") {
  {
    const auto d = fundamental_decomposition(Composition::parse("(0,2,0,0,0,3,0,0,2,0,0,3,2,0)"));
    const std::vector<Composition> units{{0}, {2, 0, 0}, {0}, {3, 0, 0, 2, 0, 0}};
    CHECK(d.units == units);
    CHECK(d.tail == Composition{3, 2, 0});
  }
  {
    const auto d = fundamental_decomposition(Composition{0, 0});
    CHECK(d.units == std::vector<Composition>{{0}, {0}});
    CHECK(d.tail.empty());
  }
  {
    const auto d = fundamental_decomposition(
        Composition::parse("(3,0,0,0,0,3,0,0,0,0,3,0,0,3,3,0,0,0,3,0,0,0,0,3,3,0,0)"));
    const std::vector<Composition> units{
        {3, 0, 0, 0}, {0}, {3, 0, 0, 0}, {0}, {3, 0, 0, 3, 3, 0, 0, 0, 3, 0, 0, 0, 0}};
    CHECK(d.units == units);
    CHECK(d.tail == Composition{3, 3, 0, 0});
  }
  {
    const auto d = fundamental_decomposition(Composition{});
    CHECK(d.units.empty());
    CHECK(d.tail.empty());
  }
}

TEST_CASE("decomposition properties over small compositions") {
  std::size_t seen = 0;
  for (int m = 0; m <= 10; ++m) {
    for (int length = 1; length <= 10; ++length) {
      for_each_composition(m, length, [&](std::span<const int> parts) {
        const Composition c(std::vector<int>(parts.begin(), parts.end()));
        const auto d = fundamental_decomposition(c);
        REQUIRE(d.flatten() == c);
        REQUIRE(is_positive(d.tail));
        for (const auto& u : d.units) {
          REQUIRE(is_unit(u));
        }
        REQUIRE(f_statistic(c) == -static_cast<std::int64_t>(d.units.size()) + f_statistic(d.tail));
        REQUIRE(oracle::decomposition_count(std::vector<int>(parts.begin(), parts.end())) == 1);
        ++seen;
      });
    }
  }
  CHECK(seen == 352715);
}

TEST_CASE("a unit decomposes to itself") {
  for (int edges = 0; edges <= 8; ++edges) {
    for_each_unit_word(edges, edges, [&](std::span<const int> word) {
      const Composition u(std::vector<int>(word.begin(), word.end()));
      REQUIRE(f_statistic(u) == -1);
      const auto d = fundamental_decomposition(u);
      REQUIRE(d.units == std::vector<Composition>{u});
      REQUIRE(d.tail.empty());
    });
  }
}

TEST_CASE("unit words are enumerated once each, in order") {
  for (int edges = 0; edges <= 9; ++edges) {
    std::vector<Composition> words;
    for_each_unit_word(edges, edges, [&](std::span<const int> word) {
      words.emplace_back(std::vector<int>(word.begin(), word.end()));
    });
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::set<Composition>(words.begin(), words.end()).size() == words.size());
    CHECK(words.size() == oracle::binomial(2 * edges, edges) / (edges + 1));
  }
}

TEST_CASE("compositions into a fixed length") {
  std::size_t count = 0;
  for_each_composition(4, 3, [&](std::span<const int> parts) {
    CHECK(parts.size() == 3);
    ++count;
  });
  CHECK(count == 15);
}
