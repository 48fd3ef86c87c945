#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "treedegree/exact_math.hpp"

using namespace treedegree;

TEST_CASE("binomial matches Pascal's triangle") {
  const auto rows = oracle::pascal(60);
  for (int n = 0; n <= 60; ++n) {
    for (int m = 0; m <= n; ++m) {
      REQUIRE(binomial(n, m) == rows[n][m]);
    }
  }
}

TEST_CASE("binomial outside the triangle is zero") {
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(-3, 1) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial satisfies the Pascal recurrence") {
  for (int n = 1; n <= 80; ++n) {
    for (int m = -1; m <= n + 1; ++m) {
      REQUIRE(binomial(n, m) == binomial(n - 1, m) + binomial(n - 1, m - 1));
    }
  }
}

TEST_CASE("binomial beyond 64 bits") {
  CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
}

TEST_CASE("multinomial agrees with factorials") {
  const std::vector<std::vector<std::int64_t>> cases{
      {2, 1, 1}, {3, 0, 0, 1}, {1, 1, 1, 1}, {5}, {0, 0}, {4, 4, 2}};
  for (const auto& parts : cases) {
    std::int64_t n = 0;
    for (auto p : parts) {
      n += p;
    }
    CHECK(multinomial(n, parts) == oracle::multinomial(static_cast<int>(n), parts));
  }
  const std::vector<std::int64_t> wrong_sum{1, 1};
  CHECK(multinomial(3, wrong_sum) == 0);
  const std::vector<std::int64_t> negative{3, -1};
  CHECK_THROWS_AS(multinomial(2, negative), std::invalid_argument);
}

TEST_CASE("catalan numbers") {
  const std::vector<int> expected{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CHECK(catalan(static_cast<std::int64_t>(n)) == expected[n]);
  }
  CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("plane outdegree counts") {
  CHECK(count_plane_outdegree(2, 0) == 3);
  CHECK(count_plane_outdegree(3, 1) == 6);
  CHECK(count_plane_outdegree(3, 3) == 1);
  CHECK(count_plane_outdegree(3, 4) == 0);
  CHECK_THROWS_AS(count_plane_outdegree(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(count_plane_outdegree(2, -1), std::invalid_argument);
}

TEST_CASE("k-ary outdegree counts") {
  CHECK(count_kary_outdegree(2, 2, 1) == 8);
  CHECK(count_kary_outdegree(3, 2, 2) == 6);
  CHECK(count_kary_outdegree(1, 3, 0) == 3);
  CHECK(count_kary_outdegree(3, 2, 1) == 30);
  CHECK(count_kary_outdegree(2, 2, 3) == 0);
  CHECK_THROWS_AS(count_kary_outdegree(2, 0, 1), std::invalid_argument);
}

TEST_CASE("row and edge sums") {
  for (int n = 1; n <= 30; ++n) {
    BigCount rows = 0;
    BigCount edges = 0;
    for (int i = 0; i <= n; ++i) {
      rows += count_plane_outdegree(n, i);
      edges += i * count_plane_outdegree(n, i);
    }
    REQUIRE(rows == binomial(2 * n, n));
    REQUIRE(rows == (n + 1) * catalan(n));
    REQUIRE(edges == n * catalan(n));
  }
  for (int k = 1; k <= 6; ++k) {
    for (int n = 1; n <= 15; ++n) {
      BigCount rows = 0;
      BigCount edges = 0;
      for (int i = 0; i <= k; ++i) {
        rows += count_kary_outdegree(n, k, i);
        edges += i * count_kary_outdegree(n, k, i);
      }
      const std::int64_t v = n + 1;
      const BigCount trees = binomial(k * v, v) / ((k - 1) * v + 1);
      REQUIRE(rows == binomial(static_cast<std::int64_t>(k) * n + k, n));
      REQUIRE(rows == (n + 1) * trees);
      REQUIRE(edges == n * trees);
    }
  }
}

TEST_CASE("degree counts double outdegree counts for i >= 1") {
  for (int n = 1; n <= 25; ++n) {
    for (int i = 1; i <= n; ++i) {
      REQUIRE(count_plane_degree(n, i) == 2 * count_plane_outdegree(n, i));
    }
  }
  CHECK(count_plane_degree(2, 1) == 4);
  CHECK(count_plane_degree(3, 2) == 6);
  CHECK_THROWS_AS(count_plane_degree(3, 0), std::invalid_argument);
}

TEST_CASE("Fine numbers") {
  const std::vector<int> expected{1, 0, 1, 2, 6, 18, 57, 186, 622, 2120};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CHECK(fine_number(static_cast<std::int64_t>(n)) == expected[n]);
  }
}

TEST_CASE("odd outdegree totals") {
  CHECK(count_odd_outdegree(1) == 1);
  CHECK(count_odd_outdegree(2) == 2);
  CHECK(count_odd_outdegree(3) == 7);
  CHECK(count_odd_outdegree(5) == 86);
  for (int n = 1; n <= 14; ++n) {
    BigCount sum = 0;
    for (int i = 1; i <= n; i += 2) {
      sum += count_plane_outdegree(n, i);
    }
    REQUIRE(count_odd_outdegree(n) == sum);
    REQUIRE(3 * sum == 2 * binomial(2 * n - 1, n) + fine_number(n - 1));
  }
}

TEST_CASE("outdegree sequence identity") {
  CHECK(verify_outdegree_sequence_identity(3, 1).lhs == 6);
  CHECK(verify_outdegree_sequence_identity(3, 1).holds());
  CHECK(verify_outdegree_sequence_identity(1, 1).lhs == 1);
  CHECK(verify_outdegree_sequence_identity(4, 0).lhs == 35);
  for (int n = 1; n <= 10; ++n) {
    for (int i = 0; i <= n; ++i) {
      const auto check = verify_outdegree_sequence_identity(n, i);
      REQUIRE(check.holds());
      REQUIRE(check.rhs == count_plane_outdegree(n, i));
    }
  }
  CHECK_THROWS_AS(verify_outdegree_sequence_identity(kOutdegreeSequenceLimit + 1, 0),
                  std::invalid_argument);
}
