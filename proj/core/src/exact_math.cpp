#include "treedegree/exact_math.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace treedegree {

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) {
    throw InconsistencyError("exact_div: division by zero");
  }
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(a, b, quotient, remainder);
  if (remainder != 0) {
    throw InconsistencyError("exact_div: " + a.str() + " is not divisible by " + b.str());
  }
  return quotient;
}

BigCount binomial(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0 || m > n) {
    return 0;
  }
  m = std::min(m, n - m);
  BigCount result = 1;
  // result == C(n - m + j, j) after step j, so every division is exact.
  for (std::int64_t j = 1; j <= m; ++j) {
    result *= n - m + j;
    result /= j;
  }
  return result;
}

namespace {

BigCount factorial(std::int64_t n) {
  BigCount result = 1;
  for (std::int64_t j = 2; j <= n; ++j) {
    result *= j;
  }
  return result;
}

void require(bool condition, const char* what) {
  if (!condition) {
    throw std::invalid_argument(what);
  }
}

}  // namespace

BigCount multinomial(std::int64_t n, std::span<const std::int64_t> parts) {
  std::int64_t total = 0;
  for (auto part : parts) {
    require(part >= 0, "multinomial: parts must be nonnegative");
    total += part;
  }
  if (n < 0 || total != n) {
    return 0;
  }
  BigCount denominator = 1;
  for (auto part : parts) {
    denominator *= factorial(part);
  }
  return exact_div(factorial(n), denominator);
}

BigCount catalan(std::int64_t n) {
  require(n >= 0, "catalan: n must be nonnegative");
  return exact_div(binomial(2 * n, n), n + 1);
}

BigCount count_plane_outdegree(std::int64_t n, std::int64_t i) {
  require(n >= 1, "count_plane_outdegree: n must be >= 1");
  require(i >= 0, "count_plane_outdegree: i must be >= 0");
  return binomial(2 * n - i - 1, n - 1);
}

BigCount count_kary_outdegree(std::int64_t n, std::int64_t k, std::int64_t i) {
  require(n >= 1, "count_kary_outdegree: n must be >= 1");
  require(k >= 1, "count_kary_outdegree: k must be >= 1");
  require(i >= 0, "count_kary_outdegree: i must be >= 0");
  return binomial(k, i) * binomial(k * n, n - i);
}

BigCount count_plane_degree(std::int64_t n, std::int64_t i) {
  require(n >= 1, "count_plane_degree: n must be >= 1");
  require(i >= 1, "count_plane_degree: i must be >= 1");
  return 2 * binomial(2 * n - i - 1, n - 1);
}

BigInt fine_number(std::int64_t n) {
  require(n >= 0, "fine_number: n must be nonnegative");
  BigInt tail = 0;
  for (std::int64_t j = 0; 2 * n - 2 * j >= n; ++j) {
    tail += binomial(2 * n - 2 * j, n);
  }
  return 3 * tail - 2 * binomial(2 * n + 1, n);
}

BigCount count_odd_outdegree(std::int64_t n) {
  require(n >= 1, "count_odd_outdegree: n must be >= 1");
  BigCount total = 0;
  for (std::int64_t i = 1; i <= n; i += 2) {
    total += count_plane_outdegree(n, i);
  }
  const BigCount relation = exact_div(2 * binomial(2 * n - 1, n) + fine_number(n - 1), 3);
  if (relation != total) {
    throw InconsistencyError("count_odd_outdegree: odd-outdegree sum " + total.str() +
                             " disagrees with Fine-number relation " + relation.str() +
                             " at n=" + std::to_string(n));
  }
  return total;
}

namespace {

// Visits every (r_0, ..., r_n) with sum r_j = n+1 and sum j*r_j = n. Parts
// j = n..1 are chosen from the top down; r_0 absorbs the remaining count.
template <class Visit>
void for_each_outdegree_sequence(std::vector<std::int64_t>& r, std::int64_t j,
                                 std::int64_t weight_left, Visit&& visit) {
  const auto n = static_cast<std::int64_t>(r.size()) - 1;
  if (j == 0) {
    if (weight_left != 0) {
      return;
    }
    const std::int64_t used = std::accumulate(r.begin() + 1, r.end(), std::int64_t{0});
    r[0] = n + 1 - used;
    visit(static_cast<const std::vector<std::int64_t>&>(r));
    r[0] = 0;
    return;
  }
  for (std::int64_t count = weight_left / j; count >= 0; --count) {
    r[j] = count;
    for_each_outdegree_sequence(r, j - 1, weight_left - count * j, visit);
  }
  r[j] = 0;
}

}  // namespace

IdentityCheck verify_outdegree_sequence_identity(std::int64_t n, std::int64_t i) {
  require(n >= 1 && n <= kOutdegreeSequenceLimit,
          "verify_outdegree_sequence_identity: n must be in [1, 30]");
  require(i >= 0, "verify_outdegree_sequence_identity: i must be >= 0");

  IdentityCheck check;
  check.rhs = count_plane_outdegree(n, i);
  if (i > n) {
    check.lhs = 0;
    return check;
  }
  std::vector<std::int64_t> r(static_cast<std::size_t>(n) + 1, 0);
  for_each_outdegree_sequence(r, n, n, [&](const std::vector<std::int64_t>& seq) {
    const BigCount weighted = seq[static_cast<std::size_t>(i)] * multinomial(n + 1, seq);
    check.lhs += exact_div(weighted, n + 1);
  });
  return check;
}

}  // namespace treedegree
