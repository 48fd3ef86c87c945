#pragma once

// Closed-form counts for vertices of given outdegree in plane trees and
// k-ary trees, plus the exact combinatorial primitives they are built from.
// Every function here is pure.

#include <cstdint>
#include <span>

#include "treedegree/bigcount.hpp"

namespace treedegree {

/// C(n, m). Zero whenever n < 0, m < 0 or m > n, so sums with vanishing
/// tails can be written without range bookkeeping.
BigCount binomial(std::int64_t n, std::int64_t m);

/// n! / (parts[0]! parts[1]! ...) when the parts sum to n, otherwise 0.
/// Throws std::invalid_argument on a negative part.
BigCount multinomial(std::int64_t n, std::span<const std::int64_t> parts);

/// c_n = C(2n, n) / (n + 1): number of plane trees with n edges.
BigCount catalan(std::int64_t n);

/// Total number of outdegree-i vertices over all plane trees with n edges,
/// C(2n-i-1, n-1). Requires n >= 1 and i >= 0.
BigCount count_plane_outdegree(std::int64_t n, std::int64_t i);

/// Total number of outdegree-i vertices over all k-ary trees with n edges,
/// C(k, i) * C(kn, n-i). Requires n, k >= 1 and i >= 0.
BigCount count_kary_outdegree(std::int64_t n, std::int64_t k, std::int64_t i);

/// Total number of degree-i vertices over all plane trees with n edges,
/// where the root's degree is its outdegree and every other vertex counts its
/// parent too: 2 * C(2n-i-1, n-1). Requires n >= 1 and i >= 1.
BigCount count_plane_degree(std::int64_t n, std::int64_t i);

/// Fine number F_n = 3 * sum_{j>=0} C(2n-2j, n) - 2 * C(2n+1, n).
///
/// Indexing: F_0 = 1, F_1 = 0, F_2 = 1, F_3 = 2, F_4 = 6 (OEIS A000957 with
/// offset 0). count_odd_outdegree(n) pairs n-edge trees with F_{n-1}.
BigInt fine_number(std::int64_t n);

/// Total number of odd-outdegree vertices over all plane trees with n edges,
/// summed from count_plane_outdegree. Self-checks the result against
/// (2 C(2n-1, n) + F_{n-1}) / 3 and throws InconsistencyError on mismatch.
BigCount count_odd_outdegree(std::int64_t n);

struct IdentityCheck {
  BigCount lhs;
  BigCount rhs;

  bool holds() const { return lhs == rhs; }
};

/// Sums r_i/(n+1) * multinomial(n+1; r_0..r_n) over every outdegree sequence
/// (r_0..r_n) with sum r_j = n+1 and sum j*r_j = n, and pairs it with
/// count_plane_outdegree(n, i). Requires 1 <= n <= 30.
IdentityCheck verify_outdegree_sequence_identity(std::int64_t n, std::int64_t i);

/// Largest n accepted by verify_outdegree_sequence_identity.
inline constexpr std::int64_t kOutdegreeSequenceLimit = 30;

}  // namespace treedegree
