#pragma once

// Exact power series truncated mod z^(N+1), and the generating-function
// identities for Catalan and k-ary tree counts checked coefficient by
// coefficient.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "treedegree/bigcount.hpp"

namespace treedegree {

/// Power series with integer coefficients, known mod z^(order+1). The order is
/// fixed at construction; combining series of different orders throws
/// std::invalid_argument rather than silently re-truncating.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order);
  /// Coefficients beyond `order` are dropped, missing ones are zero.
  TruncatedSeries(std::size_t order, std::vector<BigInt> coefficients);

  static TruncatedSeries one(std::size_t order);
  /// coefficient * z^power.
  static TruncatedSeries monomial(std::size_t order, std::size_t power, BigInt coefficient = 1);

  std::size_t order() const { return coefficients_.size() - 1; }
  const BigInt& operator[](std::size_t power) const { return coefficients_[power]; }
  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const BigInt& scalar);

  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    return lhs += rhs;
  }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    return lhs -= rhs;
  }
  friend TruncatedSeries operator*(TruncatedSeries lhs, const BigInt& scalar) {
    return lhs *= scalar;
  }
  /// Cauchy product; coefficient n only reads coefficients <= n.
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

  /// this * z^power.
  TruncatedSeries shifted(std::size_t power) const;
  /// this^exponent by repeated squaring; this^0 is one().
  TruncatedSeries pow(std::uint64_t exponent) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void require_same_order(const TruncatedSeries& other) const;

  std::vector<BigInt> coefficients_;
};

/// C(z) mod z^(N+1) from c_0 = 1, c_{n+1} = sum_j c_j c_{n-j} (the
/// coefficientwise form of C = 1 + z C^2).
TruncatedSeries catalan_series(std::size_t order);

/// B_k(z) mod z^(N+1): the fixed point of B = (1 + z B)^k, reached after N+1
/// iterations from B = 1 because coefficient n of the right side only depends
/// on coefficients < n.
TruncatedSeries kary_series(int arity, std::size_t order);

struct CoefficientCheck {
  BigInt series_value;
  BigInt closed_form;

  bool holds() const { return series_value == closed_form; }
};

/// l/(2n+l) * C(2n+l, n).
BigInt catalan_power_closed_form(std::int64_t n, std::int64_t l);

/// l/(n+l) * C(k(n+l), n), the coefficient [z^n] B_k(z)^l.
BigInt kary_power_closed_form(std::int64_t arity, std::int64_t n, std::int64_t l);

/// l/n * C(kn, n), which is the form printed for [z^n] B_k^l in the source
/// literature. It is not the coefficient (fails already at k=2, n=2, l=1) and
/// is kept only so the discrepancy stays demonstrable. Requires n >= 1.
boost::multiprecision::cpp_rational kary_power_misprint(std::int64_t arity, std::int64_t n,
                                                        std::int64_t l);

/// ([z^n] C(z)^l by series power, closed form). `order` is the truncation
/// used for the series and defaults to n; an order below n throws
/// std::invalid_argument. Requires l >= 1, n >= 0.
CoefficientCheck verify_catalan_power_coeff(std::int64_t n, std::int64_t l,
                                            std::int64_t order = -1);

/// ([z^n] B_k(z)^l by series power, kary_power_closed_form). When n >= 1 and
/// l <= n it also checks the reindexed form [z^{n-l}] B_k^l = l/n * C(kn, n-l)
/// and throws InconsistencyError if that disagrees. Requires k, l >= 1, n >= 0.
CoefficientCheck verify_kary_power_coeff(std::int64_t arity, std::int64_t n, std::int64_t l,
                                         std::int64_t order = -1);

/// d/dt G_i(t, z) at t = 1 as sum_{m>=0} z^{m+i} C(z)^{2m+i}. Coefficient n is
/// the total number of outdegree-i vertices over all n-edge plane trees.
TruncatedSeries plane_derivative_series(int outdegree, std::size_t order);

/// d/dt A_{k,i}(t, z) at t = 1 as
/// C(k,i) sum_{r>=0} (k-1)^r (z^{i+r} B_k^{i+r} + z^{i+r+1} B_k^{i+r+1}).
/// Coefficient n is the total number of outdegree-i vertices over all n-edge
/// k-ary trees. Requires 0 <= i <= k.
TruncatedSeries kary_derivative_series(int arity, int outdegree, std::size_t order);

}  // namespace treedegree
