#include "treedegree/series.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "treedegree/exact_math.hpp"

namespace treedegree {

TruncatedSeries::TruncatedSeries(std::size_t order) : coefficients_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  coefficients_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) { return monomial(order, 0, 1); }

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t power,
                                          BigInt coefficient) {
  TruncatedSeries result(order);
  if (power <= order) {
    result.coefficients_[power] = std::move(coefficient);
  }
  return result;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coefficients_) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

void TruncatedSeries::require_same_order(const TruncatedSeries& other) const {
  if (order() != other.order()) {
    throw std::invalid_argument("truncated series orders differ: " + std::to_string(order()) +
                                " vs " + std::to_string(other.order()));
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_order(other);
  for (std::size_t n = 0; n < coefficients_.size(); ++n) {
    coefficients_[n] += other.coefficients_[n];
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_order(other);
  for (std::size_t n = 0; n < coefficients_.size(); ++n) {
    coefficients_[n] -= other.coefficients_[n];
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigInt& scalar) {
  for (auto& c : coefficients_) {
    c *= scalar;
  }
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  lhs.require_same_order(rhs);
  const std::size_t order = lhs.order();
  TruncatedSeries product(order);
  for (std::size_t a = 0; a <= order; ++a) {
    if (lhs.coefficients_[a] == 0) {
      continue;
    }
    for (std::size_t b = 0; a + b <= order; ++b) {
      product.coefficients_[a + b] += lhs.coefficients_[a] * rhs.coefficients_[b];
    }
  }
  return product;
}

TruncatedSeries TruncatedSeries::shifted(std::size_t power) const {
  TruncatedSeries result(order());
  for (std::size_t n = 0; n + power <= order(); ++n) {
    result.coefficients_[n + power] = coefficients_[n];
  }
  return result;
}

TruncatedSeries TruncatedSeries::pow(std::uint64_t exponent) const {
  TruncatedSeries result = one(order());
  TruncatedSeries base = *this;
  while (exponent != 0) {
    if ((exponent & 1U) != 0) {
      result = result * base;
    }
    exponent >>= 1U;
    if (exponent != 0) {
      base = base * base;
    }
  }
  return result;
}

TruncatedSeries catalan_series(std::size_t order) {
  std::vector<BigInt> c(order + 1);
  c[0] = 1;
  for (std::size_t n = 0; n < order; ++n) {
    BigInt next = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      next += c[j] * c[n - j];
    }
    c[n + 1] = std::move(next);
  }
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries kary_series(int arity, std::size_t order) {
  if (arity < 1) {
    throw std::invalid_argument("kary_series: arity must be >= 1");
  }
  const auto one = TruncatedSeries::one(order);
  TruncatedSeries b = one;
  for (std::size_t step = 0; step <= order; ++step) {
    b = (one + b.shifted(1)).pow(static_cast<std::uint64_t>(arity));
  }
  return b;
}

BigInt catalan_power_closed_form(std::int64_t n, std::int64_t l) {
  if (l < 1 || n < 0) {
    throw std::invalid_argument("catalan_power_closed_form: need l >= 1, n >= 0");
  }
  return exact_div(l * binomial(2 * n + l, n), 2 * n + l);
}

BigInt kary_power_closed_form(std::int64_t arity, std::int64_t n, std::int64_t l) {
  if (arity < 1 || l < 1 || n < 0) {
    throw std::invalid_argument("kary_power_closed_form: need k, l >= 1, n >= 0");
  }
  return exact_div(l * binomial(arity * (n + l), n), n + l);
}

boost::multiprecision::cpp_rational kary_power_misprint(std::int64_t arity, std::int64_t n,
                                                        std::int64_t l) {
  if (arity < 1 || l < 1 || n < 1) {
    throw std::invalid_argument("kary_power_misprint: need k, l, n >= 1");
  }
  return boost::multiprecision::cpp_rational(l * binomial(arity * n, n)) /
         boost::multiprecision::cpp_rational(n);
}

namespace {

std::size_t resolve_order(std::int64_t n, std::int64_t order) {
  if (order < 0) {
    order = n;
  }
  if (order < n) {
    throw std::invalid_argument("series truncation order " + std::to_string(order) +
                                " is too small for coefficient " + std::to_string(n));
  }
  return static_cast<std::size_t>(order);
}

}  // namespace

CoefficientCheck verify_catalan_power_coeff(std::int64_t n, std::int64_t l, std::int64_t order) {
  if (l < 1 || n < 0) {
    throw std::invalid_argument("verify_catalan_power_coeff: need l >= 1, n >= 0");
  }
  const auto series = catalan_series(resolve_order(n, order)).pow(static_cast<std::uint64_t>(l));
  return {series[static_cast<std::size_t>(n)], catalan_power_closed_form(n, l)};
}

CoefficientCheck verify_kary_power_coeff(std::int64_t arity, std::int64_t n, std::int64_t l,
                                         std::int64_t order) {
  if (arity < 1 || l < 1 || n < 0) {
    throw std::invalid_argument("verify_kary_power_coeff: need k, l >= 1, n >= 0");
  }
  const auto power =
      kary_series(static_cast<int>(arity), resolve_order(n, order)).pow(static_cast<std::uint64_t>(l));
  if (n >= 1 && l <= n) {
    // Shape used when summing the derivative series: exponent and degree add
    // up to n.
    const BigInt reindexed = exact_div(l * binomial(arity * n, n - l), n);
    if (power[static_cast<std::size_t>(n - l)] != reindexed) {
      throw InconsistencyError("verify_kary_power_coeff: [z^(n-l)] B_k^l != l/n C(kn, n-l) at k=" +
                               std::to_string(arity) + ", n=" + std::to_string(n) +
                               ", l=" + std::to_string(l));
    }
  }
  return {power[static_cast<std::size_t>(n)], kary_power_closed_form(arity, n, l)};
}

TruncatedSeries plane_derivative_series(int outdegree, std::size_t order) {
  if (outdegree < 0) {
    throw std::invalid_argument("plane_derivative_series: outdegree must be >= 0");
  }
  const auto i = static_cast<std::size_t>(outdegree);
  TruncatedSeries total(order);
  if (i > order) {
    return total;
  }
  const auto c = catalan_series(order);
  const auto c_squared = c * c;
  TruncatedSeries power = c.pow(i);  // C^{2m+i}
  std::size_t m = 0;
  for (; m + i <= order; ++m) {
    total += power.shifted(m + i);
    power = power * c_squared;
  }
  // Term m has lowest degree m + i, so the first omitted term must vanish.
  if (!power.shifted(m + i).is_zero()) {
    throw InconsistencyError("plane_derivative_series: truncated tail is nonzero");
  }
  return total;
}

TruncatedSeries kary_derivative_series(int arity, int outdegree, std::size_t order) {
  if (arity < 1 || outdegree < 0 || outdegree > arity) {
    throw std::invalid_argument("kary_derivative_series: need k >= 1 and 0 <= i <= k");
  }
  const auto i = static_cast<std::size_t>(outdegree);
  TruncatedSeries total(order);
  const auto zb = kary_series(arity, order).shifted(1);
  TruncatedSeries power = zb.pow(i);  // (zB)^{i+r}
  BigInt weight = 1;                  // (k-1)^r
  std::size_t r = 0;
  for (; i + r <= order; ++r) {
    const auto next = power * zb;
    total += (power + next) * weight;
    power = next;
    weight *= arity - 1;
  }
  if (!((power + power * zb) * weight).is_zero()) {
    throw InconsistencyError("kary_derivative_series: truncated tail is nonzero");
  }
  total *= binomial(arity, outdegree);
  return total;
}

}  // namespace treedegree
