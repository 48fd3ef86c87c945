#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace treedegree {

/// Arbitrary-precision signed integer. Intermediate values (Fine-number sums,
/// series residuals) may be negative.
using BigInt = boost::multiprecision::cpp_int;

/// Nonnegative count. Same representation as BigInt; every function that
/// returns a BigCount guarantees value >= 0.
using BigCount = BigInt;

/// Raised when an internal algebraic self-check fails (a non-exact division,
/// an identity that should hold by construction). Never expected.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_decimal(const BigInt& value) { return value.str(); }

/// a / b, requiring b | a.
BigInt exact_div(const BigInt& a, const BigInt& b);

}  // namespace treedegree
