#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fracturan {

/// Exact nonnegative subgraph count. Checked: overflow or a negative result
/// throws instead of wrapping.
using Count = boost::multiprecision::checked_uint256_t;

/// Exact signed integer for differences of counts (second differences,
/// intermediate terms of closed forms).
using SignedCount = boost::multiprecision::checked_int256_t;

using u128 = unsigned __int128;

std::string to_decimal(const Count& value);
std::string to_decimal(const SignedCount& value);
std::string to_decimal(u128 value);
Count parse_count(const std::string& decimal);

/// Converts a signed intermediate into a Count, throwing ErrorCode::internal
/// when it is negative.
Count to_count(const SignedCount& value, const char* what);
Count to_count(u128 value);

/// Binomial coefficient with the conventions C(a, b) = 0 for b < 0 or a < b,
/// and C(0, 0) = 1. Negative a yields 0 for every b >= 0.
Count binom(std::int64_t a, std::int64_t b);
SignedCount binom_signed(std::int64_t a, std::int64_t b);

/// A half-integral quantity stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(std::int64_t doubled) : doubled_(doubled) {}

  static constexpr HalfInt from_integer(std::int64_t value) { return HalfInt(2 * value); }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }

  /// "2", "5/2", "0".
  std::string to_string() const;

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  std::int64_t doubled_ = 0;
};

}  // namespace fracturan
