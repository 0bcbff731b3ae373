#include "fracturan/numeric.hpp"

#include <algorithm>
#include <exception>

#include "fracturan/error.hpp"

namespace fracturan {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::out_of_range: return "out of range";
    case ErrorCode::graph6_header: return "malformed graph6 header";
    case ErrorCode::graph6_payload: return "malformed graph6 payload";
    case ErrorCode::graph6_padding: return "nonzero graph6 padding bits";
    case ErrorCode::graph6_order: return "unsupported graph6 order";
    case ErrorCode::overflow: return "count overflow";
    case ErrorCode::io: return "I/O error";
    case ErrorCode::internal: return "internal consistency failure";
  }
  return "unknown error";
}

std::string to_decimal(const Count& value) { return value.str(); }

std::string to_decimal(const SignedCount& value) { return value.str(); }

std::string to_decimal(u128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Count parse_count(const std::string& decimal) {
  if (decimal.empty() || !std::all_of(decimal.begin(), decimal.end(),
                                      [](char c) { return c >= '0' && c <= '9'; })) {
    fail(ErrorCode::invalid_argument, "not a decimal count: '" + decimal + "'");
  }
  try {
    return Count(decimal);
  } catch (const std::exception&) {
    fail(ErrorCode::overflow, "count exceeds the supported range: " + decimal);
  }
}

Count to_count(const SignedCount& value, const char* what) {
  if (value < 0) {
    fail(ErrorCode::internal, std::string(what) + " evaluated to a negative value " + value.str());
  }
  return Count(value);
}

Count to_count(u128 value) {
  Count result = static_cast<std::uint64_t>(value >> 64);
  result <<= 64;
  result |= static_cast<std::uint64_t>(value);
  return result;
}

Count binom(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return Count(0);
  b = std::min(b, a - b);
  try {
    Count result = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
      result *= static_cast<std::uint64_t>(a - b + i);
      result /= static_cast<std::uint64_t>(i);
    }
    return result;
  } catch (const std::overflow_error&) {
    fail(ErrorCode::overflow,
         "C(" + std::to_string(a) + "," + std::to_string(b) + ") exceeds the count range");
  }
}

SignedCount binom_signed(std::int64_t a, std::int64_t b) { return SignedCount(binom(a, b)); }

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

}  // namespace fracturan
