#pragma once

#include <stdexcept>
#include <string>

namespace fracturan {

enum class ErrorCode {
  invalid_argument,   // parameters outside an operation's contract
  out_of_range,       // sizes too large for an exhaustive routine
  graph6_header,      // malformed graph6 order prefix
  graph6_payload,     // wrong length or characters outside '?'..'~'
  graph6_padding,     // nonzero trailing bits in the last 6-bit group
  graph6_order,       // encoded order exceeds the supported vertex cap
  overflow,           // exact count does not fit the Count range
  io,                 // unreadable input or corpus file
  internal,           // a cross-check between two routes disagreed
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorCode::invalid_argument, message);
}

}  // namespace fracturan
