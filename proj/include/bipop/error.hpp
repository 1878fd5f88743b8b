#pragma once

#include <stdexcept>
#include <string>

namespace bipop {

enum class ErrorCode {
  invalid_argument,     // malformed input: out-of-range vertex, loop, bad parameter
  precondition_failed,  // input well-formed but outside an operation's domain
  cap_exceeded,         // size cap hit (vertex caps, enumeration caps)
  not_converged,        // eigensolver gave up
  invariant_violation,  // theorem-violation detector or cross-oracle disagreement
  parse_error,          // JSON / graph6 / config decoding
  io_error,
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

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace bipop
