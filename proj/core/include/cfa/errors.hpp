#pragma once

#include <stdexcept>
#include <string>

namespace cfa {

// Stable machine-greppable error codes, one per failure family.
enum class ErrorCode {
  spec_parse,    // malformed group-spec string
  bad_param,     // family parameter out of range (e.g. heisenberg:4)
  order_cap,     // resulting order exceeds the configured maximum
  io,            // file missing / unreadable
  parse,         // file content malformed
  validate,      // loaded object fails its invariants
  not_normal,    // quotient requested by a non-normal subgroup
  degenerate,    // operation needs a proper nontrivial subgroup
  inconsistent,  // exactness assertion failed (integrality, rationality)
  internal,      // should-not-happen diagnostic
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace cfa
