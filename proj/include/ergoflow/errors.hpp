#pragma once

#include <stdexcept>
#include <string>

namespace ergoflow {

enum class ErrorCode {
  kind_mismatch,      // points of different kinds fed to a metric/map
  parameter,          // out-of-range or malformed argument
  index,              // sample index out of range
  precision,          // symbol window exhausted (reliable radius)
  domain,             // point outside an operation's domain
  validation,         // sampled certification failed at the requested resolution
  unsupported_system, // operation not defined for this system
  structure,          // mismatched aggregate shapes (e.g. reparam vs arc)
  range_exhausted,    // discretization ran out of stored range
  inconclusive,       // not enough evidence to calibrate
  not_applicable,     // construction hypotheses not met
  split_failure,      // bisection could not bracket
  config,             // CLI/config parse or validation problem
  internal,
};

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

}  // namespace ergoflow
