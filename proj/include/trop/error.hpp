/*
 * Error taxonomy for the whole library.
 *
 * ValidationError: the input violates a documented precondition (bad JSON,
 * degenerate geometry, a face missing from a complex, ...).  Maps to CLI
 * exit code 2.
 *
 * InvariantError: an internal consistency check failed mid-computation
 * (non-exact division, negative Hodge number, failed audit).  These signal
 * either a bug or input outside the theory's hypotheses that could not be
 * detected up front.  Maps to CLI exit code 3.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace trop {

class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

class ValidationError : public Error {
public:
  using Error::Error;
};

class InvariantError : public Error {
public:
  using Error::Error;
};

[[noreturn]] inline void fail_validation(const std::string& code,
                                         const std::string& detail) {
  throw ValidationError(code, detail);
}

[[noreturn]] inline void fail_invariant(const std::string& code,
                                        const std::string& detail) {
  throw InvariantError(code, detail);
}

}  // namespace trop
