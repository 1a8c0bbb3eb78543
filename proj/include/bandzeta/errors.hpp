#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bandzeta {

// Process exit codes used by the command line tool.  Library errors are
// thrown as the exception types below and mapped onto these at the edge.
enum class ExitCode : int {
  Ok = 0,
  ValidationFailure = 2,
  ParseFailure = 3,
  ResourceLimit = 4,
  InternalConsistency = 5,
};

// Malformed input: bad JSON, unknown names, non-composable paths, ...
// `location` names the offending position ("relations[2]", "byte 17").
struct ParseError : std::runtime_error {
  std::string location;

  ParseError(std::string loc, const std::string& what)
      : std::runtime_error(loc.empty() ? what : loc + ": " + what),
        location(std::move(loc)) {}
};

// A configured enumeration or walk budget was exceeded.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two computation routes that must agree by theorem disagreed.  Always a
// bug in this library, never a property of the input.
struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// An operation was called outside its documented domain.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

// An iterative numeric routine failed to certify its result.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bandzeta
