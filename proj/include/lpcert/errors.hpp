#ifndef LPCERT_ERRORS_HPP
#define LPCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lpcert {

/// Base for all library failures so callers can catch one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: bad family descriptor, nonpositive coefficient,
/// empty quotient list, degree out of range, and the like.
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// A computation left its guaranteed range (overflow of an index budget,
/// truncation order past the supported cap).
struct RangeError : Error {
  explicit RangeError(const std::string& what) : Error(what) {}
};

/// An iterative solver (Aberth, bisection, golden section) failed to
/// reach its stopping criterion within the iteration budget.
/// A series truncation or iterative refinement could not reach the requested
/// tolerance within its budget (degree cap, iteration cap).
struct ConvergenceError : Error {
  using Error::Error;
};

struct SolverError : Error {
  explicit SolverError(const std::string& what) : Error(what) {}
};

/// A contour integral could not be trusted: the path passes too close to
/// a zero relative to the evaluation error bound, or the winding total
/// was not near an integer after the sample budget was exhausted.
struct ContourError : Error {
  explicit ContourError(const std::string& what) : Error(what) {}
};

/// A certified sign or comparison stayed ambiguous after the precision
/// escalation policy was exhausted.  The message says what was attempted.
struct UnresolvedError : Error {
  explicit UnresolvedError(const std::string& what) : Error(what) {}
};

/// Command-line misuse: unknown flag, missing argument, unparsable JSON.
struct UsageError : Error {
  explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace lpcert

#endif
