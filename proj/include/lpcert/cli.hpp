#ifndef LPCERT_CLI_HPP
#define LPCERT_CLI_HPP

/// Command-line front end: one subcommand per operation group, JSON on
/// stdout by default, CSV or an indented text rendering on request.
///
///   test                 membership criteria and necessary conditions
///   zeros                truncation roots, disk counts by winding number
///   constants            q-inf | c-n | interleaving (boundary constants)
///   verify-inequalities  the explicit inequalities behind the disk counts
///   census               nonreal-zero census over the separation disks
///
/// Exit codes form the whole scripting contract:
///
///   0   a computed answer, PASS and FAIL alike (FAIL is an answer)
///   2   hypotheses not met: the input fails a stated precondition,
///       so no claim is made either way
///   3   unresolved: certification failed at exhausted precision or a
///       solver/contour budget ran out
///   64  usage: unknown flag, missing argument, malformed function JSON
///
/// Reports land on stdout (errors for codes 2 and 3 as JSON documents of
/// kind "error"); usage problems land on stderr.  The env variable
/// LP_CERTIFY_PRECISION overrides the default 34 working digits.

#include <iosfwd>
#include <string>

namespace lpcert {

enum class OutputFormat { Json, Csv, Pretty };

/// Knobs shared by every subcommand, echoed into each report's "config"
/// field.  The library has no randomness and no scheduling-dependent
/// reductions, so determinism is not a switch; the flag records the
/// guarantee the output invariant relies on: same config + same inputs
/// => byte-identical output.
struct RunConfig {
  unsigned digits = 0;  ///< working precision (0 = initial_digits())
  OutputFormat format = OutputFormat::Json;
  std::string out_path;           ///< CSV target file; empty = stdout
  bool deterministic = true;      ///< always on; documented invariant
};

/// Exit codes by name, for tests and scripts built on top.
inline constexpr int kExitComputed = 0;
inline constexpr int kExitHypotheses = 2;
inline constexpr int kExitUnresolved = 3;
inline constexpr int kExitUsage = 64;

/// Parse argv, dispatch, serialize, and return the exit code.  Never
/// throws: every failure is mapped onto the contract above.  `out` gets
/// reports, `err` gets usage messages.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace lpcert

#endif
