#ifndef LPCERT_REPORT_HPP
#define LPCERT_REPORT_HPP

/// Serialization of every result type: JSON documents for scripting, CSV
/// tables for plotting, and the function-descriptor parser shared by the
/// command-line subcommands.
///
/// Every JSON document carries "schema": "lp-certify/1", a "kind"
/// discriminator, the command that produced it, and a fixed field order,
/// so identical inputs serialize to identical bytes.  JSON numbers are
/// double-rounded -- ample for every tolerance, margin, and count a
/// report carries -- while the CSV emitters print full working precision,
/// because plot data gets differenced downstream (the gap columns live at
/// 1e-8 and below).
///
/// Document kinds and their payloads:
///
///   verdict       criterion, function, outcome, hypotheses, witness or
///                 certified minimum, measurements
///   zeros         roots with classifications, counts, per-disk windings
///   census        rows (j, rho_j, winding, real_inside, nonreal_inside),
///                 stabilization verdict
///   bisection     a bracketed constant (q_infinity, or one c_n)
///   c-n-table     section constants with gaps to the limit
///   interleaving  the adjacent-comparison chain of section constants
///   inequalities  a list of checked inequality reports
///   error         outcome (HYPOTHESES_NOT_MET | UNRESOLVED) and message

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lpcert/constants.hpp"
#include "lpcert/criteria.hpp"
#include "lpcert/real.hpp"
#include "lpcert/series.hpp"
#include "lpcert/zeros.hpp"

namespace lpcert {

/// Key-order-preserving JSON document type used for all reports.
using Json = nlohmann::ordered_json;

/// "PASS", "FAIL", or "HYPOTHESES_NOT_MET".
std::string outcome_name(Outcome o);

/// A Real as a JSON number (double-rounded; see the header comment).
Json json_number(const Real& x);

Json to_json(const HypothesisRecord& r);
Json to_json(const Verdict& v);
Json to_json(const ZeroReport& r);
Json to_json(const CensusTable& t);
Json to_json(const BisectionResult& b, const std::string& name);
Json to_json(const InequalityReport& r);

/// One circle count with its context: the disk index when the radius came
/// from a separation radius rho_j (absent for a directly requested radius).
Json disk_count_json(const DiskCount& d, std::optional<std::size_t> j,
                     const Real& radius);

/// One row of the section-constant table: gap_to_qinf = c_n - q_infinity,
/// both computed to the same tolerance.
struct SectionConstantRow {
  std::size_t n = 0;
  Real c_n;
  Real gap_to_qinf;
};

/// CSV renderings (header row + LF line endings + full-precision
/// scientific notation).  Columns:
///   census         j, rho_j, winding, real_inside, nonreal_inside
///   c_n table      n, c_n, gap_to_qinf
///   inequalities   name, lhs, rhs, margin, holds
/// The inequality shape also serves the interleaving report, whose rows
/// are adjacent comparisons in chain order (lhs and rhs columns are then
/// monotone nonincreasing).
std::string to_csv(const CensusTable& t);
std::string to_csv(const std::vector<SectionConstantRow>& rows);
std::string to_csv(const std::vector<InequalityReport>& rows);

/// Write the CSV form of a report to a file.  Throws Error when the path
/// cannot be opened for writing.
void emit_plot_data(const CensusTable& t, const std::string& path);
void emit_plot_data(const std::vector<SectionConstantRow>& rows,
                    const std::string& path);
void emit_plot_data(const std::vector<InequalityReport>& rows,
                    const std::string& path);

/// Parse a function descriptor like {"family":"partial-theta","a2":4}.
///
///   partial-theta  a2                   (one number > 1)
///   q-kummer       a                    (one number > 1)
///   quotients      q (nonempty array), optional a0, a1 (default 1)
///   explicit       coeffs (nonempty array of positive numbers)
///
/// Numeric fields accept JSON numbers or decimal strings ("3.5"); strings
/// carry full precision into the working type.  Any structural problem --
/// unparsable JSON, missing or unknown or mistyped field, or a value the
/// family rejects -- throws UsageError naming the offending field.
CoefficientSequence parse_function(const std::string& text);

/// Assemble a full document: schema, command, kind, config, then the
/// payload's fields in their given order.
Json make_document(const std::string& command, const std::string& kind,
                   const Json& config, const Json& payload);

/// Structural validation of a serialized document: schema string, known
/// kind, and the kind's required fields with the right JSON types.
/// Throws Error naming the first violation.
void validate_report(const Json& doc);

/// Deterministic human-readable rendering (the "pretty" output format):
/// key/value lines, nested blocks indented, array elements dashed.
std::string render_pretty(const Json& doc);

}  // namespace lpcert

#endif
