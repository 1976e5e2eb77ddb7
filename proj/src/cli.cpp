#include "lpcert/cli.hpp"

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "lpcert/constants.hpp"
#include "lpcert/criteria.hpp"
#include "lpcert/errors.hpp"
#include "lpcert/report.hpp"
#include "lpcert/scan.hpp"
#include "lpcert/series.hpp"
#include "lpcert/zeros.hpp"

namespace lpcert {

namespace {

/// Everything a handler produces: the exit code, the JSON document, and a
/// CSV rendering when the report kind has a tabular shape.
struct CommandResult {
  int exit = kExitComputed;
  Json doc;
  std::optional<std::string> csv;
};

Json config_json(const RunConfig& cfg) {
  Json c;
  c["digits"] = cfg.digits;
  c["format"] = cfg.format == OutputFormat::Csv      ? "csv"
                : cfg.format == OutputFormat::Pretty ? "pretty"
                                                     : "json";
  c["deterministic"] = cfg.deterministic;
  return c;
}

std::size_t parse_index(const std::string& s, const std::string& flag,
                        const std::string& whole) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError(flag + ": expected an index or a range like 4..10, got '" +
                     whole + "'");
  try {
    return static_cast<std::size_t>(std::stoul(s));
  } catch (const std::exception&) {
    throw UsageError(flag + ": index out of range in '" + whole + "'");
  }
}

std::pair<std::size_t, std::size_t> parse_index_range(const std::string& text,
                                                      const std::string& flag) {
  const std::size_t pos = text.find("..");
  if (pos == std::string::npos) {
    const std::size_t v = parse_index(text, flag, text);
    return {v, v};
  }
  const std::size_t lo = parse_index(text.substr(0, pos), flag, text);
  const std::size_t hi = parse_index(text.substr(pos + 2), flag, text);
  if (lo > hi)
    throw UsageError(flag + ": range lower end exceeds upper end in '" + text +
                     "'");
  return {lo, hi};
}

Real parse_real(const std::string& text, const std::string& flag) {
  try {
    return Real(text);
  } catch (const std::exception&) {
    throw UsageError(flag + ": '" + text + "' is not a number");
  }
}

// margin >= -1e-12 * max(|lhs|, |rhs|, 1), the library's uniform slack for
// non-strict source inequalities.
bool margin_holds(const Real& lhs, const Real& rhs, const Real& margin) {
  const Real scale = std::max(abs(lhs), std::max(abs(rhs), Real(1)));
  return margin >= -Real("1e-12") * scale;
}

// ---- test ----------------------------------------------------------------

CommandResult run_test(const RunConfig& cfg, const std::string& criterion,
                       const std::string& function_json, std::size_t n_max,
                       std::size_t scan_nodes) {
  const CoefficientSequence seq = parse_function(function_json);
  ScanPolicy scan;
  scan.nodes = scan_nodes;

  Verdict v;
  if (criterion == "hutchinson") {
    v = hutchinson_test(seq, n_max);
  } else if (criterion == "lemma12") {
    v = necessary_q2q3_test(seq);
  } else if (criterion == "theoremD") {
    v = necessary_sign_test(seq, scan);
  } else {
    v = mthm1_criterion(seq, n_max, scan);
  }

  Json payload;
  payload["criterion"] = v.criterion;
  payload["function"] = seq.describe();
  const Json body = to_json(v);
  for (const auto& item : body.items())
    if (item.key() != "criterion") payload[item.key()] = item.value();

  CommandResult r;
  r.exit = v.outcome == Outcome::HypothesesNotMet ? kExitHypotheses
                                                  : kExitComputed;
  r.doc = make_document("test", "verdict", config_json(cfg), payload);
  return r;
}

// ---- zeros ---------------------------------------------------------------

// Solve and classify a truncation, escalating precision until no root's
// classification is ambiguous (same ladder as the census: doubled digits,
// squared residual, three attempts).
ZeroReport solve_classified(const CoefficientSequence& seq,
                            std::size_t degree) {
  const Real tol_rel = Real("1e-8");
  unsigned digits = working_digits();
  Real residual = Real("1e-16");
  for (int attempt = 0;; ++attempt) {
    PrecisionScope scope(digits);
    ZeroReport rep = classify_real(
        roots_of_truncation(seq.truncate(degree), 1000, residual), tol_rel);
    if (rep.count_unresolved == 0) return rep;
    if (attempt == 2)
      throw UnresolvedError("zeros: " + std::to_string(rep.count_unresolved) +
                            " root classifications stayed ambiguous at " +
                            std::to_string(digits) + " digits");
    digits *= 2;
    residual = residual * residual;
  }
}

CommandResult run_census_table(const RunConfig& cfg, const std::string& command,
                               const CoefficientSequence& seq, std::size_t j_lo,
                               std::size_t j_hi, std::size_t degree) {
  if (degree == 0) {
    // Size the truncation from the largest disk: the census itself rejects
    // anything smaller with the same recommendation.
    const QuotientProfile prof = quotients(seq, j_hi + 1);
    degree =
        seq.recommended_degree(prof.p_n(1) * rho(prof, j_hi), Real("1e-12"));
  }
  const CensusTable t = nonreal_census(seq, j_lo, j_hi, degree);
  CommandResult r;
  r.doc = make_document(command, "census", config_json(cfg), to_json(t));
  r.csv = to_csv(t);
  return r;
}

CommandResult run_zeros(const RunConfig& cfg, const std::string& function_json,
                        std::size_t degree, const std::string& disks_spec,
                        bool census, const std::string& radius_spec) {
  const CoefficientSequence seq = parse_function(function_json);

  if (census) {
    const auto [j_lo, j_hi] =
        disks_spec.empty() ? std::pair<std::size_t, std::size_t>(4, 10)
                           : parse_index_range(disks_spec, "--disks");
    return run_census_table(cfg, "zeros", seq, j_lo, j_hi, degree);
  }

  const ZeroReport rep = solve_classified(seq, degree);

  Json payload;
  payload["function"] = seq.describe();
  payload["degree"] = degree;
  const Json body = to_json(rep);
  for (const auto& item : body.items()) payload[item.key()] = item.value();

  Json disks = Json::array();
  if (!disks_spec.empty()) {
    const auto [j_lo, j_hi] = parse_index_range(disks_spec, "--disks");
    if (j_lo < 2)
      throw UsageError("--disks: the separation radii start at j = 2");
    const QuotientProfile prof = quotients(seq, j_hi + 1);
    for (std::size_t j = j_lo; j <= j_hi; ++j) {
      const Real radius = prof.p_n(1) * rho(prof, j);
      disks.push_back(disk_count_json(count_zeros_disk(seq, radius), j, radius));
    }
  }
  if (!radius_spec.empty()) {
    const Real radius = parse_real(radius_spec, "--radius");
    disks.push_back(
        disk_count_json(count_zeros_disk(seq, radius), std::nullopt, radius));
  }
  payload["disk_counts"] = disks;

  CommandResult r;
  r.doc = make_document("zeros", "zeros", config_json(cfg), payload);
  return r;
}

// ---- constants -------------------------------------------------------------

CommandResult run_constants_qinf(const RunConfig& cfg,
                                 const std::string& tol_text) {
  const Real tol = parse_real(tol_text, "--tol");
  const BisectionResult b = q_infinity(tol);
  CommandResult r;
  r.doc = make_document("constants q-inf", "bisection", config_json(cfg),
                        to_json(b, "q_infinity"));
  return r;
}

CommandResult run_constants_cn(const RunConfig& cfg, const std::string& n_spec,
                               const std::string& tol_text) {
  const Real tol = parse_real(tol_text, "--tol");
  const auto [n_lo, n_hi] = parse_index_range(n_spec, "--n");

  // The gap column needs the limit at the same tolerance.
  const BisectionResult qi = q_infinity(tol);

  std::vector<SectionConstantRow> rows;
  Json jrows = Json::array();
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    const BisectionResult b = section_constant(n, tol);
    SectionConstantRow row;
    row.n = n;
    row.c_n = b.value;
    row.gap_to_qinf = b.value - qi.value;
    rows.push_back(row);
    Json e;
    e["n"] = n;
    e["c_n"] = json_number(row.c_n);
    e["gap_to_qinf"] = json_number(row.gap_to_qinf);
    jrows.push_back(e);
  }

  Json payload;
  payload["tolerance"] = json_number(tol);
  payload["q_infinity"] = json_number(qi.value);
  payload["rows"] = jrows;

  CommandResult r;
  r.doc = make_document("constants c-n", "c-n-table", config_json(cfg), payload);
  r.csv = to_csv(rows);
  return r;
}

CommandResult run_constants_interleaving(const RunConfig& cfg,
                                         std::size_t n_max,
                                         const std::string& tol_text) {
  const Real tol = parse_real(tol_text, "--tol");
  const std::vector<InequalityReport> reports = verify_c_interleaving(n_max, tol);

  Json arr = Json::array();
  for (const InequalityReport& rep : reports) arr.push_back(to_json(rep));
  Json payload;
  payload["n_max"] = n_max;
  payload["tolerance"] = json_number(tol);
  payload["reports"] = arr;

  CommandResult r;
  r.doc = make_document("constants interleaving", "interleaving",
                        config_json(cfg), payload);
  r.csv = to_csv(reports);
  return r;
}

// ---- verify-inequalities ---------------------------------------------------

InequalityReport root_bound_check(const std::string& poly_id,
                                  const std::string& bound_text) {
  const std::optional<Real> root = largest_real_root(poly_id);
  if (!root)
    throw SolverError("verify-inequalities: " + poly_id +
                      " unexpectedly has no real root");
  InequalityReport r;
  r.name = bound_text + " > largest_real_root(" + poly_id + ")";
  r.lhs = Real(bound_text);
  r.rhs = *root;
  r.margin = r.lhs - r.rhs;
  r.holds = margin_holds(r.lhs, r.rhs, r.margin);
  r.note = "largest real root isolated to width 1e-10 by exact sign counts";
  return r;
}

InequalityReport quartic_positive_check() {
  const std::optional<Real> root = largest_real_root("quartic_g");
  // The derivative 2y^2(2y - 3) turns once, at y = 3/2, where the quartic
  // takes its minimum 5/16 (both exact in binary).
  const Real y = Real(3) / 2;
  const Real min_value = (y - 2) * y * y * y + 2;
  InequalityReport r;
  r.name = "quartic_g > 0 on R";
  r.point = {{"y", y}};
  r.lhs = min_value;
  r.rhs = Real(0);
  r.margin = min_value;
  r.holds = !root.has_value() && min_value > 0;
  r.note = root.has_value()
               ? "unexpected real root found"
               : "no real root by exact sign counts; minimum 5/16 at y = 3/2";
  return r;
}

CommandResult run_verify_inequalities(const RunConfig& cfg,
                                      const std::string& family_json,
                                      const std::string& j_range) {
  std::vector<InequalityReport> checks;
  Json payload;

  if (family_json.empty()) {
    // The fixed checkpoints: the named root bounds and the three quotient
    // inequalities at the all-4 reference point.
    checks.push_back(root_bound_check("deg11", "1.47"));
    checks.push_back(root_bound_check("quintic_A", "1.73051"));
    checks.push_back(root_bound_check("quintic_B", "1.8521"));
    checks.push_back(quartic_positive_check());
    checks.push_back(check_estqq(std::vector<Real>(7, Real(4))));
    checks.push_back(check_nu_k(std::vector<Real>(5, Real(4))));
    checks.push_back(check_psi_positive(Real(4), Real(4)));
    payload["suite"] = "fixed checkpoints";
  } else {
    const CoefficientSequence seq = parse_function(family_json);
    const auto [j_lo, j_hi] = parse_index_range(j_range, "--j-range");
    if (j_lo < 2)
      throw UsageError("--j-range: quotient windows start at j = 2");
    // The widest window (seven points) reaches q_(j+4).
    const QuotientProfile prof = quotients(seq, j_hi + 4);
    for (std::size_t j = j_lo; j <= j_hi; ++j) {
      InequalityReport psi = check_psi_positive(prof.q_n(j), prof.q_n(j + 1));
      psi.name += "[j=" + std::to_string(j) + "]";
      checks.push_back(std::move(psi));
      if (j >= 3) {
        InequalityReport nu = check_nu_k({prof.q_n(j - 1), prof.q_n(j),
                                          prof.q_n(j + 1), prof.q_n(j + 2),
                                          prof.q_n(j + 3)});
        nu.name += "[k=" + std::to_string(j) + "]";
        checks.push_back(std::move(nu));
      }
      if (j >= 4) {
        InequalityReport est = check_estqq(
            {prof.q_n(j - 2), prof.q_n(j - 1), prof.q_n(j), prof.q_n(j + 1),
             prof.q_n(j + 2), prof.q_n(j + 3), prof.q_n(j + 4)});
        est.name += "[j=" + std::to_string(j) + "]";
        checks.push_back(std::move(est));
      }
    }
    payload["suite"] = "family sweep";
    payload["function"] = seq.describe();
    Json range;
    range["lo"] = j_lo;
    range["hi"] = j_hi;
    payload["j_range"] = range;
  }

  Json arr = Json::array();
  for (const InequalityReport& rep : checks) arr.push_back(to_json(rep));
  payload["checks"] = arr;

  CommandResult r;
  r.doc = make_document("verify-inequalities", "inequalities", config_json(cfg),
                        payload);
  r.csv = to_csv(checks);
  return r;
}

// ---- census ----------------------------------------------------------------

CommandResult run_census(const RunConfig& cfg, const std::string& function_json,
                         const std::string& j_range, std::size_t degree) {
  const CoefficientSequence seq = parse_function(function_json);
  const auto [j_lo, j_hi] = parse_index_range(j_range, "--j-range");
  return run_census_table(cfg, "census", seq, j_lo, j_hi, degree);
}

// ---- output ----------------------------------------------------------------

int finish(const CommandResult& r, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == OutputFormat::Csv) {
    if (!r.csv)
      throw UsageError(
          "--format csv: this report has no tabular form (csv covers census "
          "tables, c-n tables, interleaving, and inequality lists)");
    if (!cfg.out_path.empty()) {
      std::ofstream os(cfg.out_path, std::ios::binary);
      if (!os)
        throw UsageError("--out: cannot open '" + cfg.out_path +
                         "' for writing");
      os << *r.csv;
      if (!os.flush())
        throw UsageError("--out: write to '" + cfg.out_path + "' failed");
    } else {
      out << *r.csv;
    }
    return r.exit;
  }
  if (!cfg.out_path.empty())
    throw UsageError(
        "--out: only CSV output writes to a file; redirect stdout for JSON");
  validate_report(r.doc);
  if (cfg.format == OutputFormat::Pretty)
    out << render_pretty(r.doc);
  else
    out << r.doc.dump() << "\n";
  return r.exit;
}

int emit_error(std::ostream& out, const RunConfig& cfg,
               const std::string& command, const char* outcome,
               const std::string& message, int code) {
  Json payload;
  payload["outcome"] = outcome;
  payload["error"] = message;
  const Json doc = make_document(command, "error", config_json(cfg), payload);
  if (cfg.format == OutputFormat::Pretty)
    out << render_pretty(doc);
  else
    out << doc.dump() << "\n";
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Certified membership tests, zero counts, and boundary constants for "
      "entire series with positive coefficients",
      "lp-certify"};
  app.require_subcommand(1);

  // Output options live on the root and are reachable after any subcommand
  // (every subcommand falls through).
  std::string format_name = "json";
  bool csv_flag = false;
  std::string out_path;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_flag("--csv", csv_flag, "Shorthand for --format csv");
  app.add_option("--out", out_path, "Write CSV to this file instead of stdout");

  CLI::App* test =
      app.add_subcommand("test", "Run a membership criterion or necessary "
                                 "condition against one function");
  test->fallthrough();
  std::string t_criterion;
  std::string t_function;
  std::size_t t_n_max = 200;
  std::size_t t_scan_nodes = 512;
  test->add_option("--criterion", t_criterion, "Which test to run")
      ->required()
      ->check(CLI::IsMember({"hutchinson", "lemma12", "theoremD", "mthm1"}));
  test->add_option("--function", t_function, "Function descriptor (JSON)")
      ->required();
  test->add_option("--n-max", t_n_max,
                   "Quotient indices checked before the tail rule takes over");
  test->add_option("--scan-nodes", t_scan_nodes,
                   "Dense nodes for the sign-witness scan");

  CLI::App* zeros = app.add_subcommand(
      "zeros", "Solve a truncation's roots; count zeros in disks by winding "
               "number");
  zeros->fallthrough();
  std::string z_function;
  std::size_t z_degree = 0;
  std::string z_disks;
  bool z_census = false;
  std::string z_radius;
  zeros->add_option("--function", z_function, "Function descriptor (JSON)")
      ->required();
  zeros->add_option("--degree", z_degree, "Truncation degree")->required();
  zeros->add_option("--disks", z_disks,
                    "Separation-disk indices j1..j2 for winding counts");
  zeros->add_flag("--census", z_census,
                  "Run the nonreal census over --disks (default 4..10)");
  zeros->add_option("--radius", z_radius,
                    "Count zeros inside one explicit radius");

  CLI::App* constants = app.add_subcommand(
      "constants", "Boundary constants of the constant-quotient family");
  constants->fallthrough();
  constants->require_subcommand(1);
  CLI::App* qinf = constants->add_subcommand(
      "q-inf", "The membership boundary, by bisection");
  qinf->fallthrough();
  std::string q_tol = "1e-6";
  qinf->add_option("--tol", q_tol, "Bracket width the bisection stops at");
  CLI::App* cn = constants->add_subcommand(
      "c-n", "Section constants c_n with gaps to the limit");
  cn->fallthrough();
  std::string c_n_spec;
  std::string c_tol = "1e-8";
  cn->add_option("--n", c_n_spec,
                 "Section degree: one value (7) or a range (2..12)")
      ->required();
  cn->add_option("--tol", c_tol, "Bracket width the bisection stops at");
  CLI::App* interleaving = constants->add_subcommand(
      "interleaving", "Adjacent comparisons across the c_n chain");
  interleaving->fallthrough();
  std::size_t i_n_max = 9;
  std::string i_tol = "1e-12";
  interleaving->add_option("--n-max", i_n_max, "Largest section degree");
  interleaving->add_option("--tol", i_tol,
                           "Bracket width the bisections stop at");

  CLI::App* verify = app.add_subcommand(
      "verify-inequalities",
      "Check the explicit inequalities and root bounds behind the disk "
      "counts");
  verify->fallthrough();
  std::string v_family;
  std::string v_j_range = "4..10";
  verify->add_option("--family", v_family,
                     "Function descriptor to sweep (fixed checkpoint suite "
                     "when absent)");
  verify->add_option("--j-range", v_j_range, "Window indices j1..j2 to sweep");

  CLI::App* census = app.add_subcommand(
      "census", "Nonreal-zero census over the separation disks");
  census->fallthrough();
  std::string s_function;
  std::string s_j_range = "4..10";
  std::size_t s_degree = 0;
  census->add_option("--function", s_function, "Function descriptor (JSON)")
      ->required();
  census->add_option("--j-range", s_j_range, "Disk indices j1..j2");
  census->add_option("--degree", s_degree,
                     "Truncation degree (omit to size from the largest disk)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* scope = &app;
    while (!scope->get_subcommands().empty())
      scope = scope->get_subcommands().front();
    out << scope->help();
    return kExitComputed;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitComputed;
  } catch (const CLI::Error& e) {
    err << "lp-certify: " << e.what() << "\n"
        << "run 'lp-certify --help' for usage\n";
    return kExitUsage;
  }

  RunConfig cfg;
  cfg.digits = initial_digits();
  if (csv_flag) format_name = "csv";
  cfg.format = format_name == "csv"      ? OutputFormat::Csv
               : format_name == "pretty" ? OutputFormat::Pretty
                                         : OutputFormat::Json;
  cfg.out_path = out_path;
  PrecisionScope scope(cfg.digits);

  std::string command;
  if (app.got_subcommand(test)) command = "test";
  if (app.got_subcommand(zeros)) command = "zeros";
  if (app.got_subcommand(constants))
    command = constants->got_subcommand(qinf) ? "constants q-inf"
              : constants->got_subcommand(cn) ? "constants c-n"
                                              : "constants interleaving";
  if (app.got_subcommand(verify)) command = "verify-inequalities";
  if (app.got_subcommand(census)) command = "census";

  try {
    CommandResult r;
    if (app.got_subcommand(test)) {
      r = run_test(cfg, t_criterion, t_function, t_n_max, t_scan_nodes);
    } else if (app.got_subcommand(zeros)) {
      r = run_zeros(cfg, z_function, z_degree, z_disks, z_census, z_radius);
    } else if (app.got_subcommand(constants)) {
      if (constants->got_subcommand(qinf))
        r = run_constants_qinf(cfg, q_tol);
      else if (constants->got_subcommand(cn))
        r = run_constants_cn(cfg, c_n_spec, c_tol);
      else
        r = run_constants_interleaving(cfg, i_n_max, i_tol);
    } else if (app.got_subcommand(verify)) {
      r = run_verify_inequalities(cfg, v_family, v_j_range);
    } else {
      r = run_census(cfg, s_function, s_j_range, s_degree);
    }
    return finish(r, cfg, out);
  } catch (const UsageError& e) {
    err << "lp-certify: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    return emit_error(out, cfg, command, "HYPOTHESES_NOT_MET", e.what(),
                      kExitHypotheses);
  } catch (const RangeError& e) {
    return emit_error(out, cfg, command, "HYPOTHESES_NOT_MET", e.what(),
                      kExitHypotheses);
  } catch (const Error& e) {
    // UnresolvedError, SolverError, ConvergenceError, ContourError: the
    // computation could not certify an answer within its budgets.
    return emit_error(out, cfg, command, "UNRESOLVED", e.what(),
                      kExitUnresolved);
  }
}

}  // namespace lpcert
