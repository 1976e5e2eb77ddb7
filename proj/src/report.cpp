#include "lpcert/report.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <utility>

#include "lpcert/errors.hpp"

namespace lpcert {

namespace {

Json opt_number(const std::optional<Real>& x) {
  return x ? json_number(*x) : Json(nullptr);
}

Json opt_index(const std::optional<std::size_t>& x) {
  return x ? Json(*x) : Json(nullptr);
}

std::string class_name(RootClass c) {
  switch (c) {
    case RootClass::Unclassified: return "unclassified";
    case RootClass::RealNegative: return "real-negative";
    case RootClass::RealPositive: return "real-positive";
    case RootClass::NonrealPair: return "nonreal-pair";
    case RootClass::Unresolved: return "unresolved";
  }
  return "unclassified";
}

// CSV cells: full-precision scientific for reals, bare digits for counts,
// quoted text for names (none of which contain quotes or commas today;
// quoting keeps the format stable if that changes).
std::string csv_real(const Real& x) { return fmt_sci(x, working_digits()); }

std::string csv_text(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_text_file(const std::string& content, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("emit_plot_data: cannot open '" + path + "' for writing");
  os << content;
  if (!os.flush()) throw Error("emit_plot_data: write to '" + path + "' failed");
}

}  // namespace

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::HypothesesNotMet: return "HYPOTHESES_NOT_MET";
  }
  return "HYPOTHESES_NOT_MET";
}

Json json_number(const Real& x) { return Json(to_double(x)); }

Json to_json(const HypothesisRecord& r) {
  Json j;
  j["name"] = r.name;
  j["satisfied"] = r.satisfied;
  j["measured"] = opt_number(r.measured);
  j["note"] = r.note;
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["criterion"] = v.criterion;
  j["outcome"] = outcome_name(v.outcome);
  j["hypotheses"] = Json::array();
  for (const HypothesisRecord& h : v.hypotheses) j["hypotheses"].push_back(to_json(h));
  if (v.witness) {
    Json w;
    w["z0"] = json_number(v.witness->z0);
    w["value"] = json_number(v.witness->value);
    w["bound"] = json_number(v.witness->bound);
    w["at_left_endpoint"] = v.witness->at_left_endpoint;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  if (v.certified_min) {
    Json m;
    m["value"] = json_number(*v.certified_min);
    m["bound"] = opt_number(v.certified_min_bound);
    m["location"] = opt_number(v.certified_min_location);
    j["certified_min"] = m;
  } else {
    j["certified_min"] = nullptr;
  }
  Json meas;
  meas["min_q"] = opt_number(v.min_q);
  meas["min_q_index"] = opt_index(v.min_q_index);
  meas["lemma_value"] = opt_number(v.lemma_value);
  meas["violating_index"] = opt_index(v.violating_index);
  j["measurements"] = meas;
  j["digits_used"] = v.digits_used;
  j["evaluations"] = v.evaluations;
  return j;
}

Json to_json(const ZeroReport& r) {
  Json j;
  j["zero_multiplicity"] = r.zero_multiplicity;
  j["count_real"] = r.count_real;
  j["count_nonreal"] = r.count_nonreal;
  j["count_unresolved"] = r.count_unresolved;
  j["roots"] = Json::array();
  for (const RootEstimate& root : r.roots) {
    Json e;
    e["re"] = json_number(root.z.re);
    e["im"] = json_number(root.z.im);
    e["uncertainty"] = json_number(root.uncertainty);
    e["class"] = class_name(root.cls);
    e["simple"] = root.simple;
    e["pair_index"] = root.pair_index;
    j["roots"].push_back(e);
  }
  j["source"] = r.source;
  j["digits_used"] = r.digits_used;
  j["sweeps"] = r.sweeps;
  return j;
}

Json disk_count_json(const DiskCount& d, std::optional<std::size_t> j,
                     const Real& radius) {
  Json e;
  e["j"] = opt_index(j);
  e["radius"] = json_number(radius);
  e["count"] = d.count;
  e["winding"] = json_number(d.winding);
  e["min_modulus"] = json_number(d.min_modulus);
  e["samples"] = d.samples;
  e["digits_used"] = d.digits_used;
  return e;
}

Json to_json(const CensusTable& t) {
  Json j;
  j["function"] = t.function;
  j["degree"] = t.degree;
  j["rows"] = Json::array();
  for (const CensusRow& r : t.rows) {
    Json e;
    e["j"] = r.j;
    e["rho_j"] = json_number(r.radius);
    e["winding"] = r.winding;
    e["real_inside"] = r.real_inside;
    e["nonreal_inside"] = r.nonreal_inside;
    e["inferred_nonreal"] = r.inferred_nonreal;
    e["counts_match"] = r.counts_match;
    j["rows"].push_back(e);
  }
  j["stabilized"] = t.stabilized;
  j["stabilized_value"] = t.stabilized_value;
  return j;
}

Json to_json(const BisectionResult& b, const std::string& name) {
  Json j;
  j["name"] = name;
  j["value"] = json_number(b.value);
  j["±"] = json_number(b.tolerance);
  j["lo"] = json_number(b.lo);
  j["hi"] = json_number(b.hi);
  j["tolerance"] = json_number(b.tolerance);
  j["evaluations"] = b.evaluations;
  j["digits_used"] = b.digits_used;
  return j;
}

Json to_json(const InequalityReport& r) {
  Json j;
  j["name"] = r.name;
  Json point = Json::object();
  for (const auto& [key, value] : r.point) point[key] = json_number(value);
  j["point"] = point;
  j["lhs"] = json_number(r.lhs);
  j["rhs"] = json_number(r.rhs);
  j["margin"] = json_number(r.margin);
  j["holds"] = r.holds;
  j["note"] = r.note;
  return j;
}

std::string to_csv(const CensusTable& t) {
  std::ostringstream os;
  os << "j,rho_j,winding,real_inside,nonreal_inside\n";
  for (const CensusRow& r : t.rows)
    os << r.j << ',' << csv_real(r.radius) << ',' << r.winding << ','
       << r.real_inside << ',' << r.nonreal_inside << '\n';
  return os.str();
}

std::string to_csv(const std::vector<SectionConstantRow>& rows) {
  std::ostringstream os;
  os << "n,c_n,gap_to_qinf\n";
  for (const SectionConstantRow& r : rows)
    os << r.n << ',' << csv_real(r.c_n) << ',' << csv_real(r.gap_to_qinf)
       << '\n';
  return os.str();
}

std::string to_csv(const std::vector<InequalityReport>& rows) {
  std::ostringstream os;
  os << "name,lhs,rhs,margin,holds\n";
  for (const InequalityReport& r : rows)
    os << csv_text(r.name) << ',' << csv_real(r.lhs) << ',' << csv_real(r.rhs)
       << ',' << csv_real(r.margin) << ',' << (r.holds ? "true" : "false")
       << '\n';
  return os.str();
}

void emit_plot_data(const CensusTable& t, const std::string& path) {
  write_text_file(to_csv(t), path);
}

void emit_plot_data(const std::vector<SectionConstantRow>& rows,
                    const std::string& path) {
  write_text_file(to_csv(rows), path);
}

void emit_plot_data(const std::vector<InequalityReport>& rows,
                    const std::string& path) {
  write_text_file(to_csv(rows), path);
}

namespace {

// ---- function descriptors ----------------------------------------------

[[noreturn]] void bad_field(const std::string& what) {
  throw UsageError("--function: " + what);
}

Real real_field(const Json& j, const std::string& key) {
  const Json& v = j.at(key);
  if (v.is_number()) return Real(v.get<double>());
  if (v.is_string()) {
    try {
      return Real(v.get<std::string>());
    } catch (const std::exception&) {
      bad_field("field \"" + key + "\" is not a decimal number");
    }
  }
  bad_field("field \"" + key + "\" must be a number or a decimal string");
}

std::vector<Real> real_array_field(const Json& j, const std::string& key) {
  const Json& v = j.at(key);
  if (!v.is_array() || v.empty())
    bad_field("field \"" + key + "\" must be a nonempty array");
  std::vector<Real> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Json& e = v[i];
    if (e.is_number()) {
      out.emplace_back(e.get<double>());
    } else if (e.is_string()) {
      try {
        out.emplace_back(e.get<std::string>());
      } catch (const std::exception&) {
        bad_field("field \"" + key + "\" entry " + std::to_string(i) +
                  " is not a decimal number");
      }
    } else {
      bad_field("field \"" + key + "\" entry " + std::to_string(i) +
                " must be a number or a decimal string");
    }
  }
  return out;
}

void check_keys(const Json& j, const std::string& family,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    if (item.key() == "family") continue;
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) known = true;
    if (!known)
      bad_field("unknown field \"" + item.key() + "\" for family \"" + family +
                "\"");
  }
  for (const char* k : allowed) {
    const std::string key(k);
    if (key == "a0" || key == "a1" || key == "tail") continue;  // optional
    if (!j.contains(k)) bad_field("missing field \"" + std::string(k) + "\"");
  }
}

}  // namespace

CoefficientSequence parse_function(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    bad_field(std::string("not valid JSON (") + e.what() + ")");
  }
  if (!j.is_object()) bad_field("expected a JSON object");
  if (!j.contains("family")) bad_field("missing field \"family\"");
  if (!j.at("family").is_string()) bad_field("field \"family\" must be a string");
  const std::string family = j.at("family").get<std::string>();

  try {
    if (family == "partial-theta") {
      check_keys(j, family, {"a2"});
      return CoefficientSequence::partial_theta(real_field(j, "a2"));
    }
    if (family == "q-kummer") {
      check_keys(j, family, {"a"});
      return CoefficientSequence::q_kummer(real_field(j, "a"));
    }
    if (family == "quotients") {
      check_keys(j, family, {"q", "a0", "a1", "tail"});
      if (j.contains("tail") && j.at("tail") != "repeat-last")
        bad_field(
            "field \"tail\": the only supported rule is \"repeat-last\"");
      const Real a0 = j.contains("a0") ? real_field(j, "a0") : Real(1);
      const Real a1 = j.contains("a1") ? real_field(j, "a1") : Real(1);
      return CoefficientSequence::quotient_specified(a0, a1,
                                                     real_array_field(j, "q"));
    }
    if (family == "explicit") {
      check_keys(j, family, {"coeffs"});
      return CoefficientSequence::explicit_list(real_array_field(j, "coeffs"));
    }
  } catch (const DomainError& e) {
    // A structurally sound descriptor the family still rejects (a2 <= 1,
    // nonpositive coefficient, ...) is unusable input, not a result.
    bad_field(e.what());
  }
  bad_field("unknown family \"" + family +
            "\" (expected partial-theta, q-kummer, quotients, explicit)");
}

Json make_document(const std::string& command, const std::string& kind,
                   const Json& config, const Json& payload) {
  Json doc;
  doc["schema"] = "lp-certify/1";
  doc["command"] = command;
  doc["kind"] = kind;
  doc["config"] = config;
  for (const auto& item : payload.items()) doc[item.key()] = item.value();
  return doc;
}

namespace {

// ---- structural validation ----------------------------------------------

[[noreturn]] void invalid(const std::string& what) {
  throw Error("report validation: " + what);
}

const Json& field(const Json& j, const std::string& key,
                  const std::string& where) {
  if (!j.contains(key)) invalid(where + ": missing \"" + key + "\"");
  return j.at(key);
}

void need_string(const Json& j, const std::string& key,
                 const std::string& where) {
  if (!field(j, key, where).is_string())
    invalid(where + ": \"" + key + "\" must be a string");
}

void need_number(const Json& j, const std::string& key,
                 const std::string& where) {
  if (!field(j, key, where).is_number())
    invalid(where + ": \"" + key + "\" must be a number");
}

void need_number_or_null(const Json& j, const std::string& key,
                         const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number() && !v.is_null())
    invalid(where + ": \"" + key + "\" must be a number or null");
}

void need_bool(const Json& j, const std::string& key,
               const std::string& where) {
  if (!field(j, key, where).is_boolean())
    invalid(where + ": \"" + key + "\" must be a boolean");
}

const Json& need_array(const Json& j, const std::string& key,
                       const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_array()) invalid(where + ": \"" + key + "\" must be an array");
  return v;
}

const Json& need_object(const Json& j, const std::string& key,
                        const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_object()) invalid(where + ": \"" + key + "\" must be an object");
  return v;
}

void validate_inequality(const Json& r, const std::string& where) {
  need_string(r, "name", where);
  need_object(r, "point", where);
  need_number(r, "lhs", where);
  need_number(r, "rhs", where);
  need_number(r, "margin", where);
  need_bool(r, "holds", where);
  need_string(r, "note", where);
}

void validate_outcome_string(const Json& doc, const std::string& where) {
  need_string(doc, "outcome", where);
  const std::string o = doc.at("outcome").get<std::string>();
  if (o != "PASS" && o != "FAIL" && o != "HYPOTHESES_NOT_MET" &&
      o != "UNRESOLVED")
    invalid(where + ": unknown outcome \"" + o + "\"");
}

}  // namespace

void validate_report(const Json& doc) {
  if (!doc.is_object()) invalid("document must be an object");
  need_string(doc, "schema", "document");
  if (doc.at("schema").get<std::string>() != "lp-certify/1")
    invalid("unknown schema \"" + doc.at("schema").get<std::string>() + "\"");
  need_string(doc, "command", "document");
  need_string(doc, "kind", "document");
  const Json& config = need_object(doc, "config", "document");
  need_number(config, "digits", "config");
  need_bool(config, "deterministic", "config");

  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "verdict") {
    need_string(doc, "criterion", kind);
    need_string(doc, "function", kind);
    validate_outcome_string(doc, kind);
    for (const Json& h : need_array(doc, "hypotheses", kind)) {
      need_string(h, "name", "hypothesis");
      need_bool(h, "satisfied", "hypothesis");
      need_number_or_null(h, "measured", "hypothesis");
    }
    const Json& w = field(doc, "witness", kind);
    if (!w.is_null()) {
      need_number(w, "z0", "witness");
      need_number(w, "value", "witness");
      need_number(w, "bound", "witness");
    }
    const Json& m = need_object(doc, "measurements", kind);
    need_number_or_null(m, "min_q", "measurements");
    need_number_or_null(m, "lemma_value", "measurements");
    need_number(doc, "digits_used", kind);
    need_number(doc, "evaluations", kind);
  } else if (kind == "zeros") {
    need_string(doc, "function", kind);
    need_number(doc, "degree", kind);
    need_number(doc, "count_real", kind);
    need_number(doc, "count_nonreal", kind);
    need_number(doc, "count_unresolved", kind);
    for (const Json& r : need_array(doc, "roots", kind)) {
      need_number(r, "re", "root");
      need_number(r, "im", "root");
      need_number(r, "uncertainty", "root");
      need_string(r, "class", "root");
      need_bool(r, "simple", "root");
    }
    for (const Json& d : need_array(doc, "disk_counts", kind)) {
      need_number_or_null(d, "j", "disk count");
      need_number(d, "radius", "disk count");
      need_number(d, "count", "disk count");
      need_number(d, "winding", "disk count");
    }
  } else if (kind == "census") {
    need_string(doc, "function", kind);
    need_number(doc, "degree", kind);
    for (const Json& r : need_array(doc, "rows", kind)) {
      need_number(r, "j", "census row");
      need_number(r, "rho_j", "census row");
      need_number(r, "winding", "census row");
      need_number(r, "real_inside", "census row");
      need_number(r, "nonreal_inside", "census row");
      need_number(r, "inferred_nonreal", "census row");
      need_bool(r, "counts_match", "census row");
    }
    need_bool(doc, "stabilized", kind);
    need_number(doc, "stabilized_value", kind);
  } else if (kind == "bisection") {
    need_string(doc, "name", kind);
    need_number(doc, "value", kind);
    need_number(doc, "±", kind);
    need_number(doc, "lo", kind);
    need_number(doc, "hi", kind);
    need_number(doc, "tolerance", kind);
    need_number(doc, "evaluations", kind);
    need_number(doc, "digits_used", kind);
  } else if (kind == "c-n-table") {
    need_number(doc, "tolerance", kind);
    need_number(doc, "q_infinity", kind);
    for (const Json& r : need_array(doc, "rows", kind)) {
      need_number(r, "n", "table row");
      need_number(r, "c_n", "table row");
      need_number(r, "gap_to_qinf", "table row");
    }
  } else if (kind == "interleaving") {
    need_number(doc, "n_max", kind);
    need_number(doc, "tolerance", kind);
    for (const Json& r : need_array(doc, "reports", kind))
      validate_inequality(r, "interleaving report");
  } else if (kind == "inequalities") {
    for (const Json& r : need_array(doc, "checks", kind))
      validate_inequality(r, "inequality check");
  } else if (kind == "error") {
    validate_outcome_string(doc, kind);
    need_string(doc, "error", kind);
  } else {
    invalid("unknown kind \"" + kind + "\"");
  }
}

namespace {

bool is_scalar(const Json& j) {
  return !j.is_object() && !j.is_array();
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void pretty_lines(const Json& j, int indent, std::string& out) {
  const std::string pad(2 * static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& item : j.items()) {
      if (is_scalar(item.value())) {
        out += pad + item.key() + ": " + scalar_text(item.value()) + "\n";
      } else if (item.value().empty()) {
        out += pad + item.key() + ": " +
               (item.value().is_array() ? "[]" : "{}") + "\n";
      } else {
        out += pad + item.key() + ":\n";
        pretty_lines(item.value(), indent + 1, out);
      }
    }
  } else if (j.is_array()) {
    for (const Json& e : j) {
      if (is_scalar(e)) {
        out += pad + "- " + scalar_text(e) + "\n";
      } else {
        out += pad + "-\n";
        pretty_lines(e, indent + 1, out);
      }
    }
  } else {
    out += pad + scalar_text(j) + "\n";
  }
}

}  // namespace

std::string render_pretty(const Json& doc) {
  std::string out;
  pretty_lines(doc, 0, out);
  return out;
}

}  // namespace lpcert
