#include "lpcert/criteria.hpp"

#include <algorithm>
#include <string>

#include "lpcert/errors.hpp"

namespace lpcert {

namespace {

// Non-strict inequalities from the source theorems: boundary values count
// as satisfied, so every comparison gets a 1e-12 relative slack.
bool at_least(const Real& x, const Real& threshold) {
  return x >= threshold * (1 - Real("1e-12"));
}

std::pair<Real, Real> certified_value(const CoefficientSequence& seq,
                                      const Real& x, const Real& rel_tol) {
  EvalResult r = seq.evaluate(x, rel_tol);
  return {r.value, r.bound};
}

// Shared PASS/FAIL assembly for the two sign-witness criteria.
Verdict run_sign_scan(const CoefficientSequence& seq, const ScanPolicy& scan,
                      Verdict v) {
  const Real radius = seq.witness_interval_radius();
  ScanOutcome out = scan_for_nonpositive(
      [&seq](const Real& x, const Real& tol) {
        return certified_value(seq, x, tol);
      },
      -radius, Real(0), scan);
  v.digits_used = out.digits_used;
  v.evaluations = out.evaluations;
  if (out.witness_found) {
    v.outcome = Outcome::Pass;
    v.witness = SignWitness{out.best.x, out.best.value, out.best.bound,
                            out.at_left_endpoint};
  } else {
    v.outcome = Outcome::Fail;
    v.certified_min = out.best.value;
    v.certified_min_bound = out.best.bound;
    v.certified_min_location = out.best.x;
  }
  return v;
}

std::string fmt_q(const Real& q) { return fmt_sci(q, 17); }

}  // namespace

Verdict hutchinson_test(const CoefficientSequence& seq, std::size_t n_max) {
  if (n_max < 2) throw DomainError("hutchinson_test: n_max must be >= 2");
  Verdict v;
  v.criterion = "hutchinson";

  std::size_t n_hi = n_max;
  if (seq.finite() && n_max > seq.max_index()) {
    n_hi = seq.max_index();
    HypothesisRecord r;
    r.name = "quotient range";
    r.satisfied = true;
    r.note = "finite list: n_max clamped to " + std::to_string(n_hi);
    v.hypotheses.push_back(std::move(r));
  }
  if (n_hi < 2) {
    // Degree-one polynomial: no quotients exist, the condition is vacuous
    // (and the single zero is real and negative).
    v.outcome = Outcome::Pass;
    HypothesisRecord r;
    r.name = "q_n >= 4 for 2 <= n <= n_max";
    r.satisfied = true;
    r.note = "vacuous: no quotients available";
    v.hypotheses.push_back(std::move(r));
    return v;
  }

  Real min_q = seq.q(2);
  std::size_t min_idx = 2;
  for (std::size_t n = 3; n <= n_hi; ++n) {
    Real qn = seq.q(n);
    if (qn < min_q) {
      min_q = qn;
      min_idx = n;
    }
  }
  v.min_q = min_q;
  v.min_q_index = min_idx;
  if (at_least(min_q, Real(4))) {
    v.outcome = Outcome::Pass;
  } else {
    v.outcome = Outcome::Fail;
    v.violating_index = min_idx;
  }
  return v;
}

Verdict necessary_q2q3_test(const CoefficientSequence& seq) {
  Verdict v;
  v.criterion = "lemma12";
  const Real q2 = seq.q(2), q3 = seq.q(3);
  const Real value = q3 * (q2 - 4) + 3;
  v.lemma_value = value;
  v.min_q = q2 < q3 ? q2 : q3;
  v.min_q_index = q2 < q3 ? 2 : 3;
  if (value >= Real("-1e-12")) {
    v.outcome = Outcome::Pass;
  } else {
    v.outcome = Outcome::Fail;  // certifies non-membership
    v.violating_index = 3;
  }
  return v;
}

Verdict necessary_sign_test(const CoefficientSequence& seq,
                            const ScanPolicy& scan) {
  Verdict v;
  v.criterion = "theoremD";
  const Real q2 = seq.q(2), q3 = seq.q(3);
  HypothesisRecord gate;
  gate.name = "q_2 <= q_3";
  gate.satisfied = at_least(q3, q2);
  gate.measured = q3 - q2;
  gate.note = "q_2 = " + fmt_q(q2) + ", q_3 = " + fmt_q(q3);
  v.hypotheses.push_back(gate);
  if (!gate.satisfied) {
    v.outcome = Outcome::HypothesesNotMet;
    return v;
  }
  return run_sign_scan(seq, scan, std::move(v));
}

HypothesisCheck check_mthm1_hypotheses(const CoefficientSequence& seq,
                                       std::size_t n_check) {
  if (n_check < 2)
    throw DomainError("check_mthm1_hypotheses: n_check must be >= 2");
  HypothesisCheck hc;
  hc.ok = true;
  auto push = [&hc](std::string name, bool sat, std::optional<Real> measured,
                    std::string note) {
    HypothesisRecord r;
    r.name = std::move(name);
    r.satisfied = sat;
    r.measured = std::move(measured);
    r.note = std::move(note);
    hc.ok = hc.ok && sat;
    hc.records.push_back(std::move(r));
  };

  // q_2 >= 3.
  const Real q2 = seq.q(2);
  push("q_2 >= 3", at_least(q2, Real(3)), q2, "");

  // Explicit span to verify, and how the tail extends it to all n.
  std::size_t span_hi = 0;
  switch (seq.tail_rule()) {
    case TailRule::ConstantFrom:
      // The constant tail starts at tail_rule_index(); checking one index
      // past it covers the joint, and constancy covers the rest.
      span_hi = seq.tail_rule_index() + 1;
      break;
    case TailRule::IncreasingLimit:
      // Monotonicity holds by the family's closed form; the numeric check
      // below is a bounded sanity pass.
      span_hi = std::min<std::size_t>(n_check, 64);
      break;
    case TailRule::None:
      span_hi = seq.max_index() >= 1 ? seq.max_index() : 0;
      break;
  }

  bool monotone = true;
  std::size_t first_dip = 0;
  for (std::size_t n = 2; n + 1 <= span_hi; ++n) {
    if (!at_least(seq.q(n + 1), seq.q(n))) {
      monotone = false;
      first_dip = n + 1;
      break;
    }
  }
  {
    std::string note;
    switch (seq.tail_rule()) {
      case TailRule::ConstantFrom:
        note = "verified through n = " + std::to_string(span_hi) +
               "; constant q_n = " + fmt_q(seq.tail_rule_value()) +
               " for n >= " + std::to_string(seq.tail_rule_index());
        break;
      case TailRule::IncreasingLimit:
        note = "increasing toward " + fmt_q(seq.tail_rule_value()) +
               " by the family's closed form; spot-checked through n = " +
               std::to_string(span_hi);
        break;
      case TailRule::None:
        note = monotone ? "verified only on the finite list"
                        : "dip at n = " + std::to_string(first_dip);
        break;
    }
    if (!monotone && seq.tail_rule() != TailRule::None)
      note = "dip at n = " + std::to_string(first_dip);
    push("q_n nondecreasing for all n", monotone, std::nullopt, note);
  }

  if (seq.tail_rule() == TailRule::None) {
    push("tail rule", false, std::nullopt,
         "finite coefficient list: the hypotheses cannot be verified for "
         "all n");
    return hc;
  }

  // Locate the crossing j_0 with q_{j_0} < 4 <= q_{j_0+1}, if any.  Under
  // monotonicity there is at most one.
  std::optional<std::size_t> j0;
  if (at_least(q2, Real(4))) {
    push("crossing index j_0", true, std::nullopt,
         "none: q_2 >= 4 already");
  } else if (seq.tail_rule() == TailRule::ConstantFrom) {
    for (std::size_t n = 2; n <= seq.tail_rule_index(); ++n) {
      if (!at_least(seq.q(n), Real(4)) && at_least(seq.q(n + 1), Real(4))) {
        j0 = n;
        break;
      }
    }
    if (!j0)
      push("crossing index j_0", true, std::nullopt,
           "none: q_n stays below 4 (constant tail " +
               fmt_q(seq.tail_rule_value()) + ")");
  } else {  // IncreasingLimit
    // q_n < limit strictly, so the tolerance threshold is reachable only
    // when the limit lies strictly above it.
    if (seq.tail_rule_value() > 4 * (1 - Real("1e-12"))) {
      std::size_t n = 2;
      constexpr std::size_t kCrossingCap = 100000;
      while (n < kCrossingCap && !at_least(seq.q(n + 1), Real(4))) ++n;
      if (n >= kCrossingCap)
        throw SolverError("crossing search exceeded its index cap");
      if (!at_least(seq.q(n), Real(4))) j0 = n;
    } else {
      push("crossing index j_0", true, std::nullopt,
           "none: q_n increases toward " + fmt_q(seq.tail_rule_value()) +
               " and never reaches 4");
    }
  }

  if (j0) {
    hc.j0 = j0;
    const std::size_t k = *j0;
    const Real qj = seq.q(k), qj1 = seq.q(k + 1);
    if (k == 2) {
      bool sat = at_least(qj, Real("3.4303"));
      push("side condition at j_0 = 2: q_{j_0} >= 3.4303", sat, qj,
           "ratio branch unavailable: q_1 is undefined; q_3 = " + fmt_q(qj1));
    } else {
      const Real qm = seq.q(k - 1);
      const Real ratio = qm / qj1;
      const bool branch_ratio = at_least(ratio, Real("0.525"));
      const bool branch_q = at_least(qj, Real("3.4303"));
      push("side condition at j_0 = " + std::to_string(k) +
               ": q_{j_0-1}/q_{j_0+1} >= 0.525 or q_{j_0} >= 3.4303",
           branch_ratio || branch_q, ratio,
           "ratio = " + fmt_q(ratio) + ", q_{j_0} = " + fmt_q(qj));
    }
  }
  return hc;
}

Verdict mthm1_criterion(const CoefficientSequence& seq, std::size_t n_check,
                        const ScanPolicy& scan) {
  Verdict v;
  v.criterion = "mthm1";
  HypothesisCheck hc = check_mthm1_hypotheses(seq, n_check);
  v.hypotheses = std::move(hc.records);
  if (!hc.ok) {
    // An unmet side condition is never evidence of non-membership: the
    // criterion simply does not apply.
    v.outcome = Outcome::HypothesesNotMet;
    return v;
  }
  return run_sign_scan(seq, scan, std::move(v));
}

}  // namespace lpcert
