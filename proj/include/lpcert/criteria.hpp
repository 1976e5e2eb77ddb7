#ifndef LPCERT_CRITERIA_HPP
#define LPCERT_CRITERIA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpcert/scan.hpp"
#include "lpcert/series.hpp"

namespace lpcert {

enum class Outcome { Pass, Fail, HypothesesNotMet };

/// One hypothesis of a cited theorem, with what was actually measured.
struct HypothesisRecord {
  std::string name;
  bool satisfied = false;
  std::optional<Real> measured;
  std::string note;  ///< e.g. how a tail rule extended a finite check
};

/// A certified sign witness: value + bound <= 0 at z0.
struct SignWitness {
  Real z0;
  Real value;
  Real bound;
  bool at_left_endpoint = false;  ///< z0 is exactly -a_1/a_2 (closed endpoint)
};

/// Result of one membership test or necessary condition.  PASS/FAIL are
/// only ever reported with all stated hypotheses satisfied; a failing side
/// condition yields HypothesesNotMet, never Fail.
struct Verdict {
  std::string criterion;
  Outcome outcome = Outcome::HypothesesNotMet;
  std::vector<HypothesisRecord> hypotheses;

  std::optional<SignWitness> witness;  ///< sign tests: PASS evidence

  /// Sign tests: FAIL evidence — the certified positive minimum over the
  /// scanned points and where it sits.
  std::optional<Real> certified_min;
  std::optional<Real> certified_min_bound;
  std::optional<Real> certified_min_location;

  std::optional<Real> min_q;                  ///< quotient tests: smallest q_n
  std::optional<std::size_t> min_q_index;
  std::optional<Real> lemma_value;            ///< q_3(q_2 - 4) + 3
  std::optional<std::size_t> violating_index; ///< first n breaking a bound

  unsigned digits_used = 0;
  std::size_t evaluations = 0;
};

/// Quotient lower bound test: PASS iff q_n >= 4 (rel. tol 1e-12) for all
/// 2 <= n <= n_max.  Guarantees all zeros real, simple and negative, and
/// every consecutive-term section real-rooted.  For finite lists the range
/// is clamped to the available quotients (recorded in the report).
Verdict hutchinson_test(const CoefficientSequence& seq, std::size_t n_max);

/// Necessary condition q_3(q_2 - 4) + 3 >= 0 (tol 1e-12 absolute): FAIL
/// certifies the function is not in the class.
Verdict necessary_q2q3_test(const CoefficientSequence& seq);

/// Necessary sign condition under q_2 <= q_3: a member must take a
/// non-positive value on [-a_1/a_2, 0].  PASS = certified witness found;
/// FAIL = certified positive minimum over the scan, so not a member.
Verdict necessary_sign_test(const CoefficientSequence& seq,
                            const ScanPolicy& scan = {});

/// Hypothesis check for the main criterion: 3 <= q_2 <= q_3 <= ... for all
/// n (finite measurements extended by the family's tail rule), plus the
/// crossing side condition at the unique j_0 with q_{j_0} < 4 <= q_{j_0+1}:
/// q_{j_0-1}/q_{j_0+1} >= 0.525 or q_{j_0} >= 3.4303.
struct HypothesisCheck {
  bool ok = false;
  std::vector<HypothesisRecord> records;
  std::optional<std::size_t> j0;  ///< crossing index, when one exists
};
HypothesisCheck check_mthm1_hypotheses(const CoefficientSequence& seq,
                                       std::size_t n_check = 200);

/// The main decision procedure: under the hypotheses above, membership is
/// equivalent to a sign witness on [-a_1/a_2, 0].  PASS = member, FAIL =
/// not a member, HypothesesNotMet = no claim (side conditions may be
/// inessential; the paper leaves that open).
Verdict mthm1_criterion(const CoefficientSequence& seq,
                        std::size_t n_check = 200,
                        const ScanPolicy& scan = {});

}  // namespace lpcert

#endif
