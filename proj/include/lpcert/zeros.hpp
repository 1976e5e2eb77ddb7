#pragma once

/// Zero location and counting for series with positive coefficients.
///
/// For a normalized series 1 + z + z^2/q_2 + ... with nondecreasing
/// quotients q_n >= 2*2^(1/3), the radii
///
///   rho_j = q_2 q_3 ... q_j * sqrt(q_(j+1))        (j >= 2)
///
/// separate consecutive zero moduli: the open disk |z| < rho_j contains
/// exactly j zeros, counted with multiplicity.  This header provides
///   - rho_j itself (log-domain product over a quotient profile),
///   - a simultaneous-iteration root solver for truncations,
///   - real/nonreal classification with certified uncertainty radii,
///   - argument-principle zero counts on circles |z| = r,
///   - the alternating-sign test (-1)^k f(-rho_k) >= 0,
///   - the companion quartic's unit-disk count, and
///   - a census comparing winding counts against certified-real
///     truncation roots, disk by disk.
///
/// All quantities that feed a claim carry explicit error bounds; any
/// decision that cannot be certified at the current precision escalates
/// or reports itself unresolved rather than guessing.

#include <cstddef>
#include <string>
#include <vector>

#include "lpcert/complex.hpp"
#include "lpcert/criteria.hpp"
#include "lpcert/real.hpp"
#include "lpcert/series.hpp"

namespace lpcert {

/// How a root estimate relates to the real axis.
enum class RootClass {
  Unclassified,  ///< solver output not yet run through classify_real
  RealNegative,
  RealPositive,
  NonrealPair,   ///< member of a conjugate pair (see pair_index)
  Unresolved,    ///< uncertainty radius straddles the decision boundary
};

/// One root of a truncation, with a certified uncertainty radius.
struct RootEstimate {
  Complex z;          ///< location in the original variable
  Real uncertainty;   ///< residual-based radius |P(z)| / |P'(z)|
  RootClass cls = RootClass::Unclassified;
  bool simple = true;            ///< nearest other root > 2x uncertainty
  int pair_index = -1;           ///< conjugate partner, -1 if none
};

/// Zero count on one circle, from adaptive phase tracking.
struct DiskCount {
  long count = 0;      ///< rounded winding number
  Real winding;        ///< raw winding before rounding
  Real min_modulus;    ///< smallest |f| seen on the contour
  std::size_t samples = 0;
  unsigned digits_used = 0;
};

/// Roots of one truncation plus any per-disk counts attached later.
struct ZeroReport {
  std::vector<RootEstimate> roots;   ///< size == degree of the truncation
  std::size_t zero_multiplicity = 0; ///< removed z^m factor, roots at 0
  std::size_t count_real = 0;
  std::size_t count_nonreal = 0;
  std::size_t count_unresolved = 0;
  std::vector<DiskCount> disk_counts;
  std::string source;                ///< which truncation was solved
  unsigned digits_used = 0;
  std::size_t sweeps = 0;            ///< solver iterations consumed
};

/// Contour-sampling controls for the argument-principle counters.
struct ContourPolicy {
  std::size_t initial_samples = 64;
  std::size_t max_samples = 65536;   ///< refinement budget per contour
  Real rel_tol = Real("1e-12");      ///< per-sample evaluation tolerance
  Real modulus_factor = Real(10);    ///< require |f| > factor * bound
  Real integrality_tol = Real("1e-6");
  /// A phase jump that survives subdivision down to this fraction of the
  /// full turn pins a zero onto the contour; refine no further.
  Real min_relative_step = Real("1e-28");
};

/// One entry of the alternating-sign test at z = -rho_k.
struct AlternationEntry {
  std::size_t k = 0;
  Real rho;        ///< normalized radius rho_k
  Real value;      ///< f(-p_1 rho_k), certified
  Real bound;
  int sign = 0;    ///< certified sign of value, 0 if unresolved
  bool certified = false;
  bool holds = false;  ///< sign equals (-1)^k
  unsigned digits_used = 0;
};

/// Gate plus per-k results of the alternating-sign test.
struct AlternationResult {
  bool hypotheses_ok = false;
  std::vector<HypothesisRecord> hypotheses;
  std::vector<AlternationEntry> entries;  ///< empty when the gate fails
};

/// One disk of the nonreal-zero census.
struct CensusRow {
  std::size_t j = 0;
  Real radius;                  ///< p_1 rho_j, in the function's variable
  long winding = 0;             ///< zeros of f inside, by argument principle
  std::size_t real_inside = 0;  ///< certified-real truncation roots inside
  std::size_t nonreal_inside = 0;
  long inferred_nonreal = 0;    ///< winding - real_inside
  bool counts_match = false;    ///< real + nonreal from truncation == winding
};

/// Census table over a range of disks, with a stabilization verdict.
struct CensusTable {
  std::vector<CensusRow> rows;
  bool stabilized = false;     ///< trailing rows agree on inferred_nonreal
  long stabilized_value = 0;
  std::size_t degree = 0;
  std::string function;
};

/// rho_j = q_2 ... q_j * sqrt(q_(j+1)), computed in the log domain.
/// Requires j >= 2 and quotients through q_(j+1) in the profile; strictly
/// between q_2...q_j and q_2...q_(j+1).  These radii live in the variable
/// of the normalized series 1 + z + ...; multiply by p_1 = a_0/a_1 to land
/// in the original variable.
/// Throws DomainError for j < 2 and RangeError past the profile's end.
Real rho(const QuotientProfile& profile, std::size_t j);

/// All roots of a truncation, via simultaneous Aberth iteration on the
/// balanced form b_k = c_k rho^k (closed forms for degree <= 2).  Starting
/// points are roots of unity rotated off the real axis; iteration stops
/// once every root has backward error |P(w)| <= residual_tol * sum|b_k w^k|.
/// Each reported root carries the Newton-step uncertainty |P| / |P'|.
/// Throws SolverError after max_sweeps sweeps, naming how many roots had
/// converged by then.
ZeroReport roots_of_truncation(const TruncationPolynomial& poly,
                               std::size_t max_sweeps = 1000,
                               const Real& residual_tol = Real("1e-12"));

/// Classify each root as real or member of a conjugate pair.  A root is
/// real when |Im z| <= tol_rel * |z| and no distinct conjugate partner lies
/// within the combined uncertainty radii; it is simple when the nearest
/// other root is more than twice its uncertainty away.  Roots whose
/// uncertainty straddles the tolerance boundary are flagged Unresolved --
/// re-solve at higher precision to settle them.
ZeroReport classify_real(ZeroReport report, const Real& tol_rel);

/// Zeros of the full series inside |z| < radius, by winding number of
/// theta -> f(radius e^(i theta)) with adaptive phase tracking (refine
/// until adjacent phase steps are below pi/2).  Requires radius > 0 and no
/// zero near the contour: every sample must satisfy |f| > modulus_factor
/// times its evaluation bound, else ContourError suggests perturbing the
/// radius.  The winding must land within integrality_tol of an integer.
DiskCount count_zeros_disk(const CoefficientSequence& seq, const Real& radius,
                           const ContourPolicy& policy = {});

/// Alternating-sign test: for k = 2..k_max, certify the sign of
/// f(-p_1 rho_k), which must equal (-1)^k when the series has nondecreasing
/// quotients with q_2 >= 3 and an admissible crossing of 4 (the same gate
/// as the main membership criterion).  When the gate fails, entries stay
/// empty and no claim is made.  A value whose bound straddles zero is
/// retried at doubled precision and reported uncertified if it never
/// separates.
AlternationResult sign_alternation_check(const CoefficientSequence& seq,
                                         std::size_t k_max);

/// Roots of 1 - c w + d w^2 - c w^3 + w^4 inside the unit disk, where
/// c = q_j sqrt(q_(j+1)) and d = q_j q_(j+1), counted by winding number.
/// On |w| = 1 the quartic reduces to the real parabola
/// 4t^2 - 2ct + (d - 2) in t = cos(theta), whose minimum over [-1, 1] sits
/// at t = 1 with value 2 - 2c + d; the routine verifies that minimum is
/// positive (so no root touches the circle) before counting.  Requires
/// 2*2^(1/3) <= q_j <= q_j1; the count is 2 throughout that regime.
/// A near-zero on the circle contradicts the positive minimum and raises
/// ContourError.
long quartic_unit_disk_count(const Real& q_j, const Real& q_j1);

/// Nonreal-zero census over the disks |z| < p_1 rho_j for j in
/// [j_lo, j_hi]: compares the winding count of the full series against the
/// certified-real roots of the degree-`degree` truncation inside each disk
/// and infers how many zeros are nonreal.  Requires nondecreasing quotients
/// >= 2*2^(1/3) through q_(j_hi + 1), and a truncation degree large enough
/// that the tail at the largest radius is below the evaluation tolerance
/// (DomainError otherwise, naming the recommended degree).  Unresolved root
/// classifications are retried at doubled precision; the table reports
/// whether the inferred count stabilized across the trailing rows.
CensusTable nonreal_census(const CoefficientSequence& seq, std::size_t j_lo,
                           std::size_t j_hi, std::size_t degree);

}  // namespace lpcert
