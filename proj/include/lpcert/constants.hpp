#ifndef LPCERT_CONSTANTS_HPP
#define LPCERT_CONSTANTS_HPP

/// Named constants of the partial theta family and the explicit
/// inequalities behind the disk-count machinery.
///
/// The family g(z) = sum_k z^k s^(-k(k-1)/2) ... here everything is
/// phrased through the partial theta function g_a(z) = sum_k z^k a^(-k^2),
/// whose quotients are constant: q_n = a^2.  Two families of constants
/// matter:
///
///   q_infinity -- the smallest a^2 for which g_a attains a non-positive
///     value on (-a^3, -a), equivalently the membership boundary for the
///     whole series (approx. 3.23363666);
///   c_n        -- the same boundary for the degree-n Taylor section.
///
/// The even sections decrease to the limit and the odd sections increase
/// to it, interleaving as c_2 > c_4 > ... > q_infinity > ... > c_5 > c_3.
///
/// The remaining operations certify the handful of explicit inequalities
/// and polynomial root bounds that the disk-count arguments rest on; all
/// of them are one-shot checks at a named parameter point.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpcert/real.hpp"

namespace lpcert {

/// Outcome of a boolean bisection.  The predicate provably differs at the
/// two ends of [lo, hi], hi - lo <= tolerance, and value is the midpoint.
struct BisectionResult {
  Real value;
  Real lo;
  Real hi;
  Real tolerance;
  std::size_t evaluations = 0;  ///< predicate evaluations consumed
  unsigned digits_used = 0;     ///< widest precision any predicate needed
};

/// One checked inequality at a named parameter point.
/// margin = lhs - rhs; holds <=> margin >= -1e-12 * max(|lhs|, |rhs|, 1).
struct InequalityReport {
  std::string name;
  std::vector<std::pair<std::string, Real>> point;  ///< named parameters
  Real lhs;
  Real rhs;
  Real margin;
  bool holds = false;
  std::string note;  ///< e.g. which proof branch applies
};

/// The regime floor 2 * 2^(1/3) (about 2.5198) that every disk-count
/// precondition compares quotients against.
Real quotient_regime_floor();

/// The membership boundary q_infinity for the partial theta family, by
/// bisection on a^2 in [3, 4].  The predicate is "g_a attains a certified
/// non-positive value on (-a^3, -a)" (dense geometric scan plus local
/// refinement): true at 4, false at 3.  tol must lie in (0, 1e-3].
/// Throws SolverError if the predicate fails to separate the bracket.
BisectionResult q_infinity(const Real& tol);

/// The section constant c_n: the smallest a^2 for which the degree-n
/// Taylor section of g_a attains a non-positive value on (-a^3, -a).
/// Bisection on [2.5, 4.5]; requires n >= 2.  c_2 = 4 and c_3 = 3 exactly.
BisectionResult section_constant(std::size_t n, const Real& tol);

/// The interleaving c_2 > c_4 > ... > q_infinity > ... > c_5 > c_3, as a
/// list of adjacent comparisons (each an InequalityReport whose margin is
/// the gap).  Requires n_max >= 5; constants are computed to tol.
std::vector<InequalityReport> verify_c_interleaving(std::size_t n_max,
                                                    const Real& tol);

/// Largest real root of one of the named proof polynomials, isolated by
/// exact rational sign-change bracketing down the derivative ladder and
/// bisected to width 1e-10.  Returns nothing when the polynomial provably
/// has no real root (the certified outcome for quartic_g).
///
///   deg11     :  b^11 - 2b^10 + 2b^7 - b^4 + 2b^3 - 2b^2 - 2
///   quintic_A :  t^5 - 2t^4 + 1.525 t - 2/9
///   quintic_B :  t^5 - 2t^4 + t - 1/9
///   quartic_g :  y^4 - 2y^3 + 2          (no real root; min 5/16 at 3/2)
std::optional<Real> largest_real_root(const std::string& poly_id);

/// The seven-point quotient inequality that drives the disk-count regime:
/// with window = (q_{j-2}, ..., q_{j+4}), checks
///
///   q_{j-1} q_j sqrt(q_{j+1}) (2 - 2 q_j sqrt(q_{j+1}) + q_j q_{j+1})
///     >  1 / (1 - 1/(q_{j-2} q_{j-1} q_j sqrt(q_{j+1})))
///      + (q_{j-1} q_j^2)/(q_{j+2}^2 q_{j+3})
///          / (1 - 1/(sqrt(q_{j+1}) q_{j+2} q_{j+3} q_{j+4}))
///      + q_{j-1} q_j sqrt(q_{j+1}) (1 - q_j / q_{j+2}).
///
/// Requires all window values >= 2*2^(1/3) and non-decreasing.  Sweeping j
/// over a family's quotients locates the first disk index from which the
/// counts are reliable.
InequalityReport check_estqq(const std::vector<Real>& window);

/// The five-point alternation inequality nu_k >= 0: with
/// window = (q_{k-1}, ..., q_{k+3}),
///
///   nu_k = -1 + q_{k-1} q_k sqrt(q_{k+1}) - 2 q_{k-1} q_k^2 q_{k+1}
///        + q_{k-1} q_k^2 q_{k+1} sqrt(q_{k+1})
///        + q_{k-1} q_k^2 sqrt(q_{k+1}) / q_{k+2}
///        - q_{k-1} q_k^2 / (q_{k+2}^2 q_{k+3}).
///
/// Requires the window non-decreasing with q_{k-1} >= 3.  The note names
/// which of the three proof branches applies: q_{k+1} >= 4; or
/// q_{k+1} in [3.4303, 4) with q_{k+2} >= 4; or q_k / q_{k+2} >= 0.525.
InequalityReport check_nu_k(const std::vector<Real>& window);

/// Positivity of the circle parabola psi(t) = 4t^2 - 2ct + (d - 2) on
/// [-1, 1], where c = q_j sqrt(q_{j+1}) and d = q_j q_{j+1}: verifies the
/// vertex c/4 >= 1 (so the minimum over the interval sits at t = 1) and
/// reports the minimum 2 - 2c + d.  Requires both arguments >= 2*2^(1/3);
/// the minimum can still be negative for strongly descending pairs, which
/// the report shows rather than hides.
InequalityReport check_psi_positive(const Real& q_j, const Real& q_j1);

}  // namespace lpcert

#endif
