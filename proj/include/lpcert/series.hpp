#ifndef LPCERT_SERIES_HPP
#define LPCERT_SERIES_HPP

#include <cstddef>
#include <limits>
#include <mutex>
#include <string>
#include <vector>

#include "lpcert/complex.hpp"
#include "lpcert/errors.hpp"
#include "lpcert/real.hpp"

namespace lpcert {

enum class Family { PartialTheta, QKummer, QuotientSpecified, ExplicitList };

/// How the quotient sequence q_n behaves past the explicitly known range.
/// Criteria use this to turn a finite check into a statement about all n.
enum class TailRule {
  ConstantFrom,     ///< q_n is one constant for n >= tail_rule_index()
  IncreasingLimit,  ///< q_n strictly increases toward tail_rule_value()
  None              ///< finite coefficient list; no tail statement possible
};

/// Certified series evaluation at a real point: value plus a rigorous
/// absolute error bound (truncation tail + accumulated rounding).
struct EvalResult {
  Real value;
  Real bound;      ///< certified |value - f(z)| <= bound
  Real tail;       ///< truncation part of the bound
  Real max_term;   ///< largest term magnitude |a_k z^k| encountered
  std::size_t terms = 0;     ///< number of terms summed (N + 1)
  unsigned digits_used = 0;  ///< working digits after internal escalation
};

/// Same for a complex point.
struct EvalResultC {
  Complex value;
  Real bound;
  Real tail;
  Real max_term;
  std::size_t terms = 0;
  unsigned digits_used = 0;
};

/// Quotient arrays p_n = a_{n-1}/a_n (n >= 1) and
/// q_n = p_n/p_{n-1} = a_{n-1}^2/(a_{n-2} a_n) (n >= 2).
struct QuotientProfile {
  std::vector<Real> p;  ///< p[i] holds p_{i+1}, for n = 1..n_max
  std::vector<Real> q;  ///< q[i] holds q_{i+2}, for n = 2..n_max
  bool monotone_nondecreasing = false;
  Real min_q;
  Real max_q;
  std::size_t min_q_index = 0;  ///< the n attaining min_q
  std::size_t max_q_index = 0;

  std::size_t n_max() const { return p.size(); }
  const Real& p_n(std::size_t n) const { return p.at(n - 1); }
  const Real& q_n(std::size_t n) const { return q.at(n - 2); }
};

/// A Taylor section sum_{k=m}^{n} a_k z^k with the z^m factor removed.
/// Coefficients are kept as log-magnitudes: families like the partial
/// theta function underflow double precision near k = 20, so the linear
/// values only ever exist inside MPFR's huge exponent range.
struct TruncationPolynomial {
  std::size_t degree = 0;            ///< n - m
  std::size_t zero_multiplicity = 0; ///< the removed factor z^m
  std::vector<Real> log_mag;         ///< log|c_k| for k = 0..degree
  std::vector<int> sign;             ///< sign of c_k (+1 throughout here)
  Real balance_radius;               ///< geometric-mean root radius |c_0/c_deg|^{1/deg}
  std::string source;                ///< human-readable provenance

  Real coeff(std::size_t k) const;   ///< c_k at working precision
};

/// A positive Taylor coefficient sequence a_k, defined by a generator
/// family, with log-domain access and exact quotient access where the
/// family permits.  Values are immutable after construction; the only
/// mutable state is a per-precision cache guarded by a mutex, so sharing
/// an instance across threads is safe (concurrent calls serialize; copy
/// the instance for parallel sweeps).
class CoefficientSequence {
 public:
  /// g_a(z) = sum z^k a^{-k^2}; parameter passed as a^2 > 1 (so q_n = a^2).
  static CoefficientSequence partial_theta(const Real& a2);
  /// a_k = 1 / prod_{j=1}^{k} (a^j + 1), a > 1; p_n = a^n + 1.
  static CoefficientSequence q_kummer(const Real& a);
  /// Reconstruction from a_0, a_1 > 0 and q_2, q_3, ... (finite list,
  /// extended by repeating its last value).
  static CoefficientSequence quotient_specified(const Real& a0, const Real& a1,
                                                std::vector<Real> q_list);
  /// Finite polynomial with explicitly listed positive coefficients.
  static CoefficientSequence explicit_list(std::vector<Real> coeffs);

  CoefficientSequence(const CoefficientSequence& o);
  CoefficientSequence& operator=(const CoefficientSequence& o);

  Family family() const { return family_; }
  const std::string& describe() const { return describe_; }

  /// True for explicit-list sequences (finite polynomial).
  bool finite() const { return family_ == Family::ExplicitList; }
  /// Largest valid coefficient index (SIZE_MAX when entire).
  std::size_t max_index() const;

  Real log_coeff(std::size_t k) const;  ///< ln a_k at working precision
  Real coeff(std::size_t k) const;      ///< a_k = exp(log_coeff(k))
  Real log_p(std::size_t n) const;      ///< ln p_n, n >= 1
  Real p(std::size_t n) const;          ///< p_n = a_{n-1}/a_n
  Real q(std::size_t n) const;          ///< q_n, n >= 2 (exact where stored)

  /// inf over m >= n of p_m under the family's tail rule (0 if the tail
  /// quotient is < 1, i.e. no truncation point exists for large |z|).
  Real min_p_from(std::size_t n) const;

  TailRule tail_rule() const;
  /// First index n for which the tail rule describes q_n.
  std::size_t tail_rule_index() const;
  /// The constant value (ConstantFrom) or the limit (IncreasingLimit).
  Real tail_rule_value() const;

  /// a_1/a_2 = p_2: the radius of the sign-witness interval [-a_1/a_2, 0].
  Real witness_interval_radius() const { return p(2); }

  /// Certified evaluation of f(z) = sum a_k z^k.  The truncation order N
  /// is the smallest index with p_m >= 2|z| for all m > N, extended until
  /// the geometric tail bound 2 a_{N+1}|z|^{N+1} drops below
  /// rel_tol * (largest term).  Summation factors out the largest
  /// log-term and compensates (Kahan); if the sum loses more than six
  /// digits to cancellation (|S| < 1e-6 * max term), the evaluation
  /// re-runs at doubled precision, up to three doublings, and the result
  /// is rounded back to the caller's precision.
  EvalResult evaluate(const Real& z, const Real& rel_tol) const;
  EvalResultC evaluate(const Complex& z, const Real& rel_tol) const;

  /// Certified evaluation of the section sum_{k=m}^{n} a_k z^k (the whole
  /// polynomial, z^m factor included).  No truncation tail; the bound
  /// covers rounding only, with the same internal cancellation escalation
  /// as evaluate().
  EvalResult evaluate_section(std::size_t m, std::size_t n, const Real& z) const;
  EvalResultC evaluate_section(std::size_t m, std::size_t n, const Complex& z) const;

  /// Degree-n Taylor section starting at k = 0.  Requesting more terms
  /// than an explicit list holds is an error, never zero-padding.
  TruncationPolynomial truncate(std::size_t n) const;
  /// sum_{k=m}^{n} a_k z^k with the common z^m recorded, not expanded.
  TruncationPolynomial section(std::size_t m, std::size_t n) const;

  /// Smallest degree whose tail bound at the given radius is below
  /// rel_tol * (largest term there); used to size census truncations.
  std::size_t recommended_degree(const Real& radius, const Real& rel_tol) const;

 private:
  CoefficientSequence() = default;

  struct Cache {
    unsigned digits = 0;          ///< working digits the cache serves
    Real log_scale;               ///< family log parameter (ln a, ln(a0/a1))
    std::vector<Real> log_a;      ///< ln a_k, grown on demand
    std::vector<Real> logp;       ///< ln p_n at [n-1], grown on demand
  };

  // All _nolock helpers assume mu_ is held and the cache is current.
  void refresh_nolock() const;
  void extend_nolock(std::size_t k) const;  ///< ensure log_a[0..k], logp[0..k-1]
  Real q_nolock(std::size_t n) const;
  Real min_p_from_nolock(std::size_t n) const;

  struct CoreResult;
  CoreResult eval_core(std::size_t m, std::size_t n_last, const Real& abs_z,
                       bool negative, bool is_complex, const Real& theta) const;
  std::size_t choose_truncation_nolock(const Real& abs_z, const Real& rel_tol,
                                       Real& maxlog_out, const Real& log_abs_z) const;

  Family family_ = Family::ExplicitList;
  std::string describe_;
  // Family parameters (only the relevant ones are set):
  Real a2_;                  // partial theta: a^2
  Real a_;                   // q-Kummer: a
  Real a0_, a1_;             // quotient-specified: leading coefficients
  std::vector<Real> qlist_;  // quotient-specified: q_2, q_3, ...
  std::vector<Real> coeffs_; // explicit list

  mutable std::mutex mu_;
  mutable Cache cache_;
};

/// Populate p_n, q_n through n_max (>= 2) with monotonicity flags.
QuotientProfile quotients(const CoefficientSequence& seq, std::size_t n_max);

}  // namespace lpcert

#endif
