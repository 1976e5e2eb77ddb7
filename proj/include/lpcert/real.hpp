#ifndef LPCERT_REAL_HPP
#define LPCERT_REAL_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace lpcert {

/// Working real type: MPFR-backed, runtime-variable precision, no expression
/// templates (value semantics, safe with std algorithms and lambdas).
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0, boost::multiprecision::allocate_dynamic>,
    boost::multiprecision::et_off>;

/// Current working precision in decimal digits (thread default for new Reals).
unsigned working_digits();

/// Set the working precision in decimal digits. Clamped to [16, 100000].
void set_working_digits(unsigned digits);

/// Precision at process start: LP_CERTIFY_PRECISION if set and valid, else 34.
unsigned initial_digits();

/// RAII scope that switches the working precision and restores it on exit.
/// All Reals used inside a computation must be constructed inside the scope;
/// escalation re-runs a computation from scratch in a wider scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// Upper bound on the unit roundoff at the current working precision
/// (10^(1-digits) dominates 2^(1-bits)).
Real work_eps();

/// Copy x into a variable carrying the current working precision: exact when
/// widening, correctly rounded when narrowing.  MPFR expression results
/// inherit operand precision, so values crossing a PrecisionScope boundary
/// must be re-anchored with this before entering arithmetic.
Real at_working_precision(const Real& x);

inline double to_double(const Real& x) { return x.convert_to<double>(); }

/// Deterministic scientific-notation formatting with `sig` significant digits.
std::string fmt_sci(const Real& x, unsigned sig);

}  // namespace lpcert

#endif
