#include "lpcert/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace lpcert {

namespace {

// Hard cap on truncation search; the built-in entire families reach any
// practical tolerance orders of magnitude sooner (their terms decay like
// exp(-c k^2)).
constexpr std::size_t kDegreeCap = 10'000;

// Escalation cap for cancellation recovery: at most three doublings of
// the working precision inside a single evaluation.
constexpr int kMaxEscalations = 3;

void kahan_add(Real& sum, Real& comp, const Real& x) {
  Real y = x - comp;
  Real t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

std::string format_param(const Real& x) { return fmt_sci(x, 17); }

// Shared escalation driver: re-run the closure at doubled precision while
// the result magnitude is swamped by cancellation (< 1e-6 of the largest
// term).  The closure returns (|result|, max term) at scope precision.
template <typename Fn>
void with_cancellation_escalation(Fn&& fn, unsigned base_digits,
                                  unsigned* digits_used) {
  for (int attempt = 0;; ++attempt) {
    PrecisionScope scope(base_digits << attempt);
    std::pair<Real, Real> r = fn();
    if (attempt >= kMaxEscalations || r.second == 0 ||
        r.first >= Real("1e-6") * r.second) {
      *digits_used = working_digits();
      return;
    }
  }
}

}  // namespace

Real TruncationPolynomial::coeff(std::size_t k) const {
  Real c = exp(at_working_precision(log_mag.at(k)));
  return sign.at(k) < 0 ? Real(-c) : c;
}

// ---------------------------------------------------------------------------
// Construction

CoefficientSequence CoefficientSequence::partial_theta(const Real& a2) {
  if (!(a2 > 1)) throw DomainError("partial-theta: parameter a^2 must be > 1");
  CoefficientSequence s;
  s.family_ = Family::PartialTheta;
  s.a2_ = a2;
  s.describe_ = "partial-theta(a2=" + format_param(a2) + ")";
  return s;
}

CoefficientSequence CoefficientSequence::q_kummer(const Real& a) {
  if (!(a > 1)) throw DomainError("q-kummer: parameter a must be > 1");
  CoefficientSequence s;
  s.family_ = Family::QKummer;
  s.a_ = a;
  s.describe_ = "q-kummer(a=" + format_param(a) + ")";
  return s;
}

CoefficientSequence CoefficientSequence::quotient_specified(
    const Real& a0, const Real& a1, std::vector<Real> q_list) {
  if (!(a0 > 0) || !(a1 > 0))
    throw DomainError("quotients family: a_0 and a_1 must be positive");
  if (q_list.empty())
    throw DomainError("quotients family: need at least one q value");
  for (const Real& v : q_list)
    if (!(v > 0)) throw DomainError("quotients family: every q_n must be positive");
  CoefficientSequence s;
  s.family_ = Family::QuotientSpecified;
  s.a0_ = a0;
  s.a1_ = a1;
  s.qlist_ = std::move(q_list);
  std::ostringstream os;
  os << "quotients(a0=" << format_param(a0) << ",a1=" << format_param(a1)
     << ",q=[" << format_param(s.qlist_.front());
  if (s.qlist_.size() > 1)
    os << ".." << format_param(s.qlist_.back()) << " (" << s.qlist_.size() << ")";
  os << "],tail=repeat-last)";
  s.describe_ = os.str();
  return s;
}

CoefficientSequence CoefficientSequence::explicit_list(std::vector<Real> coeffs) {
  if (coeffs.empty()) throw DomainError("explicit list: must not be empty");
  for (const Real& c : coeffs)
    if (!(c > 0)) throw DomainError("explicit list: every coefficient must be positive");
  CoefficientSequence s;
  s.family_ = Family::ExplicitList;
  s.coeffs_ = std::move(coeffs);
  s.describe_ = "explicit(" + std::to_string(s.coeffs_.size()) + " coefficients)";
  return s;
}

CoefficientSequence::CoefficientSequence(const CoefficientSequence& o)
    : family_(o.family_),
      describe_(o.describe_),
      a2_(o.a2_),
      a_(o.a_),
      a0_(o.a0_),
      a1_(o.a1_),
      qlist_(o.qlist_),
      coeffs_(o.coeffs_) {}

CoefficientSequence& CoefficientSequence::operator=(const CoefficientSequence& o) {
  if (this != &o) {
    std::scoped_lock lk(mu_);
    family_ = o.family_;
    describe_ = o.describe_;
    a2_ = o.a2_;
    a_ = o.a_;
    a0_ = o.a0_;
    a1_ = o.a1_;
    qlist_ = o.qlist_;
    coeffs_ = o.coeffs_;
    cache_ = Cache{};
  }
  return *this;
}

std::size_t CoefficientSequence::max_index() const {
  return finite() ? coeffs_.size() - 1
                  : std::numeric_limits<std::size_t>::max();
}

// ---------------------------------------------------------------------------
// Per-precision cache

void CoefficientSequence::refresh_nolock() const {
  const unsigned d = working_digits();
  if (cache_.digits == d) return;
  cache_ = Cache{};
  cache_.digits = d;
  switch (family_) {
    case Family::PartialTheta:
      cache_.log_scale = log(at_working_precision(a2_)) / 2;  // ln a
      break;
    case Family::QKummer:
      cache_.log_scale = log(at_working_precision(a_));
      break;
    case Family::QuotientSpecified:
      cache_.log_scale =
          log(at_working_precision(a0_) / at_working_precision(a1_));  // ln p_1
      break;
    case Family::ExplicitList:
      cache_.log_scale = 0;
      break;
  }
}

void CoefficientSequence::extend_nolock(std::size_t k) const {
  refresh_nolock();
  if (finite() && k > max_index())
    throw RangeError("coefficient index " + std::to_string(k) +
                     " beyond explicit list of " + std::to_string(coeffs_.size()));
  auto& la = cache_.log_a;
  auto& lp = cache_.logp;
  switch (family_) {
    case Family::PartialTheta: {
      const Real& lna = cache_.log_scale;
      for (std::size_t i = la.size(); i <= k; ++i) {
        Real ri(static_cast<unsigned long>(i));
        la.push_back(-ri * ri * lna);
      }
      for (std::size_t n = lp.size() + 1; n <= k; ++n)
        lp.push_back(Real(2 * static_cast<unsigned long>(n) - 1) * lna);
      break;
    }
    case Family::QKummer: {
      if (lp.size() < k) {
        const Real aw = at_working_precision(a_);
        for (std::size_t n = lp.size() + 1; n <= k; ++n)
          lp.push_back(log(pow(aw, static_cast<int>(n)) + 1));
      }
      if (la.empty()) la.push_back(Real(0));  // a_0 = 1
      for (std::size_t i = la.size(); i <= k; ++i)
        la.push_back(la[i - 1] - lp[i - 1]);
      break;
    }
    case Family::QuotientSpecified: {
      for (std::size_t n = lp.size() + 1; n <= k; ++n) {
        if (n == 1)
          lp.push_back(cache_.log_scale);
        else {
          std::size_t pos = std::min(n - 2, qlist_.size() - 1);
          lp.push_back(lp[n - 2] + log(at_working_precision(qlist_[pos])));
        }
      }
      if (la.empty()) la.push_back(log(at_working_precision(a0_)));
      for (std::size_t i = la.size(); i <= k; ++i)
        la.push_back(la[i - 1] - lp[i - 1]);
      break;
    }
    case Family::ExplicitList: {
      for (std::size_t i = la.size(); i <= k; ++i)
        la.push_back(log(at_working_precision(coeffs_[i])));
      for (std::size_t n = lp.size() + 1; n <= k; ++n)
        lp.push_back(la[n - 1] - la[n]);
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// Coefficient / quotient access

Real CoefficientSequence::log_coeff(std::size_t k) const {
  std::scoped_lock lk(mu_);
  extend_nolock(k);
  return cache_.log_a[k];
}

Real CoefficientSequence::coeff(std::size_t k) const { return exp(log_coeff(k)); }

Real CoefficientSequence::log_p(std::size_t n) const {
  if (n < 1) throw DomainError("p_n is defined for n >= 1");
  std::scoped_lock lk(mu_);
  extend_nolock(n);
  return cache_.logp[n - 1];
}

Real CoefficientSequence::p(std::size_t n) const {
  if (n < 1) throw DomainError("p_n is defined for n >= 1");
  if (family_ == Family::QKummer)
    return pow(at_working_precision(a_), static_cast<int>(n)) + 1;
  return exp(log_p(n));
}

Real CoefficientSequence::q_nolock(std::size_t n) const {
  switch (family_) {
    case Family::PartialTheta:
      return at_working_precision(a2_);
    case Family::QKummer: {
      const Real aw = at_working_precision(a_);
      return (pow(aw, static_cast<int>(n)) + 1) /
             (pow(aw, static_cast<int>(n) - 1) + 1);
    }
    case Family::QuotientSpecified:
      return at_working_precision(qlist_[std::min(n - 2, qlist_.size() - 1)]);
    case Family::ExplicitList: {
      if (n > max_index())
        throw RangeError("q_" + std::to_string(n) + " needs coefficient a_" +
                         std::to_string(n) + " beyond the explicit list");
      const Real am = at_working_precision(coeffs_[n - 1]);
      return am * am /
             (at_working_precision(coeffs_[n - 2]) * at_working_precision(coeffs_[n]));
    }
  }
  throw DomainError("unreachable family");
}

Real CoefficientSequence::q(std::size_t n) const {
  if (n < 2) throw DomainError("q_n is defined for n >= 2");
  std::scoped_lock lk(mu_);
  return q_nolock(n);
}

Real CoefficientSequence::min_p_from_nolock(std::size_t n) const {
  switch (family_) {
    case Family::PartialTheta:
    case Family::QKummer: {
      // p_n is strictly increasing for a > 1.
      extend_nolock(n);
      return exp(cache_.logp[n - 1]);
    }
    case Family::QuotientSpecified: {
      if (qlist_.back() < 1) return Real(0);  // p_m -> 0: no truncation point
      // Beyond n = qlist_.size() + 1 the quotient is the constant tail
      // >= 1, so p is nondecreasing there; any dip lives in the explicit
      // stretch of the list.
      std::size_t hi = std::max(n, qlist_.size() + 1);
      extend_nolock(hi);
      Real m = exp(cache_.logp[n - 1]);
      for (std::size_t i = n + 1; i <= hi; ++i) {
        Real v = exp(cache_.logp[i - 1]);
        if (v < m) m = v;
      }
      return m;
    }
    case Family::ExplicitList: {
      if (n > max_index()) return std::numeric_limits<Real>::infinity();
      extend_nolock(max_index());
      Real m = exp(cache_.logp[n - 1]);
      for (std::size_t i = n + 1; i <= max_index(); ++i) {
        Real v = exp(cache_.logp[i - 1]);
        if (v < m) m = v;
      }
      return m;
    }
  }
  throw DomainError("unreachable family");
}

Real CoefficientSequence::min_p_from(std::size_t n) const {
  if (n < 1) throw DomainError("p_n is defined for n >= 1");
  std::scoped_lock lk(mu_);
  return min_p_from_nolock(n);
}

TailRule CoefficientSequence::tail_rule() const {
  switch (family_) {
    case Family::PartialTheta:
    case Family::QuotientSpecified:
      return TailRule::ConstantFrom;
    case Family::QKummer:
      return TailRule::IncreasingLimit;
    case Family::ExplicitList:
      return TailRule::None;
  }
  throw DomainError("unreachable family");
}

std::size_t CoefficientSequence::tail_rule_index() const {
  switch (family_) {
    case Family::PartialTheta:
    case Family::QKummer:
      return 2;
    case Family::QuotientSpecified:
      return qlist_.size() + 1;  // q_n equals the last listed value from here on
    case Family::ExplicitList:
      return std::numeric_limits<std::size_t>::max();
  }
  throw DomainError("unreachable family");
}

Real CoefficientSequence::tail_rule_value() const {
  switch (family_) {
    case Family::PartialTheta:
      return at_working_precision(a2_);
    case Family::QuotientSpecified:
      return at_working_precision(qlist_.back());
    case Family::QKummer:
      return at_working_precision(a_);  // q_n = (a^n+1)/(a^{n-1}+1) -> a
    case Family::ExplicitList:
      throw DomainError("explicit list has no quotient tail rule");
  }
  throw DomainError("unreachable family");
}

// ---------------------------------------------------------------------------
// Certified evaluation

std::size_t CoefficientSequence::choose_truncation_nolock(
    const Real& abs_z, const Real& rel_tol, Real& maxlog_out,
    const Real& log_abs_z) const {
  if (finite()) {
    std::size_t n = max_index();
    extend_nolock(n);
    Real m = cache_.log_a[0];
    for (std::size_t k = 1; k <= n; ++k) {
      Real t = cache_.log_a[k] + Real(static_cast<unsigned long>(k)) * log_abs_z;
      if (t > m) m = t;
    }
    maxlog_out = m;
    return n;
  }
  const Real two_z = 2 * abs_z;
  extend_nolock(1);
  std::size_t N = 0;
  Real maxlog = cache_.log_a[0];
  // Geometric regime: every term past N shrinks by at least 1/2.
  while (N < kDegreeCap && min_p_from_nolock(N + 1) < two_z) {
    ++N;
    extend_nolock(N);
    Real t = cache_.log_a[N] + Real(static_cast<unsigned long>(N)) * log_abs_z;
    if (t > maxlog) maxlog = t;
  }
  if (min_p_from_nolock(N + 1) < two_z)
    throw ConvergenceError(
        "no truncation point with |z|/p_N <= 1/2 within degree cap " +
        std::to_string(kDegreeCap) + " for " + describe_);
  // Extend until the certified tail 2 a_{N+1}|z|^{N+1} drops below
  // rel_tol * (largest term).
  const Real log_target = log(at_working_precision(rel_tol));
  const Real log2 = log(Real(2));
  while (true) {
    extend_nolock(N + 1);
    Real log_tail = log2 + cache_.log_a[N + 1] +
                    Real(static_cast<unsigned long>(N + 1)) * log_abs_z;
    if (log_tail <= log_target + maxlog) break;
    if (N >= kDegreeCap)
      throw ConvergenceError("tail tolerance unreachable within degree cap for " +
                             describe_);
    ++N;
    Real t = cache_.log_a[N] + Real(static_cast<unsigned long>(N)) * log_abs_z;
    if (t > maxlog) maxlog = t;
  }
  maxlog_out = maxlog;
  return N;
}

struct CoefficientSequence::CoreResult {
  Complex value;
  Real rounding;  // certified rounding-error part of the bound
  Real max_term;
};

// Sums sum_{k=m}^{n_last} a_k z^k at the current working precision with the
// largest log-term factored out and Kahan compensation, accumulating a
// rigorous (deliberately generous) rounding-error bound alongside.
CoefficientSequence::CoreResult CoefficientSequence::eval_core(
    std::size_t m, std::size_t n_last, const Real& abs_z, bool negative,
    bool is_complex, const Real& theta) const {
  std::scoped_lock lk(mu_);
  extend_nolock(n_last);
  const Real eps = work_eps();
  const Real L = log(abs_z);
  const Real absL = abs(L);
  const Real abs_theta = is_complex ? Real(abs(theta)) : Real(0);

  Real maxlog = cache_.log_a[m] + Real(static_cast<unsigned long>(m)) * L;
  for (std::size_t k = m + 1; k <= n_last; ++k) {
    Real t = cache_.log_a[k] + Real(static_cast<unsigned long>(k)) * L;
    if (t > maxlog) maxlog = t;
  }

  Real sum_re(0), comp_re(0), sum_im(0), comp_im(0);
  Real sabs(0), sweight(0);
  for (std::size_t k = m; k <= n_last; ++k) {
    Real rk(static_cast<unsigned long>(k));
    Real x = cache_.log_a[k] + rk * L;
    Real e = exp(x - maxlog);
    if (is_complex) {
      Real ang = rk * theta;
      kahan_add(sum_re, comp_re, e * cos(ang));
      kahan_add(sum_im, comp_im, e * sin(ang));
    } else {
      kahan_add(sum_re, comp_re, (negative && (k & 1)) ? Real(-e) : e);
    }
    sabs += e;
    sweight += (abs(cache_.log_a[k]) + rk * (absL + abs_theta) + 4) * e;
  }

  const Real scale = exp(maxlog);
  CoreResult r;
  r.value = Complex(scale * sum_re, is_complex ? Real(scale * sum_im) : Real(0));
  const Real n_terms(static_cast<unsigned long>(n_last - m + 2));
  // Per-term exp/log/phase rounding, compensated-summation accumulation,
  // and the final rescale; every constant is generous by design.
  r.rounding =
      scale * eps * (6 * sweight + (6 * abs(maxlog) + 12 + 2 * n_terms) * sabs) +
      lpcert::abs(r.value) * (abs(maxlog) + 4) * eps;
  r.max_term = scale;
  return r;
}

EvalResult CoefficientSequence::evaluate(const Real& z, const Real& rel_tol) const {
  EvalResultC c = evaluate(Complex(z, Real(0)), rel_tol);
  EvalResult r;
  r.value = c.value.re;
  r.bound = c.bound;
  r.tail = c.tail;
  r.max_term = c.max_term;
  r.terms = c.terms;
  r.digits_used = c.digits_used;
  return r;
}

EvalResultC CoefficientSequence::evaluate(const Complex& z, const Real& rel_tol) const {
  if (!(rel_tol > 0) || !(rel_tol < 1))
    throw DomainError("evaluate: rel_tol must lie in (0, 1)");
  const unsigned d0 = working_digits();

  if (z.re == 0 && z.im == 0) {
    Real a0v = coeff(0);
    EvalResultC r;
    r.value = Complex(a0v, Real(0));
    r.bound = 4 * work_eps() * a0v;
    r.tail = 0;
    r.max_term = a0v;
    r.terms = 1;
    r.digits_used = d0;
    return r;
  }

  const bool on_negative_axis = (z.im == 0 && z.re < 0);
  const bool complex_path = !(z.im == 0);

  Complex value_out;
  Real tail_out(0), bound_out(0), max_term_out(0);
  std::size_t terms_out = 0;
  unsigned digits_used = d0;

  auto run_once = [&]() -> std::pair<Real, Real> {
    // Re-anchor the inputs at the scope's precision (exact widening).
    const Complex zw(at_working_precision(z.re), at_working_precision(z.im));
    const Real azp = lpcert::abs(zw);
    const Real lazp = log(azp);
    const Real theta = complex_path ? arg(zw) : Real(0);
    Real maxlog(0);
    std::size_t N;
    {
      std::scoped_lock lk(mu_);
      N = choose_truncation_nolock(azp, rel_tol, maxlog, lazp);
    }
    CoreResult core = eval_core(0, N, azp, on_negative_axis, complex_path, theta);
    Real tail(0);
    if (!finite()) {
      std::scoped_lock lk(mu_);
      extend_nolock(N + 1);
      tail = 2 * exp(cache_.log_a[N + 1] +
                     Real(static_cast<unsigned long>(N + 1)) * lazp);
    }
    value_out = core.value;
    tail_out = tail;
    bound_out = core.rounding + tail;
    max_term_out = core.max_term;
    terms_out = N + 1;
    return {lpcert::abs(core.value), core.max_term};
  };

  with_cancellation_escalation(run_once, d0, &digits_used);

  EvalResultC r;
  r.value = Complex(at_working_precision(value_out.re),
                    at_working_precision(value_out.im));
  r.tail = at_working_precision(tail_out);
  r.max_term = at_working_precision(max_term_out);
  r.bound = at_working_precision(bound_out) * (1 + 8 * work_eps()) +
            4 * work_eps() * lpcert::abs(r.value);
  r.terms = terms_out;
  r.digits_used = digits_used;
  return r;
}

EvalResult CoefficientSequence::evaluate_section(std::size_t m, std::size_t n,
                                                 const Real& z) const {
  EvalResultC c = evaluate_section(m, n, Complex(z, Real(0)));
  EvalResult r;
  r.value = c.value.re;
  r.bound = c.bound;
  r.tail = c.tail;
  r.max_term = c.max_term;
  r.terms = c.terms;
  r.digits_used = c.digits_used;
  return r;
}

EvalResultC CoefficientSequence::evaluate_section(std::size_t m, std::size_t n,
                                                  const Complex& z) const {
  if (m > n) throw DomainError("evaluate_section: need m <= n");
  if (finite() && n > max_index())
    throw RangeError("evaluate_section: endpoint beyond explicit list");
  const unsigned d0 = working_digits();

  if (z.re == 0 && z.im == 0) {
    Real v = (m == 0) ? coeff(0) : Real(0);
    EvalResultC r;
    r.value = Complex(v, Real(0));
    r.bound = 4 * work_eps() * v;
    r.tail = 0;
    r.max_term = v;
    r.terms = 1;
    r.digits_used = d0;
    return r;
  }

  const bool on_negative_axis = (z.im == 0 && z.re < 0);
  const bool complex_path = !(z.im == 0);

  Complex value_out;
  Real bound_out(0), max_term_out(0);
  unsigned digits_used = d0;

  auto run_once = [&]() -> std::pair<Real, Real> {
    const Complex zw(at_working_precision(z.re), at_working_precision(z.im));
    const Real azp = lpcert::abs(zw);
    const Real theta = complex_path ? arg(zw) : Real(0);
    CoreResult core = eval_core(m, n, azp, on_negative_axis, complex_path, theta);
    value_out = core.value;
    bound_out = core.rounding;
    max_term_out = core.max_term;
    return {lpcert::abs(core.value), core.max_term};
  };

  with_cancellation_escalation(run_once, d0, &digits_used);

  EvalResultC r;
  r.value = Complex(at_working_precision(value_out.re),
                    at_working_precision(value_out.im));
  r.tail = 0;
  r.max_term = at_working_precision(max_term_out);
  r.bound = at_working_precision(bound_out) * (1 + 8 * work_eps()) +
            4 * work_eps() * lpcert::abs(r.value);
  r.terms = n - m + 1;
  r.digits_used = digits_used;
  return r;
}

// ---------------------------------------------------------------------------
// Sections

TruncationPolynomial CoefficientSequence::truncate(std::size_t n) const {
  if (n < 1) throw DomainError("truncate: degree must be >= 1");
  TruncationPolynomial t = section(0, n);
  t.source = describe_ + " truncated at degree " + std::to_string(n);
  return t;
}

TruncationPolynomial CoefficientSequence::section(std::size_t m, std::size_t n) const {
  if (m >= n) throw DomainError("section: need m < n");
  if (finite() && n > max_index())
    throw DomainError("section: endpoint " + std::to_string(n) +
                      " is beyond the explicit coefficient list; zero-padding "
                      "would break the positivity invariant");
  std::scoped_lock lk(mu_);
  extend_nolock(n);
  TruncationPolynomial t;
  t.degree = n - m;
  t.zero_multiplicity = m;
  t.log_mag.reserve(t.degree + 1);
  for (std::size_t k = m; k <= n; ++k) t.log_mag.push_back(cache_.log_a[k]);
  t.sign.assign(t.degree + 1, 1);
  t.balance_radius = exp((cache_.log_a[m] - cache_.log_a[n]) /
                         Real(static_cast<unsigned long>(n - m)));
  t.source = describe_ + " section [" + std::to_string(m) + ".." +
             std::to_string(n) + "]";
  return t;
}

std::size_t CoefficientSequence::recommended_degree(const Real& radius,
                                                    const Real& rel_tol) const {
  if (!(radius > 0)) throw DomainError("recommended_degree: radius must be positive");
  if (!(rel_tol > 0) || !(rel_tol < 1))
    throw DomainError("recommended_degree: rel_tol must lie in (0, 1)");
  if (finite()) return max_index();
  std::scoped_lock lk(mu_);
  Real maxlog(0);
  return choose_truncation_nolock(radius, rel_tol, maxlog, log(radius));
}

// ---------------------------------------------------------------------------
// Quotient profile

QuotientProfile quotients(const CoefficientSequence& seq, std::size_t n_max) {
  if (n_max < 2) throw DomainError("quotients: n_max must be >= 2");
  if (seq.finite() && n_max > seq.max_index())
    throw RangeError("quotients: n_max = " + std::to_string(n_max) +
                     " needs coefficient a_" + std::to_string(n_max) +
                     " beyond the explicit list");
  QuotientProfile pr;
  pr.p.reserve(n_max);
  pr.q.reserve(n_max - 1);
  for (std::size_t n = 1; n <= n_max; ++n) pr.p.push_back(seq.p(n));
  for (std::size_t n = 2; n <= n_max; ++n) pr.q.push_back(seq.q(n));

  const Real rel_tol("1e-14");
  pr.monotone_nondecreasing = true;
  for (std::size_t i = 1; i < pr.q.size(); ++i)
    if (pr.q[i] < pr.q[i - 1] * (1 - rel_tol)) {
      pr.monotone_nondecreasing = false;
      break;
    }

  pr.min_q = pr.q[0];
  pr.max_q = pr.q[0];
  pr.min_q_index = 2;
  pr.max_q_index = 2;
  for (std::size_t i = 1; i < pr.q.size(); ++i) {
    if (pr.q[i] < pr.min_q) {
      pr.min_q = pr.q[i];
      pr.min_q_index = i + 2;
    }
    if (pr.q[i] > pr.max_q) {
      pr.max_q = pr.q[i];
      pr.max_q_index = i + 2;
    }
  }
  return pr;
}

}  // namespace lpcert
