#include "lpcert/constants.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lpcert/errors.hpp"
#include "lpcert/scan.hpp"
#include "lpcert/series.hpp"

namespace lpcert {

namespace {

// Shared slack for boundary comparisons: a value within one part in 1e12
// of a threshold counts as meeting it.
bool at_least(const Real& x, const Real& threshold) {
  return x >= threshold * (1 - Real("1e-12"));
}

InequalityReport make_report(std::string name,
                             std::vector<std::pair<std::string, Real>> point,
                             const Real& lhs, const Real& rhs,
                             std::string note) {
  InequalityReport rep;
  rep.name = std::move(name);
  rep.point = std::move(point);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.margin = lhs - rhs;
  Real floor = abs(lhs);
  if (abs(rhs) > floor) floor = abs(rhs);
  if (floor < 1) floor = 1;
  rep.holds = rep.margin >= -Real("1e-12") * floor;
  rep.note = std::move(note);
  return rep;
}

void require_regime(const std::vector<Real>& window, const char* who) {
  const Real floor = quotient_regime_floor();
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (!at_least(window[i], floor))
      throw DomainError(std::string(who) + ": window value " +
                        fmt_sci(window[i], 6) + " is below 2*2^(1/3)");
    if (i > 0 && !at_least(window[i], window[i - 1]))
      throw DomainError(std::string(who) + ": window must be non-decreasing");
  }
}

// ---------------------------------------------------------------------
// Boolean bisection on a^2 for the membership boundaries.

// Certified "attains a non-positive value on (-a^3, -a)" for either the
// whole partial theta series or its degree-n section.
bool nonpositive_dip(const Real& a2, std::size_t section_degree,
                     unsigned& digits_used) {
  const Real a = sqrt(at_working_precision(a2));
  const CoefficientSequence g = CoefficientSequence::partial_theta(a2);
  ScanPolicy policy;
  policy.nodes = 1024;
  policy.style = NodeStyle::Geometric;
  policy.include_left_endpoint = false;  // the interval is open
  policy.include_right_endpoint = false;
  const ScanOutcome out = scan_for_nonpositive(
      [&](const Real& x, const Real& tol) {
        const EvalResult r = section_degree == 0
                                 ? g.evaluate(x, tol)
                                 : g.evaluate_section(0, section_degree, x);
        return std::make_pair(r.value, r.bound);
      },
      -a * a * a, -a, policy);
  if (out.digits_used > digits_used) digits_used = out.digits_used;
  return out.witness_found;
}

// Bisect the flip of `pred` on [lo, hi]; pred must be false at lo and true
// at hi (anything else indicates an evaluation bug, not a math fact).
BisectionResult bisect_flip(const char* name,
                            const std::function<bool(const Real&)>& pred,
                            Real lo, Real hi, const Real& tol,
                            unsigned& digits_used) {
  lo = at_working_precision(lo);
  hi = at_working_precision(hi);
  std::size_t evaluations = 2;
  if (pred(lo) || !pred(hi))
    throw SolverError(std::string(name) +
                      ": predicate does not separate the bracket [" +
                      fmt_sci(lo, 6) + ", " + fmt_sci(hi, 6) + "]");
  while (hi - lo > tol) {
    const Real mid = (lo + hi) / 2;
    ++evaluations;
    if (pred(mid))
      hi = mid;
    else
      lo = mid;
  }
  BisectionResult out;
  out.value = (lo + hi) / 2;
  out.lo = lo;
  out.hi = hi;
  out.tolerance = tol;
  out.evaluations = evaluations;
  out.digits_used = digits_used;
  return out;
}

void require_tol(const Real& tol, const char* who) {
  if (!(tol > 0 && tol <= Real("1e-3")))
    throw DomainError(std::string(who) + ": tol must lie in (0, 1e-3]");
}

// ---------------------------------------------------------------------
// Exact rational root isolation for the named proof polynomials.
//
// A Sturm chain (signed remainder sequence) in exact rational arithmetic
// counts the distinct real roots in any half-open interval, multiple and
// even-multiplicity roots included -- which a bare sign-change ladder
// cannot do (several of the named polynomials have derivatives with
// even-multiplicity zeros, where no pointwise bound can ever certify the
// absence of a crossing).

using Rat = boost::multiprecision::cpp_rational;
using Poly = std::vector<Rat>;  // coefficients in ascending order

void strip_leading_zeros(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rat eval_poly(const Poly& p, const Rat& x) {
  Rat s = 0;
  for (std::size_t i = p.size(); i-- > 0;) s = s * x + p[i];
  return s;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i)
    d.push_back(p[i] * Rat(static_cast<unsigned long>(i)));
  return d;
}

// Remainder of the exact long division a mod b.
Poly poly_rem(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rat f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i + 1 < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    strip_leading_zeros(a);
  }
  return a;
}

std::vector<Poly> sturm_chain(Poly p) {
  strip_leading_zeros(p);
  std::vector<Poly> chain{p};
  Poly d = derivative(p);
  strip_leading_zeros(d);
  if (d.empty()) return chain;
  chain.push_back(d);
  while (chain.back().size() > 1) {
    Poly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;  // the chain ended at a nontrivial gcd
    const Rat lead = abs(r.back());
    for (Rat& c : r) c = -c / lead;  // flip sign, tame coefficient growth
    chain.push_back(r);
  }
  return chain;
}

int variations(const std::vector<Poly>& chain, const Rat& x) {
  int count = 0, prev = 0;
  for (const Poly& f : chain) {
    const Rat v = eval_poly(f, x);
    const int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Number of distinct real roots in (a, b].
long roots_in(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
  return variations(chain, a) - variations(chain, b);
}

Rat cauchy_bound(const Poly& p) {
  Rat m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const Rat r = abs(p[i] / p.back());
    if (r > m) m = r;
  }
  return 1 + m;
}

Poly named_poly(const std::string& id) {
  if (id == "deg11")
    return {-2, 0, -2, 2, -1, 0, 0, 2, 0, 0, -2, 1};
  if (id == "quintic_A")
    return {Rat(-2, 9), Rat(61, 40), 0, 0, -2, 1};
  if (id == "quintic_B")
    return {Rat(-1, 9), 1, 0, 0, -2, 1};
  if (id == "quartic_g")
    return {2, 0, 0, -2, 1};
  throw DomainError("largest_real_root: unknown polynomial '" + id +
                    "' (expected deg11, quintic_A, quintic_B, quartic_g)");
}

Real rat_to_real(const Rat& r) {
  return Real(numerator(r).str()) / Real(denominator(r).str());
}

}  // namespace

Real quotient_regime_floor() { return 2 * cbrt(Real(2)); }

BisectionResult q_infinity(const Real& tol) {
  require_tol(tol, "q_infinity");
  unsigned digits = working_digits();
  return bisect_flip(
      "q_infinity",
      [&digits](const Real& a2) { return nonpositive_dip(a2, 0, digits); },
      Real(3), Real(4), at_working_precision(tol), digits);
}

BisectionResult section_constant(std::size_t n, const Real& tol) {
  if (n < 2) throw DomainError("section_constant: n must be >= 2");
  require_tol(tol, "section_constant");
  unsigned digits = working_digits();
  return bisect_flip(
      "section_constant",
      [&digits, n](const Real& a2) { return nonpositive_dip(a2, n, digits); },
      Real("2.5"), Real("4.5"), at_working_precision(tol), digits);
}

std::vector<InequalityReport> verify_c_interleaving(std::size_t n_max,
                                                    const Real& tol) {
  if (n_max < 5)
    throw DomainError("verify_c_interleaving: n_max must be >= 5");
  require_tol(tol, "verify_c_interleaving");

  const Real qinf = q_infinity(tol).value;
  std::vector<Real> c(n_max + 1);
  for (std::size_t n = 2; n <= n_max; ++n)
    c[n] = section_constant(n, tol).value;

  auto named = [](std::size_t n) { return "c_" + std::to_string(n); };
  std::vector<InequalityReport> out;

  // Even sections decrease toward the limit from above ...
  const std::size_t top_even = n_max - (n_max % 2 == 0 ? 0 : 1);
  for (std::size_t n = 2; n + 2 <= top_even; n += 2)
    out.push_back(make_report(
        named(n) + " > " + named(n + 2),
        {{"n", Real(static_cast<unsigned long>(n))},
         {"m", Real(static_cast<unsigned long>(n + 2))}},
        c[n], c[n + 2], ""));
  out.push_back(make_report(named(top_even) + " > q_inf",
                            {{"n", Real(static_cast<unsigned long>(top_even))}},
                            c[top_even], qinf, ""));

  // ... and odd sections increase toward it from below.
  const std::size_t top_odd = n_max - (n_max % 2 == 0 ? 1 : 0);
  out.push_back(make_report("q_inf > " + named(top_odd),
                            {{"n", Real(static_cast<unsigned long>(top_odd))}},
                            qinf, c[top_odd], ""));
  for (std::size_t n = top_odd; n >= 5; n -= 2)
    out.push_back(make_report(
        named(n) + " > " + named(n - 2),
        {{"n", Real(static_cast<unsigned long>(n))},
         {"m", Real(static_cast<unsigned long>(n - 2))}},
        c[n], c[n - 2], ""));
  return out;
}

std::optional<Real> largest_real_root(const std::string& poly_id) {
  const Poly p = named_poly(poly_id);
  const std::vector<Poly> chain = sturm_chain(p);
  const Rat bound = cauchy_bound(p);
  if (roots_in(chain, -bound, bound) <= 0) return std::nullopt;

  // Keep the largest root inside (lo, hi] and bisect.  The dyadic probe
  // points cannot coincide with a root of the shipped polynomials; treat a
  // hit as a bug rather than guess around it.
  Rat lo = -bound, hi = bound;
  const Rat tol(1, 10000000000ULL);  // 1e-10
  while (hi - lo > tol) {
    const Rat mid = (lo + hi) / 2;
    if (eval_poly(p, mid) == 0)
      throw SolverError("largest_real_root: probe landed exactly on a root");
    if (roots_in(chain, mid, bound) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return rat_to_real((lo + hi) / 2);
}

InequalityReport check_estqq(const std::vector<Real>& window) {
  if (window.size() != 7)
    throw DomainError(
        "check_estqq: window must hold the seven values q_(j-2)..q_(j+4)");
  require_regime(window, "check_estqq");

  const Real qjm2 = at_working_precision(window[0]);
  const Real qjm1 = at_working_precision(window[1]);
  const Real qj = at_working_precision(window[2]);
  const Real qjp1 = at_working_precision(window[3]);
  const Real qjp2 = at_working_precision(window[4]);
  const Real qjp3 = at_working_precision(window[5]);
  const Real qjp4 = at_working_precision(window[6]);
  const Real s = sqrt(qjp1);

  const Real lhs = qjm1 * qj * s * (2 - 2 * qj * s + qj * qjp1);

  const Real den1 = 1 - 1 / (qjm2 * qjm1 * qj * s);
  const Real den2 = 1 - 1 / (s * qjp2 * qjp3 * qjp4);
  if (!(den1 > 0) || !(den2 > 0))
    throw DomainError("check_estqq: geometric-tail denominator is not "
                      "positive (impossible in the stated regime)");
  const Real rhs = 1 / den1 + (qjm1 * qj * qj) / (qjp2 * qjp2 * qjp3) / den2 +
                   qjm1 * qj * s * (1 - qj / qjp2);

  return make_report("estqq",
                     {{"q(j-2)", qjm2},
                      {"q(j-1)", qjm1},
                      {"q(j)", qj},
                      {"q(j+1)", qjp1},
                      {"q(j+2)", qjp2},
                      {"q(j+3)", qjp3},
                      {"q(j+4)", qjp4}},
                     lhs, rhs, "");
}

InequalityReport check_nu_k(const std::vector<Real>& window) {
  if (window.size() != 5)
    throw DomainError(
        "check_nu_k: window must hold the five values q_(k-1)..q_(k+3)");
  if (!at_least(window[0], Real(3)))
    throw DomainError("check_nu_k: needs q_(k-1) >= 3");
  for (std::size_t i = 1; i < window.size(); ++i)
    if (!at_least(window[i], window[i - 1]))
      throw DomainError("check_nu_k: window must be non-decreasing");

  const Real qkm1 = at_working_precision(window[0]);
  const Real qk = at_working_precision(window[1]);
  const Real qkp1 = at_working_precision(window[2]);
  const Real qkp2 = at_working_precision(window[3]);
  const Real qkp3 = at_working_precision(window[4]);
  const Real s = sqrt(qkp1);

  const Real nu = -1 + qkm1 * qk * s - 2 * qkm1 * qk * qk * qkp1 +
                  qkm1 * qk * qk * qkp1 * s + qkm1 * qk * qk * s / qkp2 -
                  qkm1 * qk * qk / (qkp2 * qkp2 * qkp3);

  std::string branch;
  if (at_least(qkp1, Real(4)))
    branch = "branch 1: q(k+1) >= 4";
  else if (at_least(qkp2, Real(4)) && at_least(qkp1, Real("3.4303")))
    branch = "branch 3: q(k+1) >= 3.4303 with q(k+2) >= 4";
  else if (at_least(qk / qkp2, Real("0.525")))
    branch = "branch 2: q(k)/q(k+2) >= 0.525";
  else
    branch = "no proof branch applies";

  return make_report("nu_k",
                     {{"q(k-1)", qkm1},
                      {"q(k)", qk},
                      {"q(k+1)", qkp1},
                      {"q(k+2)", qkp2},
                      {"q(k+3)", qkp3}},
                     nu, Real(0), branch);
}

InequalityReport check_psi_positive(const Real& q_j, const Real& q_j1) {
  const Real floor = quotient_regime_floor();
  if (!at_least(q_j, floor) || !at_least(q_j1, floor))
    throw DomainError("check_psi_positive: both quotients must be >= 2*2^(1/3)");

  const Real qj = at_working_precision(q_j);
  const Real qj1 = at_working_precision(q_j1);
  const Real c = qj * sqrt(qj1);
  const Real d = qj * qj1;
  const Real vertex = c / 4;
  if (!at_least(vertex, Real(1)))
    throw DomainError("check_psi_positive: parabola vertex fell below 1 "
                      "(impossible in the stated regime)");

  return make_report(
      "psi_positive", {{"q(j)", qj}, {"q(j+1)", qj1}}, 2 - 2 * c + d, Real(0),
      "vertex c/4 = " + fmt_sci(vertex, 6) +
          " >= 1, so the minimum over [-1, 1] sits at t = 1");
}

}  // namespace lpcert
