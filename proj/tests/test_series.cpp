// Series-core tests.  The ground truth throughout is exact rational
// arithmetic: every built-in family admits rational coefficients when its
// parameter is rational (partial theta needs the square root of the
// parameter to be rational, so a^2 in {4, 81/25, 9}), which makes partial
// sums computable without rounding.  A certified evaluation must then land
// within its own error bound of the exact value.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstddef>
#include <vector>

#include "lpcert/errors.hpp"
#include "lpcert/series.hpp"
#include "oracle.hpp"

using lpcert::CoefficientSequence;
using lpcert::Complex;
using lpcert::Real;
using oracle::horner;
using oracle::horner_c;
using oracle::kummer_coeffs;
using oracle::Rat;
using oracle::rat_abs;
using oracle::rat_pow;
using oracle::rel_close;
using oracle::theta_coeffs;
using oracle::to_real;

namespace {

// |value - exact partial sum| must be covered by the certificate plus the
// (rationally bounded) tail of the oracle itself.
void check_against_oracle(const CoefficientSequence& f,
                          const std::vector<Rat>& coeffs, const Rat& z) {
  const Rat tail = 2 * rat_abs(coeffs.back() * rat_pow(z, coeffs.size() - 1));
  const std::vector<Rat> head(coeffs.begin(), coeffs.end() - 1);
  const Rat oracle = horner(head, z);
  lpcert::EvalResult r = f.evaluate(to_real(z), Real("1e-12"));
  CHECK(abs(r.value - to_real(oracle)) <= r.bound + to_real(tail));
  CHECK(r.bound >= 0);
  CHECK(r.terms >= 1);
  CHECK(r.digits_used >= lpcert::working_digits());
}

}  // namespace

TEST_CASE("working precision plumbing") {
  CHECK(lpcert::working_digits() == lpcert::initial_digits());
  const unsigned d0 = lpcert::working_digits();
  Real third = Real(1) / 3;
  {
    lpcert::PrecisionScope scope(d0 + 30);
    CHECK(lpcert::working_digits() == d0 + 30);
    Real wide = lpcert::at_working_precision(third);
    CHECK(wide == third);  // widening is exact
    CHECK(wide.precision() >= d0 + 30);
    CHECK(lpcert::work_eps() < Real("1e-60"));
  }
  CHECK(lpcert::working_digits() == d0);
}

TEST_CASE("partial theta coefficients, p and q") {
  auto f = CoefficientSequence::partial_theta(Real(4));  // a = 2
  const Real tol = 64 * lpcert::work_eps();
  CHECK(rel_close(f.coeff(0), Real(1), tol));
  CHECK(rel_close(f.coeff(3), Real(1) / 512, tol));  // 2^{-9}
  CHECK(rel_close(f.log_coeff(3), Real(-9) * log(Real(2)), tol));
  CHECK(rel_close(f.p(1), Real(2), tol));   // a^{2n-1}
  CHECK(rel_close(f.p(2), Real(8), tol));
  CHECK(f.q(2) == 4);  // stored exactly
  CHECK(f.q(117) == 4);
  CHECK(f.tail_rule() == lpcert::TailRule::ConstantFrom);
  CHECK(f.tail_rule_index() == 2);
  CHECK(f.tail_rule_value() == 4);
  CHECK(rel_close(f.witness_interval_radius(), Real(8), tol));
  CHECK(!f.finite());
  CHECK_THROWS_AS(f.q(1), lpcert::DomainError);
  CHECK_THROWS_AS(f.p(0), lpcert::DomainError);
}

TEST_CASE("q-Kummer coefficients, p and q") {
  auto f = CoefficientSequence::q_kummer(Real(2));
  const Real tol = 64 * lpcert::work_eps();
  CHECK(rel_close(f.coeff(1), Real(1) / 3, tol));
  CHECK(rel_close(f.coeff(3), Real(1) / 135, tol));  // 1/(3*5*9)
  CHECK(rel_close(f.p(3), Real(9), tol));            // 2^3 + 1
  CHECK(rel_close(f.q(2), Real(5) / 3, tol));
  CHECK(rel_close(f.q(10), Real(1025) / 513, tol));
  CHECK(f.tail_rule() == lpcert::TailRule::IncreasingLimit);
  CHECK(f.tail_rule_value() == 2);
}

TEST_CASE("quotient-specified reconstruction round-trip") {
  auto g = CoefficientSequence::q_kummer(Real(3));
  const std::size_t n = 50;
  lpcert::QuotientProfile pr = lpcert::quotients(g, n);
  std::vector<Real> qs(pr.q.begin(), pr.q.end());
  auto f = CoefficientSequence::quotient_specified(g.coeff(0), g.coeff(1),
                                                   std::move(qs));
  for (std::size_t k = 0; k <= n; ++k)
    CHECK(rel_close(f.coeff(k), g.coeff(k), Real("1e-28")));
}

TEST_CASE("quotient-specified exact ladder") {
  // q_n == 4 for all n gives a_k = 4^{-k(k-1)/2}.
  auto f = CoefficientSequence::quotient_specified(Real(1), Real(1), {Real(4)});
  const Real tol = 64 * lpcert::work_eps();
  CHECK(rel_close(f.coeff(2), Real(1) / 4, tol));
  CHECK(rel_close(f.coeff(3), Real(1) / 64, tol));
  CHECK(rel_close(f.coeff(4), Real(1) / 4096, tol));
  CHECK(f.q(2) == 4);
  CHECK(f.q(9) == 4);  // repeat-last tail
  CHECK(f.tail_rule() == lpcert::TailRule::ConstantFrom);
  CHECK(f.tail_rule_index() == 2);
}

TEST_CASE("evaluate matches the rational oracle (partial theta)") {
  for (const Rat& a : {Rat(2), Rat(9, 5), Rat(3)}) {
    auto f = CoefficientSequence::partial_theta(to_real(a * a));
    std::vector<Rat> coeffs = theta_coeffs(a, 30);
    for (const Rat& z :
         {Rat(-3, 2), Rat(-3), Rat(7, 4), Rat(-49, 16), Rat(1, 100)})
      check_against_oracle(f, coeffs, z);
  }
}

TEST_CASE("evaluate matches the rational oracle (q-Kummer)") {
  for (const Rat& a : {Rat(2), Rat(3, 2)}) {
    auto f = CoefficientSequence::q_kummer(to_real(a));
    std::vector<Rat> coeffs = kummer_coeffs(a, 60);
    for (const Rat& z : {Rat(-5, 2), Rat(-9), Rat(3, 2)})
      check_against_oracle(f, coeffs, z);
  }
}

TEST_CASE("evaluate matches the rational oracle (explicit list)") {
  std::vector<Rat> coeffs{Rat(1), Rat(1), Rat(1, 4), Rat(1, 64), Rat(1, 4096)};
  std::vector<Real> rc;
  for (const Rat& c : coeffs) rc.push_back(to_real(c));
  auto f = CoefficientSequence::explicit_list(rc);
  for (const Rat& z : {Rat(-2), Rat(-4), Rat(16)}) {
    const Rat oracle = horner(coeffs, z);
    lpcert::EvalResult r = f.evaluate(to_real(z), Real("1e-12"));
    CHECK(abs(r.value - to_real(oracle)) <= r.bound);
  }
}

TEST_CASE("evaluate at zero returns a_0 with a tiny bound") {
  auto f = CoefficientSequence::partial_theta(Real(4));
  lpcert::EvalResult r = f.evaluate(Real(0), Real("1e-12"));
  CHECK(rel_close(r.value, Real(1), 8 * lpcert::work_eps()));
  CHECK(r.tail == 0);
  CHECK(r.terms == 1);
}

TEST_CASE("complex evaluation agrees with the real path and the oracle") {
  auto f = CoefficientSequence::partial_theta(Real(4));
  const Rat a(2);
  std::vector<Rat> coeffs = theta_coeffs(a, 30);

  // Real axis through the complex entry point.
  lpcert::EvalResult re = f.evaluate(Real(-3), Real("1e-12"));
  lpcert::EvalResultC rc = f.evaluate(Complex(Real(-3), Real(0)), Real("1e-12"));
  CHECK(rc.value.im == 0);
  CHECK(abs(rc.value.re - re.value) <= rc.bound + re.bound);

  // Genuinely complex point against the exact partial sum.
  const Rat zr(-3, 2), zi(1, 2);
  auto [osr, osi] = horner_c(coeffs, zr, zi);
  lpcert::EvalResultC r =
      f.evaluate(Complex(to_real(zr), to_real(zi)), Real("1e-12"));
  // Oracle tail: |z| < 2 and the terms decay faster than 4^{-k} there.
  const Real otail = to_real(2 * rat_abs(coeffs.back()) * rat_pow(Rat(2), 30));
  CHECK(abs(r.value.re - to_real(osr)) <= r.bound + otail);
  CHECK(abs(r.value.im - to_real(osi)) <= r.bound + otail);

  // Conjugate symmetry is exact: every rounding mirrors.
  lpcert::EvalResultC rbar =
      f.evaluate(Complex(to_real(zr), -to_real(zi)), Real("1e-12"));
  CHECK(rbar.value.re == r.value.re);
  CHECK(rbar.value.im == -r.value.im);
}

TEST_CASE("constant quotient 4 is the rescaled theta series") {
  // q_n == 4 with a_0 = a_1 = 1 has a_k = 2^{k-k^2}, i.e. g_2(2z).
  auto f = CoefficientSequence::quotient_specified(Real(1), Real(1), {Real(4)});
  auto g = CoefficientSequence::partial_theta(Real(4));
  for (double zd : {-2.5, -1.0, 0.75}) {
    lpcert::EvalResult rf = f.evaluate(Real(zd), Real("1e-12"));
    lpcert::EvalResult rg = g.evaluate(2 * Real(zd), Real("1e-12"));
    CHECK(abs(rf.value - rg.value) <= rf.bound + rg.bound);
  }
}

TEST_CASE("cancellation escalates the working precision") {
  // f(z) = 1 + z at z = -(1 - 2^-100): a hundred bits cancel.  Both z and
  // the exact result 2^-100 are representable at the default precision, so
  // the certificate can be checked against the exact value.
  auto f = CoefficientSequence::explicit_list({Real(1), Real(1)});
  const Real tiny = pow(Real(2), -100);
  const Real z = -(1 - tiny);  // exact: needs 101 bits
  lpcert::EvalResult r = f.evaluate(z, Real("1e-12"));
  CHECK(r.digits_used > lpcert::working_digits());
  CHECK(abs(r.value - tiny) <= r.bound);
  CHECK(r.bound < tiny);  // the certificate resolves the sign
  CHECK(r.value > 0);
}

TEST_CASE("evaluation is deterministic across cache rebuilds") {
  auto f = CoefficientSequence::partial_theta(Real("3.24"));
  lpcert::EvalResult first = f.evaluate(Real(-2), Real("1e-12"));
  {
    lpcert::PrecisionScope scope(2 * lpcert::working_digits());
    f.evaluate(Real(-2), Real("1e-12"));  // repopulates the cache wider
  }
  lpcert::EvalResult again = f.evaluate(Real(-2), Real("1e-12"));
  CHECK(first.value == again.value);
  CHECK(first.bound == again.bound);
  CHECK(first.terms == again.terms);
}

TEST_CASE("section evaluation matches the rational oracle") {
  const Rat a(9, 5);  // a^2 = 3.24
  auto f = CoefficientSequence::partial_theta(to_real(a * a));
  std::vector<Rat> coeffs = theta_coeffs(a, 7);
  for (const Rat& z : {Rat(-2), Rat(-1, 3), Rat(5)}) {
    // Full head [0..7].
    Rat oracle = horner(coeffs, z);
    lpcert::EvalResult r = f.evaluate_section(0, 7, to_real(z));
    CHECK(abs(r.value - to_real(oracle)) <= r.bound);
    // Consecutive pair [3..4]: a_3 z^3 + a_4 z^4.
    Rat pair = coeffs[3] * rat_pow(z, 3) + coeffs[4] * rat_pow(z, 4);
    lpcert::EvalResult s = f.evaluate_section(3, 4, to_real(z));
    CHECK(abs(s.value - to_real(pair)) <= s.bound);
  }
}

TEST_CASE("truncations and sections") {
  auto f = CoefficientSequence::partial_theta(Real(4));
  const Real tol = 64 * lpcert::work_eps();

  lpcert::TruncationPolynomial t = f.truncate(5);
  CHECK(t.degree == 5);
  CHECK(t.zero_multiplicity == 0);
  CHECK(t.sign.size() == 6);
  for (std::size_t k = 0; k <= 5; ++k)
    CHECK(rel_close(t.coeff(k), f.coeff(k), tol));

  lpcert::TruncationPolynomial s = f.section(2, 6);
  CHECK(s.degree == 4);
  CHECK(s.zero_multiplicity == 2);
  CHECK(rel_close(s.coeff(0), f.coeff(2), tol));
  CHECK(rel_close(s.coeff(4), f.coeff(6), tol));

  // Balance radius of [0..4]: exp((ln a_0 - ln a_4)/4) = 2^4.
  lpcert::TruncationPolynomial b = f.section(0, 4);
  CHECK(rel_close(b.balance_radius, Real(16), tol));
}

TEST_CASE("recommended degree covers the requested radius") {
  auto f = CoefficientSequence::partial_theta(Real(4));
  const Real radius(10), rel_tol("1e-12");
  std::size_t n = f.recommended_degree(radius, rel_tol);
  CHECK(n >= 4);
  CHECK(n <= 200);
  // The certified tail at that degree sits below rel_tol * (largest term).
  Real max_term(0);
  for (std::size_t k = 0; k <= n; ++k) {
    Real t = exp(f.log_coeff(k) + Real(static_cast<unsigned long>(k)) * log(radius));
    if (t > max_term) max_term = t;
  }
  Real tail = 2 * exp(f.log_coeff(n + 1) +
                      Real(static_cast<unsigned long>(n + 1)) * log(radius));
  CHECK(tail <= rel_tol * max_term * (1 + Real("1e-20")));
}

TEST_CASE("min_p_from sees dips in explicit lists") {
  // p = (1/2, 2, 1): the running minimum must look past the first entry.
  auto f = CoefficientSequence::explicit_list(
      {Real(1), Real(2), Real(1), Real(1)});
  const Real tol = 64 * lpcert::work_eps();
  CHECK(rel_close(f.min_p_from(1), Real(1) / 2, tol));
  CHECK(rel_close(f.min_p_from(2), Real(1), tol));
  CHECK(rel_close(f.min_p_from(3), Real(1), tol));
  CHECK(isinf(f.min_p_from(4)));
}

TEST_CASE("quotient profile flags monotonicity and extremes") {
  auto g = CoefficientSequence::q_kummer(Real(2));
  lpcert::QuotientProfile pr = lpcert::quotients(g, 10);
  CHECK(pr.q.size() == 9);
  CHECK(pr.p.size() == 10);
  CHECK(pr.monotone_nondecreasing);
  CHECK(pr.min_q_index == 2);
  CHECK(pr.max_q_index == 10);
  CHECK(rel_close(pr.min_q, Real(5) / 3, 64 * lpcert::work_eps()));

  // q = (5, 2.4): a dip.
  auto e = CoefficientSequence::explicit_list(
      {Real(1), Real(1), Real(1) / 5, Real(1) / 60});
  lpcert::QuotientProfile dp = lpcert::quotients(e, 3);
  CHECK(!dp.monotone_nondecreasing);
  CHECK(dp.max_q_index == 2);
  CHECK(dp.min_q_index == 3);
  CHECK_THROWS_AS(lpcert::quotients(e, 4), lpcert::RangeError);
}

TEST_CASE("construction and evaluation errors") {
  CHECK_THROWS_AS(CoefficientSequence::partial_theta(Real(1)),
                  lpcert::DomainError);
  CHECK_THROWS_AS(CoefficientSequence::q_kummer(Real("0.5")),
                  lpcert::DomainError);
  CHECK_THROWS_AS(
      CoefficientSequence::quotient_specified(Real(0), Real(1), {Real(4)}),
      lpcert::DomainError);
  CHECK_THROWS_AS(CoefficientSequence::quotient_specified(Real(1), Real(1), {}),
                  lpcert::DomainError);
  CHECK_THROWS_AS(CoefficientSequence::explicit_list({}), lpcert::DomainError);
  CHECK_THROWS_AS(CoefficientSequence::explicit_list({Real(1), Real(-1)}),
                  lpcert::DomainError);

  auto f = CoefficientSequence::explicit_list({Real(1), Real(1), Real(1)});
  CHECK_THROWS_AS(f.coeff(3), lpcert::RangeError);
  CHECK_THROWS_AS(f.truncate(3), lpcert::DomainError);
  CHECK_THROWS_AS(f.evaluate(Real(1), Real(0)), lpcert::DomainError);
  CHECK_THROWS_AS(f.evaluate(Real(1), Real(2)), lpcert::DomainError);

  // Quotient tail below 1 means p_n -> 0: no convergence for z != 0.
  auto d = CoefficientSequence::quotient_specified(Real(1), Real(1),
                                                   {Real(1) / 2});
  CHECK_THROWS_AS(d.evaluate(Real(-1), Real("1e-12")),
                  lpcert::ConvergenceError);
}
