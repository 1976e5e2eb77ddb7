// Zero-lab tests.  Root locations are checked against two independent
// oracles: companion-matrix eigenvalues in long double (with Parlett-
// Reinsch balancing, which the graded ladder polynomials need badly), and
// exact rational sign alternation at dyadic separators, which certifies
// real-root counts with no floating point at all.  Disk counts are checked
// for consistency between the winding numbers and the classified roots.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <string>
#include <vector>

#include "lpcert/errors.hpp"
#include "lpcert/series.hpp"
#include "lpcert/zeros.hpp"
#include "oracle.hpp"

using lpcert::CoefficientSequence;
using lpcert::Complex;
using lpcert::ContourPolicy;
using lpcert::DiskCount;
using lpcert::QuotientProfile;
using lpcert::Real;
using lpcert::RootClass;
using lpcert::RootEstimate;
using lpcert::TruncationPolynomial;
using lpcert::ZeroReport;
using oracle::Rat;

namespace {

CoefficientSequence constant_q(const Rat& q) {
  return CoefficientSequence::quotient_specified(Real(1), Real(1),
                                                 {oracle::to_real(q)});
}

long double to_ld(const Real& x) {
  return strtold(lpcert::fmt_sci(x, 21).c_str(), nullptr);
}

// Roots by an entirely separate method: eigenvalues of the balanced
// companion matrix in long double.  The balancing loop is Parlett-Reinsch
// with radix 2 (exact scalings); without it the eigenvalues of these
// graded companions are garbage beyond ~8 decades of coefficient spread.
std::vector<std::complex<long double>> companion_roots(
    const TruncationPolynomial& poly) {
  const int n = static_cast<int>(poly.degree);
  const Real lr = log(poly.balance_radius);
  std::vector<Real> lb(static_cast<std::size_t>(n) + 1);
  Real top = poly.log_mag[0];
  for (int k = 0; k <= n; ++k) {
    lb[static_cast<std::size_t>(k)] = poly.log_mag[static_cast<std::size_t>(k)] + k * lr;
    if (lb[static_cast<std::size_t>(k)] > top) top = lb[static_cast<std::size_t>(k)];
  }
  std::vector<long double> b(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    b[static_cast<std::size_t>(k)] =
        poly.sign[static_cast<std::size_t>(k)] *
        to_ld(exp(lb[static_cast<std::size_t>(k)] - top));

  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  Mat c(n, n);
  c.setZero();
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0L;
  for (int i = 0; i < n; ++i)
    c(i, n - 1) = -b[static_cast<std::size_t>(i)] / b[static_cast<std::size_t>(n)];
  for (bool settled = false; !settled;) {
    settled = true;
    for (int i = 0; i < n; ++i) {
      long double col = 0, row = 0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        col += std::abs(c(j, i));
        row += std::abs(c(i, j));
      }
      if (col == 0 || row == 0) continue;
      long double f = 1;
      while (col < row / 2) { col *= 2; row /= 2; f *= 2; }
      while (col >= row * 2) { col /= 2; row *= 2; f /= 2; }
      if (f != 1) {
        settled = false;
        for (int j = 0; j < n; ++j) c(i, j) /= f;
        for (int j = 0; j < n; ++j) c(j, i) *= f;
      }
    }
  }
  Eigen::EigenSolver<Mat> es(c);
  const long double r = to_ld(poly.balance_radius);
  std::vector<std::complex<long double>> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out.push_back(std::complex<long double>(es.eigenvalues()[i].real(),
                                            es.eigenvalues()[i].imag()) *
                  r);
  return out;
}

// Worst relative distance from any reported root to its nearest eigenvalue.
long double worst_match(const ZeroReport& rep,
                        const std::vector<std::complex<long double>>& eig) {
  long double worst = 0;
  for (const RootEstimate& r : rep.roots) {
    const std::complex<long double> z(to_ld(r.z.re), to_ld(r.z.im));
    long double best = 1e30L;
    for (const auto& e : eig) {
      const long double d = std::abs(e - z) / std::abs(z);
      if (d < best) best = d;
    }
    if (best > worst) worst = best;
  }
  return worst;
}

// Exact-rational certification that the constant-q ladder truncation of
// degree `deg` has >= roots.size() distinct real roots in (last_sep, 0):
// the exact sign of the polynomial must alternate along the separators
// 0 > mid(r_0, r_1) > ... > last_sep, starting positive.  `roots` must be
// sorted by descending real part (nearest zero first).
void certify_real_alternation(const Rat& q, std::size_t deg,
                              const std::vector<Real>& roots,
                              const Rat& last_sep) {
  REQUIRE(roots.size() >= 2);
  const std::vector<Rat> coeffs =
      oracle::quotient_coeffs(Rat(1), Rat(1), {q}, deg);
  std::vector<Rat> seps{Rat(0)};
  for (std::size_t i = 0; i + 1 < roots.size(); ++i)
    seps.push_back(oracle::real_to_rat((roots[i] + roots[i + 1]) / 2));
  seps.push_back(last_sep);
  int expected = 1;
  for (const Rat& s : seps) {
    const Rat value = oracle::horner(coeffs, s);
    CHECK(value != 0);
    CHECK((value > 0 ? 1 : -1) == expected);
    expected = -expected;
  }
}

// Certified-real roots inside |z| < radius, sorted by descending real part.
std::vector<Real> real_roots_inside(const ZeroReport& rep, const Real& radius) {
  std::vector<Real> out;
  for (const RootEstimate& r : rep.roots)
    if ((r.cls == RootClass::RealNegative || r.cls == RootClass::RealPositive) &&
        abs(r.z) < radius)
      out.push_back(r.z.re);
  std::sort(out.begin(), out.end(), [](const Real& a, const Real& b) { return a > b; });
  return out;
}

}  // namespace

TEST_CASE("rho: constant ladders and q-Kummer") {
  auto theta4 = CoefficientSequence::partial_theta(Real(4));
  QuotientProfile prof = lpcert::quotients(theta4, 4);
  CHECK(oracle::rel_close(lpcert::rho(prof, 2), Real(8), Real("1e-30")));
  CHECK(oracle::rel_close(lpcert::rho(prof, 3), Real(32), Real("1e-30")));

  // q-Kummer at a = 2: q_2 = 5/3, q_3 = 9/5, so rho_2 = (5/3) sqrt(9/5).
  auto kum = CoefficientSequence::q_kummer(Real(2));
  QuotientProfile kp = lpcert::quotients(kum, 3);
  CHECK(oracle::rel_close(lpcert::rho(kp, 2), sqrt(Real(5)), Real("1e-30")));
}

TEST_CASE("rho: domain and range errors") {
  auto theta4 = CoefficientSequence::partial_theta(Real(4));
  QuotientProfile prof = lpcert::quotients(theta4, 5);
  CHECK_THROWS_AS(lpcert::rho(prof, 1), lpcert::DomainError);
  // rho_5 needs q_6, but the profile ends at q_5.
  CHECK_THROWS_AS(lpcert::rho(prof, 5), lpcert::RangeError);
}

TEST_CASE("roots: closed forms for degree one and two") {
  // 1 + z/2 has the single root -2.
  auto lin = CoefficientSequence::explicit_list({Real(1), Real(1) / 2});
  ZeroReport rep = lpcert::classify_real(
      lpcert::roots_of_truncation(lin.truncate(1)), Real("1e-10"));
  REQUIRE(rep.roots.size() == 1);
  CHECK(oracle::rel_close(rep.roots[0].z.re, Real(-2), Real("1e-30")));
  CHECK(rep.roots[0].cls == RootClass::RealNegative);
  CHECK(rep.roots[0].simple);
  CHECK(rep.count_real == 1);

  // The theta section 1 + z/2 + z^2/16 = (1 + z/4)^2: a double root at -4,
  // reported as two coincident real roots that are not simple.
  auto theta4 = CoefficientSequence::partial_theta(Real(4));
  ZeroReport dbl = lpcert::classify_real(
      lpcert::roots_of_truncation(theta4.truncate(2)), Real("1e-10"));
  REQUIRE(dbl.roots.size() == 2);
  for (const RootEstimate& r : dbl.roots) {
    CHECK(oracle::rel_close(r.z.re, Real(-4), Real("1e-30")));
    CHECK(r.cls == RootClass::RealNegative);
    CHECK(!r.simple);
  }
  CHECK(dbl.count_real == 2);
  CHECK(dbl.count_nonreal == 0);
}

TEST_CASE("roots: removed z^m factor is carried through") {
  // Section k = 1..3 of the theta series: z (a_1 + a_2 z + a_3 z^2); the
  // quadratic factor is again a perfect square, with double root -16.
  auto theta4 = CoefficientSequence::partial_theta(Real(4));
  ZeroReport rep = lpcert::classify_real(
      lpcert::roots_of_truncation(theta4.section(1, 3)), Real("1e-10"));
  CHECK(rep.zero_multiplicity == 1);
  REQUIRE(rep.roots.size() == 2);
  for (const RootEstimate& r : rep.roots)
    CHECK(oracle::rel_close(r.z.re, Real(-16), Real("1e-30")));
}

TEST_CASE("roots: q = 4 ladder has eight simple negative roots") {
  auto seq = constant_q(Rat(4));
  ZeroReport rep = lpcert::classify_real(
      lpcert::roots_of_truncation(seq.truncate(8)), Real("1e-10"));
  REQUIRE(rep.roots.size() == 8);
  CHECK(rep.count_real == 8);
  CHECK(rep.count_nonreal == 0);
  CHECK(rep.count_unresolved == 0);
  for (const RootEstimate& r : rep.roots) {
    CHECK(r.cls == RootClass::RealNegative);
    CHECK(r.simple);
    CHECK(r.z.re < 0);
    CHECK(r.uncertainty < Real("1e-8") * abs(r.z));
  }

  // Oracle 1: companion eigenvalues agree to 1e-9 on every root.
  CHECK(worst_match(rep, companion_roots(seq.truncate(8))) < 1e-9L);

  // Oracle 2: exact sign alternation at dyadic separators certifies all
  // eight roots as real and distinct (eight changes = the full degree).
  std::vector<Real> roots = real_roots_inside(rep, Real("1e9"));
  REQUIRE(roots.size() == 8);
  certify_real_alternation(Rat(4), 8, roots,
                           2 * oracle::real_to_rat(roots.back()));
}

TEST_CASE("roots: q = 3.1 ladder develops conjugate pairs") {
  auto seq = constant_q(Rat(31, 10));
  // The default residual leaves the outer roots' inclusion radii at about
  // degree * 1e-12, which straddles a 1e-10 axis tube; tighten it so the
  // classification has room.
  ZeroReport rep = lpcert::classify_real(
      lpcert::roots_of_truncation(seq.truncate(32), 1000, Real("1e-16")),
      Real("1e-10"));
  REQUIRE(rep.roots.size() == 32);
  CHECK(rep.count_unresolved == 0);
  CHECK(rep.count_nonreal >= 2);
  CHECK(rep.count_real + rep.count_nonreal == 32);

  // Every member of a pair points at its partner and sits well off the
  // axis; the innermost pair is the one the full series keeps.
  bool found_inner_pair = false;
  for (std::size_t i = 0; i < rep.roots.size(); ++i) {
    const RootEstimate& r = rep.roots[i];
    if (r.cls != RootClass::NonrealPair) continue;
    REQUIRE(r.pair_index >= 0);
    const RootEstimate& partner = rep.roots[static_cast<std::size_t>(r.pair_index)];
    CHECK(partner.cls == RootClass::NonrealPair);
    CHECK(abs(r.z.im) > Real("0.01") * abs(r.z));
    if (abs(r.z) < 5) found_inner_pair = true;
  }
  CHECK(found_inner_pair);

  CHECK(worst_match(rep, companion_roots(seq.truncate(32))) < 1e-8L);
}

TEST_CASE("roots: determinism and failure paths") {
  auto seq = constant_q(Rat(31, 10));
  ZeroReport a = lpcert::roots_of_truncation(seq.truncate(16));
  ZeroReport b = lpcert::roots_of_truncation(seq.truncate(16));
  REQUIRE(a.roots.size() == b.roots.size());
  for (std::size_t i = 0; i < a.roots.size(); ++i) {
    CHECK(oracle::rel_close(a.roots[i].z.re, b.roots[i].z.re, Real("1e-30")));
    CHECK(oracle::rel_close(a.roots[i].z.im, b.roots[i].z.im, Real("1e-30")));
  }

  CHECK_THROWS_AS(lpcert::roots_of_truncation(seq.truncate(8), 1),
                  lpcert::SolverError);
  CHECK_THROWS_AS(lpcert::roots_of_truncation(seq.truncate(0)),
                  lpcert::DomainError);
  CHECK_THROWS_AS(lpcert::roots_of_truncation(seq.truncate(8), 1000, Real(0)),
                  lpcert::DomainError);
  CHECK_THROWS_AS(lpcert::roots_of_truncation(seq.truncate(8), 1000, Real(2)),
                  lpcert::DomainError);
}

TEST_CASE("classify: synthetic reports exercise every branch") {
  auto make = [](std::vector<std::pair<Complex, Real>> spec) {
    ZeroReport rep;
    for (auto& [z, unc] : spec) {
      RootEstimate r;
      r.z = z;
      r.uncertainty = unc;
      rep.roots.push_back(r);
    }
    return rep;
  };
  const Real tol("1e-10");

  // A clear conjugate pair.
  ZeroReport pair = lpcert::classify_real(
      make({{Complex(Real(1), Real("0.3")), Real("1e-20")},
            {Complex(Real(1), Real("-0.3")), Real("1e-20")}}),
      tol);
  CHECK(pair.count_nonreal == 2);
  CHECK(pair.roots[0].cls == RootClass::NonrealPair);
  CHECK(pair.roots[0].pair_index == 1);
  CHECK(pair.roots[1].pair_index == 0);

  // A lone root with tiny imaginary part, well inside the axis tube.
  ZeroReport lone = lpcert::classify_real(
      make({{Complex(Real(-2), Real("2e-15")), Real("1e-13")}}), tol);
  CHECK(lone.roots[0].cls == RootClass::RealNegative);
  CHECK(lone.count_real == 1);

  // Uncertainty straddling the tube boundary: unresolved, not guessed.
  ZeroReport edge = lpcert::classify_real(
      make({{Complex(Real(1), Real("1e-10")), Real("1e-12")}}), tol);
  CHECK(edge.roots[0].cls == RootClass::Unresolved);
  CHECK(edge.count_unresolved == 1);

  // A genuinely distinct pair inside the tube is still a pair: the two
  // estimates are farther apart than their combined uncertainty.
  ZeroReport tight = lpcert::classify_real(
      make({{Complex(Real(-1), Real("3e-11")), Real("1e-12")},
            {Complex(Real(-1), Real("-3e-11")), Real("1e-12")}}),
      tol);
  CHECK(tight.count_nonreal == 2);

  // Two coincident estimates of one double root are real, not a pair.
  ZeroReport dbl = lpcert::classify_real(
      make({{Complex(Real(-4), Real(0)), Real("1e-12")},
            {Complex(Real(-4), Real(0)), Real("1e-12")}}),
      tol);
  CHECK(dbl.count_real == 2);
  CHECK(!dbl.roots[0].simple);

  // A positive real root classifies on the other side of the axis.
  ZeroReport pos = lpcert::classify_real(
      make({{Complex(Real(3), Real(0)), Real("1e-15")}}), tol);
  CHECK(pos.roots[0].cls == RootClass::RealPositive);

  CHECK_THROWS_AS(lpcert::classify_real(ZeroReport{}, tol),
                  lpcert::DomainError);
  ZeroReport one = make({{Complex(Real(1), Real(0)), Real("1e-15")}});
  CHECK_THROWS_AS(lpcert::classify_real(one, Real(0)), lpcert::DomainError);
  CHECK_THROWS_AS(lpcert::classify_real(one, Real(1)), lpcert::DomainError);
}

TEST_CASE("count_zeros_disk: explicit cubic and ladder disks") {
  // All three roots of 1 + z + z^2/4 + z^3/64 lie far inside |z| = 1000.
  auto cubic = CoefficientSequence::explicit_list(
      {Real(1), Real(1), Real(1) / 4, Real(1) / 64});
  DiskCount all = lpcert::count_zeros_disk(cubic, Real(1000));
  CHECK(all.count == 3);
  CHECK(abs(all.winding - 3) < Real("1e-6"));

  // q = 4 ladder: |z| < rho_6 = 4^5 * 2 holds exactly six zeros.
  auto q4 = constant_q(Rat(4));
  DiskCount six = lpcert::count_zeros_disk(q4, Real(2048));
  CHECK(six.count == 6);
  CHECK(six.samples >= 64);
  CHECK(six.min_modulus > 0);

  // q = 3.3 ladder at rho_8, cross-checked against the truncation roots.
  auto q33 = constant_q(Rat(33, 10));
  QuotientProfile prof = lpcert::quotients(q33, 9);
  const Real r8 = lpcert::rho(prof, 8);
  DiskCount eight = lpcert::count_zeros_disk(q33, r8);
  CHECK(eight.count == 8);
  ZeroReport rep = lpcert::roots_of_truncation(q33.truncate(40));
  std::size_t inside = 0;
  for (const RootEstimate& r : rep.roots)
    if (abs(r.z) < r8) ++inside;
  CHECK(inside == 8);
}

TEST_CASE("count_zeros_disk: guards") {
  // (1 + z/2)^3 has a triple zero at -2, exactly on the contour |z| = 2:
  // the phase jump cannot settle and must be reported, not retried forever.
  auto cube = CoefficientSequence::explicit_list(
      {Real(1), Real(3) / 2, Real(3) / 4, Real(1) / 8});
  CHECK_THROWS_AS(lpcert::count_zeros_disk(cube, Real(2)),
                  lpcert::ContourError);

  // An exhausted refinement budget is reported as a contour failure.
  ContourPolicy tiny;
  tiny.initial_samples = 4;
  tiny.max_samples = 6;
  CHECK_THROWS_AS(lpcert::count_zeros_disk(constant_q(Rat(4)), Real(2048), tiny),
                  lpcert::ContourError);

  CHECK_THROWS_AS(lpcert::count_zeros_disk(cube, Real(0)), lpcert::DomainError);
  CHECK_THROWS_AS(lpcert::count_zeros_disk(cube, Real(-1)), lpcert::DomainError);
}

TEST_CASE("alternation: certified signs against exact rationals") {
  for (const Rat& q : {Rat(7, 2), Rat(4)}) {
    auto seq = constant_q(q);
    lpcert::AlternationResult res = lpcert::sign_alternation_check(seq, 20);
    CHECK(res.hypotheses_ok);
    REQUIRE(res.entries.size() == 19);  // k = 2..20
    const std::vector<Rat> coeffs =
        oracle::quotient_coeffs(Rat(1), Rat(1), {q}, 30);
    for (const lpcert::AlternationEntry& e : res.entries) {
      CHECK(e.certified);
      CHECK(e.holds);
      CHECK(e.sign == (e.k % 2 == 0 ? 1 : -1));
      CHECK(e.bound < abs(e.value));
      // Exact rational sign of f at the evaluated point -p_1 rho_k (here
      // p_1 = 1), certified through degree 29 with a rational tail bound.
      const int exact =
          oracle::certified_sign(coeffs, -oracle::real_to_rat(e.rho));
      CHECK(exact == e.sign);
    }
  }

  // The gate refuses sequences that never reach q_2 >= 3.
  lpcert::AlternationResult gate =
      lpcert::sign_alternation_check(CoefficientSequence::q_kummer(Real(2)), 12);
  CHECK(!gate.hypotheses_ok);
  CHECK(gate.entries.empty());
  CHECK(!gate.hypotheses.empty());

  CHECK_THROWS_AS(lpcert::sign_alternation_check(constant_q(Rat(4)), 1),
                  lpcert::DomainError);
}

TEST_CASE("quartic: two roots inside the unit disk across the regime") {
  // Closed-form oracle: substituting u = w + 1/w turns the palindromic
  // quartic into u^2 - c u + (d - 2) = 0; each u gives w^2 - u w + 1 = 0.
  auto oracle_count = [](long double c, long double d) {
    std::vector<std::complex<long double>> roots;
    const std::complex<long double> disc_u = c * c - 4 * (d - 2);
    for (int su : {-1, 1}) {
      const std::complex<long double> u =
          (c + static_cast<long double>(su) * std::sqrt(disc_u)) / 2.0L;
      const std::complex<long double> disc_w = u * u - 4.0L;
      for (int sw : {-1, 1}) {
        const std::complex<long double> w =
            (u + static_cast<long double>(sw) * std::sqrt(disc_w)) / 2.0L;
        roots.push_back(w);
        // Residual sanity on the oracle itself.
        const std::complex<long double> p =
            ((((w - c) * w + d) * w - c) * w + 1.0L);
        CHECK(std::abs(p) < 1e-12L);
      }
    }
    long count = 0;
    for (const auto& w : roots)
      if (std::abs(w) < 1.0L) ++count;
    return count;
  };

  const Real threshold = 2 * cbrt(Real(2));
  struct Case { Real qj, qj1; };
  for (const Case& t : {Case{Real(4), Real(4)},
                        Case{threshold, threshold},
                        Case{Real(3), Real(9)},
                        Case{Real(9), Real(9)}}) {
    const long got = lpcert::quartic_unit_disk_count(t.qj, t.qj1);
    CHECK(got == 2);
    const long double qj = to_ld(t.qj), qj1 = to_ld(t.qj1);
    CHECK(oracle_count(qj * std::sqrt(qj1), qj * qj1) == got);
  }

  // Below the threshold the hypotheses fail; so do descending pairs.
  CHECK_THROWS_AS(lpcert::quartic_unit_disk_count(Real("2.5"), Real(3)),
                  lpcert::DomainError);
  CHECK_THROWS_AS(lpcert::quartic_unit_disk_count(Real(4), Real("3.9")),
                  lpcert::DomainError);
}

TEST_CASE("census: q = 4 ladder is zero-free of pairs") {
  auto seq = constant_q(Rat(4));
  lpcert::CensusTable table = lpcert::nonreal_census(seq, 4, 8, 60);
  REQUIRE(table.rows.size() == 5);
  CHECK(table.stabilized);
  CHECK(table.stabilized_value == 0);
  for (const lpcert::CensusRow& row : table.rows) {
    CHECK(row.winding == static_cast<long>(row.j));
    CHECK(row.real_inside == row.j);
    CHECK(row.nonreal_inside == 0);
    CHECK(row.inferred_nonreal == 0);
    CHECK(row.counts_match);
  }
}

TEST_CASE("census: q = 2.6 ladder stabilizes at one pair") {
  auto seq = constant_q(Rat(13, 5));
  lpcert::CensusTable table = lpcert::nonreal_census(seq, 6, 12, 80);
  REQUIRE(table.rows.size() == 7);
  CHECK(table.stabilized);
  CHECK(table.stabilized_value == 2);

  // Independent eigenvalue census of the same truncation, per disk.
  auto eig = companion_roots(seq.truncate(80));
  for (const lpcert::CensusRow& row : table.rows) {
    CHECK(row.winding == static_cast<long>(row.j));
    CHECK(row.inferred_nonreal == 2);
    CHECK(row.counts_match);
    const long double radius = to_ld(row.radius);
    std::size_t real_in = 0, nonreal_in = 0;
    for (const auto& e : eig) {
      if (std::abs(e) >= radius) continue;
      if (std::abs(e.imag()) <= 1e-3L * std::abs(e)) ++real_in;
      else ++nonreal_in;
    }
    CHECK(real_in == row.real_inside);
    CHECK(nonreal_in == row.nonreal_inside);
  }

  // Exact rational certification of the real count inside the largest
  // disk: sign alternation along dyadic separators down to -radius.
  const lpcert::CensusRow& last = table.rows.back();
  ZeroReport rep = lpcert::classify_real(
      lpcert::roots_of_truncation(seq.truncate(80), 1000, Real("1e-16")),
      Real("1e-8"));
  std::vector<Real> roots = real_roots_inside(rep, last.radius);
  CHECK(roots.size() == last.real_inside);
  certify_real_alternation(Rat(13, 5), 80, roots,
                           -oracle::real_to_rat(last.radius));
}

TEST_CASE("census: input guards") {
  auto q33 = constant_q(Rat(33, 10));
  // Too small a truncation is refused with a usable recommendation.
  try {
    lpcert::nonreal_census(q33, 4, 8, 12);
    FAIL("expected DomainError");
  } catch (const lpcert::DomainError& e) {
    CHECK(std::string(e.what()).find("use degree >=") != std::string::npos);
  }

  // Quotients below 2 * 2^(1/3) and non-monotone lists are refused.
  CHECK_THROWS_AS(
      lpcert::nonreal_census(CoefficientSequence::q_kummer(Real(2)), 4, 8, 60),
      lpcert::DomainError);
  auto wobble = CoefficientSequence::quotient_specified(
      Real(1), Real(1), {Real(4), Real("3.5"), Real(5)});
  CHECK_THROWS_AS(lpcert::nonreal_census(wobble, 4, 8, 60),
                  lpcert::DomainError);
  CHECK_THROWS_AS(lpcert::nonreal_census(q33, 1, 8, 60), lpcert::DomainError);
}
