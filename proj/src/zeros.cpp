#include "lpcert/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lpcert/errors.hpp"

namespace lpcert {

namespace {

// Relative slack for non-strict hypothesis comparisons, matching the
// criteria module's convention.
bool at_least(const Real& x, const Real& threshold) {
  return x >= threshold * (1 - Real("1e-12"));
}

// P(w) and P'(w) by a joint Horner pass over real coefficients.
void horner2(const std::vector<Real>& b, const Complex& w, Complex& p,
             Complex& dp) {
  const std::size_t n = b.size() - 1;
  p = Complex(b[n], Real(0));
  dp = Complex(Real(0), Real(0));
  for (std::size_t k = n; k-- > 0;) {
    dp = dp * w + p;
    p = p * w + Complex(b[k], Real(0));
  }
}

// sum_k |b_k| t^k: the natural magnitude scale for backward error at |w|=t.
Real magnitude_scale(const std::vector<Real>& b, const Real& t) {
  Real s = abs(b.back());
  for (std::size_t k = b.size() - 1; k-- > 0;) s = s * t + abs(b[k]);
  return s;
}

// Certified inclusion radius around z: the disk |w - z| <= n |P/P'|
// contains at least one root, so this is the honest per-root uncertainty.
Real inclusion_radius(const std::vector<Real>& b, const Complex& w) {
  Complex p, dp;
  horner2(b, w, p, dp);
  const Real ap = abs(p);
  const Real adp = abs(dp);
  const Real n = Real(static_cast<unsigned>(b.size() - 1));
  if (adp > 0) return n * ap / adp;
  // Derivative vanished (a root cluster): fall back to the square-root
  // sensitivity a multiple root has to coefficient-level rounding.
  return (1 + abs(w)) * 2 * sqrt(work_eps());
}

// Balanced coefficients b_k = c_k rho^k, normalized so max_k |b_k| = 1.
std::vector<Real> balanced_coefficients(const TruncationPolynomial& poly) {
  const std::size_t n = poly.degree;
  const Real lr = log(at_working_precision(poly.balance_radius));
  std::vector<Real> lb(n + 1);
  Real maxlog = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k <= n; ++k) {
    lb[k] = at_working_precision(poly.log_mag[k]) + Real(static_cast<unsigned>(k)) * lr;
    if (lb[k] > maxlog) maxlog = lb[k];
  }
  std::vector<Real> b(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    b[k] = poly.sign[k] * exp(lb[k] - maxlog);
  return b;
}

// Closed forms for degree 1 and 2 (quadratics use the product trick to
// avoid cancellation in the smaller root).
void closed_form_roots(const std::vector<Real>& b, std::vector<Complex>& w) {
  if (b.size() == 2) {
    w.emplace_back(-b[0] / b[1], Real(0));
    return;
  }
  const Real disc = b[1] * b[1] - 4 * b[0] * b[2];
  const Real noise = 8 * work_eps() * (b[1] * b[1] + abs(4 * b[0] * b[2]));
  if (abs(disc) <= noise) {
    const Complex dbl(-b[1] / (2 * b[2]), Real(0));
    w.push_back(dbl);
    w.push_back(dbl);
  } else if (disc > 0) {
    const Real sq = sqrt(disc);
    const Real s = b[1] > 0 ? -(b[1] + sq) / 2 : -(b[1] - sq) / 2;
    w.emplace_back(s / b[2], Real(0));
    w.emplace_back(b[0] / s, Real(0));
  } else {
    const Real re = -b[1] / (2 * b[2]);
    const Real im = sqrt(-disc) / (2 * b[2]);
    w.emplace_back(re, im);
    w.emplace_back(re, -im);
  }
}

// One adaptive phase-tracking pass around a closed contour.  eval(theta)
// must return (value, certified bound, digits used).  Throws ContourError
// when |f| fails the near-zero guard or the refinement budget runs out.
struct WindingScan {
  Real winding;
  Real min_modulus;
  std::size_t samples = 0;
  unsigned digits_used = 0;
};

struct ContourSample {
  Real theta;
  Real phase;
  Real modulus;
};

template <class Eval>
WindingScan track_winding(Eval&& eval, const ContourPolicy& policy,
                          const std::string& what) {
  const Real two_pi = 2 * pi();
  const Real half_pi = pi() / 2;
  unsigned digits = 0;

  auto probe = [&](Real theta) -> ContourSample {
    if (theta >= two_pi) theta -= two_pi;
    auto [value, bound, dg] = eval(theta);
    const Real m = abs(value);
    if (!(m > policy.modulus_factor * bound))
      throw ContourError(what + ": |f| = " + fmt_sci(m, 3) + " at theta = " +
                         fmt_sci(theta, 3) + " is within " +
                         fmt_sci(policy.modulus_factor, 2) +
                         "x the evaluation bound " + fmt_sci(bound, 3) +
                         "; a zero sits on or near the contour -- perturb "
                         "the radius");
    digits = std::max(digits, dg);
    return {theta, arg(value), m};
  };

  std::vector<ContourSample> pts;
  const std::size_t k0 = std::max<std::size_t>(policy.initial_samples, 8);
  pts.reserve(k0);
  for (std::size_t i = 0; i < k0; ++i)
    pts.push_back(probe(two_pi * (2 * Real(static_cast<unsigned>(i)) + 1) /
                        (2 * Real(static_cast<unsigned>(k0)))));

  auto principal = [&](Real d) {
    while (d > pi()) d -= two_pi;
    while (d <= -pi()) d += two_pi;
    return d;
  };

  // Insert midpoints wherever the phase jumps by pi/2 or more; repeat
  // until all steps are small enough to make the unwrapping unambiguous.
  while (true) {
    std::vector<Real> inserts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const ContourSample& a = pts[i];
      const ContourSample& c = pts[(i + 1) % pts.size()];
      Real dtheta = c.theta - a.theta;
      if (i + 1 == pts.size()) dtheta += two_pi;
      if (abs(principal(c.phase - a.phase)) >= half_pi) {
        // A jump that survives subdivision down to a vanishing arc means
        // the phase genuinely turns by ~pi inside it: a zero sits on (or
        // within ~min_relative_step of) the contour, and no amount of
        // further sampling can disambiguate the winding.
        if (dtheta <= two_pi * policy.min_relative_step)
          throw ContourError(
              what + ": a phase jump persists at sample spacing " +
              fmt_sci(dtheta, 3) +
              "; a zero sits on or near the contour -- perturb the radius");
        inserts.push_back(a.theta + dtheta / 2);
      }
    }
    if (inserts.empty()) break;
    if (pts.size() + inserts.size() > policy.max_samples)
      throw ContourError(what +
                         ": phase steps did not settle below pi/2 within " +
                         std::to_string(policy.max_samples) +
                         " samples; a zero is likely on or near the contour");
    for (const Real& t : inserts) pts.push_back(probe(t));
    std::sort(pts.begin(), pts.end(),
              [](const ContourSample& x, const ContourSample& y) {
                return x.theta < y.theta;
              });
  }

  WindingScan out;
  Real total = 0;
  out.min_modulus = pts.front().modulus;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const ContourSample& a = pts[i];
    const ContourSample& c = pts[(i + 1) % pts.size()];
    total += principal(c.phase - a.phase);
    if (a.modulus < out.min_modulus) out.min_modulus = a.modulus;
  }
  out.winding = total / two_pi;
  out.samples = pts.size();
  out.digits_used = digits;
  return out;
}

long round_to_integer(const Real& winding, const Real& integrality_tol,
                      const std::string& what) {
  const Real nearest = floor(winding + Real(1) / 2);
  if (!(abs(winding - nearest) <= integrality_tol))
    throw ContourError(what + ": winding number " + fmt_sci(winding, 6) +
                       " is not within " + fmt_sci(integrality_tol, 2) +
                       " of an integer; the contour data is inconsistent");
  return std::lround(to_double(nearest));
}

}  // namespace

Real rho(const QuotientProfile& profile, std::size_t j) {
  if (j < 2) throw DomainError("rho: the radii are defined for j >= 2");
  if (profile.q.size() < j)
    throw RangeError("rho: rho_" + std::to_string(j) + " needs q_" +
                     std::to_string(j + 1) + " but the profile ends at q_" +
                     std::to_string(profile.q.size() + 1));
  Real acc = log(at_working_precision(profile.q_n(2)));
  for (std::size_t n = 3; n <= j; ++n)
    acc += log(at_working_precision(profile.q_n(n)));
  acc += log(at_working_precision(profile.q_n(j + 1))) / 2;
  return exp(acc);
}

ZeroReport roots_of_truncation(const TruncationPolynomial& poly,
                               std::size_t max_sweeps,
                               const Real& residual_tol) {
  if (poly.degree < 1)
    throw DomainError("roots_of_truncation: the truncation has no roots");
  if (!(residual_tol > 0 && residual_tol < 1))
    throw DomainError("roots_of_truncation: residual_tol must lie in (0, 1)");

  const std::size_t n = poly.degree;
  const std::vector<Real> b = balanced_coefficients(poly);
  const Real radius = at_working_precision(poly.balance_radius);

  std::vector<Complex> w;
  w.reserve(n);
  std::size_t sweeps = 0;

  if (n <= 2) {
    closed_form_roots(b, w);
  } else {
    // Deterministic start: roots of unity rotated half a step off the real
    // axis (a point started exactly on the axis could only leave it through
    // rounding noise).
    const Real two_pi = 2 * pi();
    for (std::size_t i = 0; i < n; ++i)
      w.push_back(unit_circle(two_pi * (2 * Real(static_cast<unsigned>(i)) + 1) /
                              (2 * Real(static_cast<unsigned>(n)))));

    std::size_t converged = 0;
    bool done = false;
    while (sweeps < max_sweeps && !done) {
      ++sweeps;
      bool any_moved = false;
      converged = 0;
      for (std::size_t i = 0; i < n; ++i) {
        Complex p, dp;
        horner2(b, w[i], p, dp);
        const Real scale = magnitude_scale(b, abs(w[i]));
        if (abs(p) <= residual_tol * scale) {
          ++converged;
          continue;
        }
        any_moved = true;
        const Real lim = 1 + abs(w[i]);
        if (!(abs(dp) > 0)) {
          // Stationary point of P: nudge off it and let the next sweep
          // recover.
          w[i] += lim * Real("1e-3") *
                  unit_circle(Real(static_cast<unsigned>(i)) + Real(1) / 3);
          continue;
        }
        const Complex newton = p / dp;
        Complex repulsion(Real(0), Real(0));
        bool collision = false;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          const Complex diff = w[i] - w[j];
          if (!(norm2(diff) > 0)) {
            collision = true;
            break;
          }
          repulsion += Complex(Real(1), Real(0)) / diff;
        }
        if (collision) {
          w[i] += lim * Real("1e-3") *
                  unit_circle(Real(static_cast<unsigned>(i)) + Real(1) / 3);
          continue;
        }
        const Complex denom = Complex(Real(1), Real(0)) - newton * repulsion;
        Complex step = (norm2(denom) > 0) ? newton / denom : newton;
        const Real sl = abs(step);
        if (sl > lim) step = (lim / sl) * step;
        w[i] -= step;
      }
      done = !any_moved;
    }
    if (!done)
      throw SolverError(
          "roots_of_truncation: simultaneous iteration on " + poly.source +
          " did not reach residual " + fmt_sci(residual_tol, 2) + " after " +
          std::to_string(max_sweeps) + " sweeps (" +
          std::to_string(converged) + " of " + std::to_string(n) +
          " roots had converged; partial results discarded)");
  }

  ZeroReport report;
  report.zero_multiplicity = poly.zero_multiplicity;
  report.source = poly.source;
  report.digits_used = working_digits();
  report.sweeps = sweeps;
  report.roots.reserve(n);
  for (const Complex& wi : w) {
    RootEstimate est;
    est.z = radius * wi;
    est.uncertainty = radius * inclusion_radius(b, wi);
    report.roots.push_back(est);
  }
  return report;
}

ZeroReport classify_real(ZeroReport report, const Real& tol_rel) {
  if (report.roots.empty())
    throw DomainError("classify_real: the report holds no roots");
  if (!(tol_rel > 0 && tol_rel < 1))
    throw DomainError("classify_real: tol_rel must lie in (0, 1)");

  auto& roots = report.roots;
  const std::size_t n = roots.size();
  report.count_real = 0;
  report.count_nonreal = 0;
  report.count_unresolved = 0;

  for (std::size_t i = 0; i < n; ++i) {
    RootEstimate& r = roots[i];
    r.pair_index = -1;

    // Nearest other root (for simplicity) and nearest conjugate partner.
    Real dist_min, conj_min;
    std::size_t conj_at = 0;
    bool have_other = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Real d = abs(roots[j].z - r.z);
      const Real c = abs(roots[j].z - conj(r.z));
      if (!have_other || d < dist_min) dist_min = d;
      if (!have_other || c < conj_min) {
        conj_min = c;
        conj_at = j;
      }
      have_other = true;
    }
    r.simple = !have_other || dist_min > 2 * r.uncertainty;

    // A conjugate partner counts only when it is a *distinct* root: two
    // estimates of one real root also sit within each other's radii.
    bool paired = false;
    if (have_other) {
      const Real combined = r.uncertainty + roots[conj_at].uncertainty;
      paired = conj_min <= combined && abs(roots[conj_at].z - r.z) > combined;
    }

    // gap > 0: inside the axis tube; gap < 0: decisively off the axis.
    const Real gap = tol_rel * abs(r.z) - abs(r.z.im);
    if (abs(gap) <= r.uncertainty) {
      r.cls = RootClass::Unresolved;  // straddles the tolerance boundary
    } else if (gap > 0) {
      if (paired) {
        r.cls = RootClass::NonrealPair;
        r.pair_index = static_cast<int>(conj_at);
      } else {
        r.cls = r.z.re > 0 ? RootClass::RealPositive : RootClass::RealNegative;
      }
    } else if (paired) {
      r.cls = RootClass::NonrealPair;
      r.pair_index = static_cast<int>(conj_at);
    } else {
      // Off the axis with no conjugate partner: real coefficients forbid
      // this, so flag it rather than guess.
      r.cls = RootClass::Unresolved;
    }

    switch (r.cls) {
      case RootClass::RealNegative:
      case RootClass::RealPositive:
        ++report.count_real;
        break;
      case RootClass::NonrealPair:
        ++report.count_nonreal;
        break;
      default:
        ++report.count_unresolved;
        break;
    }
  }
  return report;
}

DiskCount count_zeros_disk(const CoefficientSequence& seq, const Real& radius,
                           const ContourPolicy& policy) {
  if (!(radius > 0))
    throw DomainError("count_zeros_disk: radius must be positive");

  auto eval = [&](const Real& theta) {
    const EvalResultC r =
        seq.evaluate(radius * unit_circle(theta), policy.rel_tol);
    return std::tuple<Complex, Real, unsigned>(r.value, r.bound,
                                               r.digits_used);
  };
  const WindingScan scan = track_winding(eval, policy, "count_zeros_disk");

  DiskCount out;
  out.winding = scan.winding;
  out.count =
      round_to_integer(scan.winding, policy.integrality_tol, "count_zeros_disk");
  out.min_modulus = scan.min_modulus;
  out.samples = scan.samples;
  out.digits_used = scan.digits_used;
  return out;
}

AlternationResult sign_alternation_check(const CoefficientSequence& seq,
                                         std::size_t k_max) {
  if (k_max < 2)
    throw DomainError("sign_alternation_check: k_max must be at least 2");

  AlternationResult out;
  const HypothesisCheck hc = check_mthm1_hypotheses(seq);
  out.hypotheses_ok = hc.ok;
  out.hypotheses = hc.records;
  if (!hc.ok) return out;  // gate failed: no claim, no entries

  for (std::size_t k = 2; k <= k_max; ++k) {
    AlternationEntry entry;
    entry.k = k;
    const int target = (k % 2 == 0) ? 1 : -1;
    unsigned digits = working_digits();
    for (int attempt = 0; attempt <= 3; ++attempt) {
      PrecisionScope scope(digits);
      // Recompute the radius inside the scope so a retry sharpens the
      // evaluation point along with the sum.
      const QuotientProfile prof = quotients(seq, k + 1);
      const Real r = rho(prof, k);
      const Real rel_tol = attempt == 0 ? Real("1e-12") : Real("1e-24");
      const EvalResult res = seq.evaluate(-prof.p_n(1) * r, rel_tol);
      entry.rho = r;
      entry.value = res.value;
      entry.bound = res.bound;
      entry.digits_used = std::max(res.digits_used, digits);
      if (abs(res.value) > res.bound) {
        entry.certified = true;
        entry.sign = res.value > 0 ? 1 : -1;
        entry.holds = entry.sign == target;
        break;
      }
      digits *= 2;
    }
    out.entries.push_back(entry);
  }
  return out;
}

long quartic_unit_disk_count(const Real& q_j, const Real& q_j1) {
  const Real threshold = 2 * pow(Real(2), Real(1) / 3);
  if (!at_least(q_j, threshold) || !at_least(q_j1, threshold))
    throw DomainError(
        "quartic_unit_disk_count: both quotients must be at least 2*2^(1/3) "
        "~= 2.5198, got " +
        fmt_sci(q_j, 6) + " and " + fmt_sci(q_j1, 6));
  if (!(q_j <= q_j1 * (1 + Real("1e-12"))))
    throw DomainError(
        "quartic_unit_disk_count: needs q_j <= q_(j+1); for a descending "
        "pair the parabola minimum on the circle can go negative");

  const Real c = q_j * sqrt(q_j1);
  const Real d = q_j * q_j1;

  // On |w| = 1 the quartic is e^(2 i theta) (4t^2 - 2ct + (d-2)) with
  // t = cos(theta).  The parabola's vertex sits at t = c/4 >= 1 in this
  // regime, so its minimum over [-1, 1] is at t = 1.
  if (!at_least(c, Real(4)))
    throw SolverError(
        "quartic_unit_disk_count: vertex " + fmt_sci(c / 4, 6) +
        " fell left of t = 1, contradicting the quotient preconditions");
  const Real min_on_circle = 2 - 2 * c + d;
  if (!(min_on_circle > 0))
    throw ContourError(
        "quartic_unit_disk_count: minimum on the circle 2 - 2c + d = " +
        fmt_sci(min_on_circle, 6) + " is not positive; a root touches |w| = 1");

  const std::vector<Real> coeffs = {Real(1), -c, d, -c, Real(1)};
  const Real bound = 8 * work_eps() * (2 + 2 * c + d);
  auto eval = [&](const Real& theta) {
    const Complex wpt = unit_circle(theta);
    Complex p, dp;
    horner2(coeffs, wpt, p, dp);
    return std::tuple<Complex, Real, unsigned>(p, bound, working_digits());
  };

  ContourPolicy policy;
  policy.initial_samples = 32;
  const WindingScan scan = track_winding(
      eval, policy,
      "quartic_unit_disk_count (inconsistent with the certified positive "
      "minimum on the circle)");
  return round_to_integer(scan.winding, policy.integrality_tol,
                          "quartic_unit_disk_count");
}

CensusTable nonreal_census(const CoefficientSequence& seq, std::size_t j_lo,
                           std::size_t j_hi, std::size_t degree) {
  if (j_lo < 2 || j_lo > j_hi)
    throw DomainError("nonreal_census: need 2 <= j_lo <= j_hi");
  if (degree < 2)
    throw DomainError("nonreal_census: degree must be at least 2");

  const QuotientProfile prof = quotients(seq, j_hi + 1);
  const Real threshold = 2 * pow(Real(2), Real(1) / 3);
  for (std::size_t n = 2; n <= j_hi + 1; ++n)
    if (!at_least(prof.q_n(n), threshold))
      throw DomainError("nonreal_census: q_" + std::to_string(n) + " = " +
                        fmt_sci(prof.q_n(n), 6) +
                        " falls below 2*2^(1/3) ~= 2.5198; the separation "
                        "radii are not available");
  if (!prof.monotone_nondecreasing)
    throw DomainError("nonreal_census: the quotients must be nondecreasing "
                      "through q_" +
                      std::to_string(j_hi + 1));

  // The truncation must represent the series faithfully out to the largest
  // disk, or its roots say nothing about the zeros counted there.
  const Real scale = prof.p_n(1);
  const Real r_max = scale * rho(prof, j_hi);
  const Real census_tol = Real("1e-12");
  const std::size_t need = seq.recommended_degree(r_max, census_tol);
  if (need > degree)
    throw DomainError("nonreal_census: degree " + std::to_string(degree) +
                      " cannot hold the series at |z| = " + fmt_sci(r_max, 3) +
                      " within " + fmt_sci(census_tol, 2) +
                      "; use degree >= " + std::to_string(need));

  // Solve and classify the truncation's roots, escalating precision until
  // every root inside the largest disk is decisively classified.  The
  // residual is kept well below the classification tube: the certified
  // uncertainty of an outer root is about degree * residual relative to
  // its modulus, and it must not straddle the tube boundary.
  const Real tol_rel = Real("1e-8");
  ZeroReport report;
  unsigned digits = working_digits();
  Real residual = Real("1e-16");
  for (int attempt = 0;; ++attempt) {
    PrecisionScope scope(digits);
    report = classify_real(
        roots_of_truncation(seq.section(0, degree), 1000, residual), tol_rel);
    bool ambiguous = false;
    for (const RootEstimate& r : report.roots)
      if (r.cls == RootClass::Unresolved && abs(r.z) < r_max) ambiguous = true;
    if (!ambiguous) break;
    if (attempt == 2)
      throw UnresolvedError(
          "nonreal_census: root classification stayed ambiguous at " +
          std::to_string(digits) + " digits");
    digits *= 2;
    residual = residual * residual;
  }

  CensusTable table;
  table.degree = degree;
  table.function = seq.describe();
  table.rows.reserve(j_hi - j_lo + 1);

  const ContourPolicy policy{};
  for (std::size_t j = j_lo; j <= j_hi; ++j) {
    CensusRow row;
    row.j = j;
    row.radius = scale * rho(prof, j);
    const DiskCount disk = count_zeros_disk(seq, row.radius, policy);
    row.winding = disk.count;
    for (const RootEstimate& r : report.roots) {
      if (!(abs(r.z) < row.radius)) continue;
      if (r.cls == RootClass::RealNegative || r.cls == RootClass::RealPositive)
        ++row.real_inside;
      else if (r.cls == RootClass::NonrealPair)
        ++row.nonreal_inside;
    }
    row.inferred_nonreal = row.winding - static_cast<long>(row.real_inside);
    row.counts_match =
        static_cast<long>(row.real_inside + row.nonreal_inside) == row.winding;
    table.rows.push_back(row);
  }

  // Stabilized: the trailing rows agree, and once the truncation census
  // matches the winding count the inferred value never grows again.
  const long last = table.rows.back().inferred_nonreal;
  std::size_t run = 0;
  for (auto it = table.rows.rbegin(); it != table.rows.rend(); ++it) {
    if (it->inferred_nonreal != last) break;
    ++run;
  }
  bool monotone_ok = true;
  bool matched = false;
  long prev = 0;
  for (const CensusRow& row : table.rows) {
    if (matched && row.inferred_nonreal > prev) monotone_ok = false;
    if (row.counts_match) {
      matched = true;
      prev = row.inferred_nonreal;
    }
  }
  table.stabilized = (run >= 2 || table.rows.size() == 1) && monotone_ok;
  table.stabilized_value = last;
  return table;
}

}  // namespace lpcert
