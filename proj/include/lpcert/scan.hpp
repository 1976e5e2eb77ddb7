#ifndef LPCERT_SCAN_HPP
#define LPCERT_SCAN_HPP

#include <cstddef>
#include <functional>
#include <utility>

#include "lpcert/real.hpp"

namespace lpcert {

/// Node placement for the dense pass of a sign scan.
enum class NodeStyle {
  Chebyshev,  ///< cos-spaced interior nodes (sign-witness intervals)
  Geometric   ///< log-spaced magnitudes (intervals like (-a^3, -a))
};

/// Policy for certified sign scans over an interval [lo, hi], hi <= 0.
struct ScanPolicy {
  std::size_t nodes = 512;
  NodeStyle style = NodeStyle::Chebyshev;
  Real rel_tol = Real("1e-12");    ///< evaluation tolerance, squared per round
  int max_rounds = 4;              ///< precision doublings after the first pass
  std::size_t refine_count = 3;    ///< golden-section refinement seeds
  std::size_t golden_iters = 48;
  bool include_left_endpoint = true;   ///< closed at lo
  bool include_right_endpoint = false; ///< hi is typically 0 where f > 0
};
// An excluded endpoint is approached by a geometric ladder of extra samples
// (relative distances 1e-4 .. 1e-28 of the width): a root pinned to an open
// endpoint whose derivative flips puts the certifiable dip in a sliver no
// node reaches.

/// One certified evaluation: |f(x) - value| <= bound.
struct ScanPoint {
  Real x;
  Real value;
  Real bound;
};

/// Result of a certified sign scan.  Exactly one of witness_found /
/// all_positive is set; an undecidable scan throws UnresolvedError instead.
struct ScanOutcome {
  bool witness_found = false;  ///< some point has value + bound <= 0
  bool all_positive = false;   ///< every evaluated point has value - bound > 0
  ScanPoint best;              ///< the witness, or the smallest certified value
  bool at_left_endpoint = false;  ///< best.x is exactly lo
  unsigned digits_used = 0;    ///< widest precision any point needed
  std::size_t evaluations = 0;
};

/// Certified evaluation callback: (x, rel_tol) -> (value, bound) at the
/// ambient working precision.
using PointEvaluator =
    std::function<std::pair<Real, Real>(const Real& x, const Real& rel_tol)>;

/// Hunt for a certified non-positive value of f on [lo, hi] (hi <= 0):
/// dense nodes, golden-section refinement around the smallest values (f is
/// not assumed unimodal; refinement is a local hunt, the claim on FAIL is
/// about evaluated points only), then precision escalation restricted to
/// points whose bounds straddle zero.  Ties in the min-reduction resolve
/// toward smaller |x|.  Throws UnresolvedError when straddlers survive all
/// rounds.
ScanOutcome scan_for_nonpositive(const PointEvaluator& eval, const Real& lo,
                                 const Real& hi, const ScanPolicy& policy);

}  // namespace lpcert

#endif
