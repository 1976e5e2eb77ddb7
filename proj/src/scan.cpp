#include "lpcert/scan.hpp"

#include <algorithm>
#include <vector>

#include "lpcert/complex.hpp"
#include "lpcert/errors.hpp"

namespace lpcert {

namespace {

struct PoolEntry {
  Real x;
  Real value;
  Real bound;
  bool certified_nonpositive() const { return value + bound <= 0; }
  bool certified_positive() const { return value - bound > 0; }
};

// Pool index of the entry with the smallest value among those `keep`
// selects; ties resolve toward smaller |x| because the pool is kept in
// |x|-ascending order and the comparison is strict.
template <typename Keep>
std::size_t argmin_value(const std::vector<PoolEntry>& pool, Keep keep) {
  std::size_t best = pool.size();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!keep(pool[i])) continue;
    if (best == pool.size() || pool[i].value < pool[best].value) best = i;
  }
  return best;
}

}  // namespace

ScanOutcome scan_for_nonpositive(const PointEvaluator& eval, const Real& lo,
                                 const Real& hi, const ScanPolicy& policy) {
  if (!(lo < hi)) throw DomainError("scan: need lo < hi");
  if (hi > 0) throw DomainError("scan: interval must satisfy hi <= 0");
  if (policy.nodes < 2) throw DomainError("scan: need at least two nodes");

  const unsigned d0 = working_digits();
  unsigned digits_used = d0;
  std::size_t evaluations = 0;
  Real tol = policy.rel_tol;

  auto probe = [&](const Real& x) -> PoolEntry {
    auto [value, bound] = eval(x, tol);
    ++evaluations;
    return PoolEntry{x, value, bound};
  };

  // Dense pass: nodes in |x|-ascending order (x descending, all x <= 0).
  std::vector<PoolEntry> pool;
  pool.reserve(policy.nodes + 2 + policy.refine_count * policy.golden_iters);
  {
    std::vector<Real> xs;
    xs.reserve(policy.nodes + 2);
    if (policy.include_right_endpoint) xs.push_back(hi);
    const std::size_t k = policy.nodes;
    if (policy.style == NodeStyle::Chebyshev) {
      const Real mid = (lo + hi) / 2, half = (hi - lo) / 2;
      for (std::size_t i = 0; i < k; ++i) {
        Real theta = pi() * (2 * Real(static_cast<unsigned long>(i)) + 1) /
                     (2 * Real(static_cast<unsigned long>(k)));
        xs.push_back(mid + half * cos(theta));  // cos decreasing: x descending
      }
    } else {
      // Magnitudes log-spaced strictly inside (|hi|, |lo|); needs hi < 0.
      if (!(hi < 0))
        throw DomainError("scan: geometric nodes need a negative interval");
      const Real llo = log(-lo), lhi = log(-hi);
      for (std::size_t i = 0; i < k; ++i) {
        Real t = (2 * Real(static_cast<unsigned long>(i)) + 1) /
                 (2 * Real(static_cast<unsigned long>(k)));
        xs.push_back(-exp(lhi + t * (llo - lhi)));
      }
    }
    if (policy.include_left_endpoint) xs.push_back(lo);
    // Excluded endpoints get a geometric approach ladder: a sign change can
    // hide in a sliver next to an open endpoint (a root pinned to the
    // endpoint whose derivative flips), far closer than any node.  The
    // ladder samples strictly inside, down to 1e-28 of the interval width.
    {
      const Real width = hi - lo;
      Real eta = Real("1e-4");
      for (int k = 0; k < 7; ++k, eta = eta * Real("1e-4")) {
        if (!policy.include_left_endpoint) xs.push_back(lo + eta * width);
        if (!policy.include_right_endpoint) xs.push_back(hi - eta * width);
      }
    }
    std::sort(xs.begin(), xs.end(), [](const Real& a, const Real& b) { return a > b; });
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (const Real& x : xs) pool.push_back(probe(x));
  }

  auto finish = [&](std::size_t idx, bool witness) {
    ScanOutcome out;
    out.witness_found = witness;
    out.all_positive = !witness;
    out.best = ScanPoint{pool[idx].x, pool[idx].value, pool[idx].bound};
    out.at_left_endpoint = (pool[idx].x == lo);
    out.digits_used = digits_used;
    out.evaluations = evaluations;
    return out;
  };

  {
    std::size_t w = argmin_value(
        pool, [](const PoolEntry& e) { return e.certified_nonpositive(); });
    if (w < pool.size()) return finish(w, true);
  }

  // Local golden-section hunt below the smallest node values: a dip can
  // cross zero between adjacent nodes.
  {
    std::vector<std::size_t> order(pool.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return pool[a].value < pool[b].value;
    });
    const Real invphi = (sqrt(Real(5)) - 1) / 2;
    const std::size_t seeds = std::min(policy.refine_count, order.size());
    const std::size_t dense_end = pool.size();
    for (std::size_t s = 0; s < seeds; ++s) {
      std::size_t i = order[s];
      // Bracket with the dense-pass neighbours in x (pool is x-descending).
      Real a = (i + 1 < dense_end) ? pool[i + 1].x : pool[i].x;
      Real b = (i > 0) ? pool[i - 1].x : pool[i].x;
      if (!(a < b)) continue;
      Real c = b - invphi * (b - a);
      Real d = a + invphi * (b - a);
      PoolEntry pc = probe(c), pd = probe(d);
      pool.push_back(pc);
      pool.push_back(pd);
      for (std::size_t it = 0; it < policy.golden_iters; ++it) {
        if (pc.value < pd.value) {
          b = d;
          d = c;
          pd = pc;
          c = b - invphi * (b - a);
          pc = probe(c);
          pool.push_back(pc);
        } else {
          a = c;
          c = d;
          pc = pd;
          d = a + invphi * (b - a);
          pd = probe(d);
          pool.push_back(pd);
        }
        if (pool.back().certified_nonpositive()) break;
      }
    }
    std::stable_sort(pool.begin(), pool.end(),
                     [](const PoolEntry& p, const PoolEntry& q) { return p.x > q.x; });
  }

  // Decision and escalation: only straddlers (not certified either way)
  // are re-evaluated at doubled precision and squared tolerance.
  for (int round = 0;; ++round) {
    std::size_t w = argmin_value(
        pool, [](const PoolEntry& e) { return e.certified_nonpositive(); });
    if (w < pool.size()) return finish(w, true);

    std::vector<std::size_t> straddlers;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (!pool[i].certified_positive()) straddlers.push_back(i);

    if (straddlers.empty()) {
      std::size_t m = argmin_value(pool, [](const PoolEntry&) { return true; });
      return finish(m, false);
    }
    if (round >= policy.max_rounds)
      throw UnresolvedError(
          "sign scan could not certify the sign near x = " +
          fmt_sci(pool[straddlers.front()].x, 17) + " after " +
          std::to_string(policy.max_rounds) + " precision escalations");

    tol = tol * tol;
    PrecisionScope scope(d0 << (round + 1));
    digits_used = std::max(digits_used, working_digits());
    for (std::size_t i : straddlers) {
      PoolEntry fresh = probe(pool[i].x);
      pool[i].value = fresh.value;
      pool[i].bound = fresh.bound;
    }
  }
}

}  // namespace lpcert
