#include "adhc/expander.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "adhc/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adhc {

namespace {

// Integer size window for tau*n < |S| < (1-tau)*n with exact real boundaries.
struct SizeWindow {
  int lo, hi;  // inclusive
  bool empty() const { return lo > hi; }
  bool contains(int size) const { return size >= lo && size <= hi; }
};

SizeWindow size_window(double tau, int n) {
  int lo = static_cast<int>(std::floor(tau * n)) + 1;
  while (lo > 0 && static_cast<double>(lo - 1) > tau * n) --lo;
  while (!(static_cast<double>(lo) > tau * n)) ++lo;
  int hi = static_cast<int>(std::ceil((1.0 - tau) * n)) - 1;
  while (hi < n && static_cast<double>(hi + 1) < (1.0 - tau) * n) ++hi;
  while (hi >= 0 && !(static_cast<double>(hi) < (1.0 - tau) * n)) --hi;
  return {lo, hi};
}

bool violates(int rn_size, int subset_size, double nu, int n) {
  return static_cast<double>(rn_size) < static_cast<double>(subset_size) + nu * n;
}

struct Violation {
  std::uint64_t order_key;
  std::uint64_t mask;
};

// Enumerates all subsets with the given high-bit prefix in Gray-code order
// over the low bits, maintaining per-vertex in-degree counters and the
// running RN+ size. Returns the first in-window violation of the prefix.
std::optional<Violation> scan_prefix(const OrientedGraph& g, std::uint64_t prefix_base, int low_bits,
                                     int thr, const ExpanderParams& params, const SizeWindow& window,
                                     std::uint64_t& checked) {
  const int n = g.order();
  int cnt[kMaxVertices];
  int rn_size = 0;
  for (int v = 0; v < n; ++v) {
    cnt[v] = g.in_degree_in(v, prefix_base);
    if (cnt[v] >= thr) ++rn_size;
  }
  std::uint64_t mask = prefix_base;
  int size = std::popcount(prefix_base);

  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t idx = 0; idx < steps; ++idx) {
    if (idx != 0) {
      const int u = std::countr_zero(idx);  // Gray code: toggle bit ctz(idx)
      const std::uint64_t ubit = bit_of(u);
      mask ^= ubit;
      if (mask & ubit) {
        ++size;
        for (int w : set_bits(g.out_row(u)))
          if (++cnt[w] == thr) ++rn_size;
      } else {
        --size;
        for (int w : set_bits(g.out_row(u)))
          if (cnt[w]-- == thr) --rn_size;
      }
    }
    if (!window.contains(size)) continue;
    ++checked;
    if (violates(rn_size, size, params.nu, n)) return Violation{prefix_base | idx, mask};
  }
  return std::nullopt;
}

ExpanderReport exact_check(const OrientedGraph& g, const ExpanderParams& params, const ExpanderOptions& opts) {
  const int n = g.order();
  if (n > opts.exact_cap)
    throw std::invalid_argument("EXACT expander check capped at n = " + std::to_string(opts.exact_cap));

  ExpanderReport report;
  const SizeWindow window = size_window(params.tau, n);
  if (window.empty() || n == 0) return report;  // no subset to violate: vacuously an expander

  const int thr = rn_threshold(params.nu, n);
  const int low_bits = std::max(0, n - 6);  // up to 64 prefix chunks
  const int prefixes = 1 << (n - low_bits);

  constexpr std::uint64_t kNoKey = ~std::uint64_t{0};
  std::atomic<std::uint64_t> skip_hint{kNoKey};  // advisory, for pruning later prefixes
  std::atomic<std::uint64_t> total_checked{0};
  Violation winner{kNoKey, 0};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, opts.threads))
#endif
  for (int p = 0; p < prefixes; ++p) {
    const std::uint64_t base = static_cast<std::uint64_t>(p) << low_bits;
    // skip prefixes provably after an already-found violation
    if (base > skip_hint.load(std::memory_order_relaxed)) continue;
    std::uint64_t checked = 0;
    const auto hit = scan_prefix(g, base, low_bits, thr, params, window, checked);
    total_checked.fetch_add(checked, std::memory_order_relaxed);
    if (hit) {
#ifdef _OPENMP
#pragma omp critical(adhc_expander_winner)
#endif
      {
        if (hit->order_key < winner.order_key) {
          winner = *hit;
          skip_hint.store(winner.order_key, std::memory_order_relaxed);
        }
      }
    }
  }

  report.subsets_checked = total_checked.load(std::memory_order_relaxed);
  if (winner.order_key != kNoKey) {
    report.is_expander = false;
    report.witness = VertexSet(n, winner.mask);
    report.rn_plus = robust_out_neighborhood(g, VertexSet(n, winner.mask), params.nu);
  }
  return report;
}

ExpanderReport sampled_check(const OrientedGraph& g, const ExpanderParams& params, const ExpanderOptions& opts) {
  const int n = g.order();
  ExpanderReport report;
  const SizeWindow window = size_window(params.tau, n);
  if (window.empty() || n == 0) return report;  // vacuous, conclusive

  SplitMix64 rng(opts.seed);
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) ids[static_cast<std::size_t>(v)] = v;

  for (int trial = 0; trial < opts.samples; ++trial) {
    const int size = window.lo + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(window.hi - window.lo + 1)));
    // uniform size-subset by partial Fisher-Yates
    for (int i = 0; i < size; ++i) {
      const int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - i)));
      std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
    }
    std::uint64_t mask = 0;
    for (int i = 0; i < size; ++i) mask |= bit_of(ids[static_cast<std::size_t>(i)]);
    ++report.subsets_checked;

    const VertexSet s(n, mask);
    const VertexSet rn = robust_out_neighborhood(g, s, params.nu);
    if (violates(rn.count(), size, params.nu, n)) {
      report.is_expander = false;  // certified by the witness
      report.witness = s;
      report.rn_plus = rn;
      return report;
    }
  }
  report.conclusive = false;  // "no violation in k samples" is not a proof
  return report;
}

}  // namespace

int rn_threshold(double nu, int n) {
  int t = static_cast<int>(std::ceil(nu * n));
  while (t > 0 && static_cast<double>(t - 1) >= nu * n) --t;
  while (static_cast<double>(t) < nu * n) ++t;
  return t;
}

VertexSet robust_out_neighborhood(const OrientedGraph& g, const VertexSet& s, double nu) {
  const int n = g.order();
  VertexSet rn(n);
  for (int v = 0; v < n; ++v)
    if (static_cast<double>(g.in_degree_in(v, s.bits)) >= nu * n) rn.add(v);
  return rn;
}

ExpanderReport is_robust_outexpander(const OrientedGraph& g, const ExpanderParams& params, ExpanderMode mode,
                                     const ExpanderOptions& opts) {
  if (!params.valid()) throw std::invalid_argument("expander params need 0 < nu <= tau < 1");
  return mode == ExpanderMode::Exact ? exact_check(g, params, opts) : sampled_check(g, params, opts);
}

}  // namespace adhc
