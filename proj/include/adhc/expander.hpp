#pragma once

#include <cstdint>
#include <optional>

#include "adhc/graph.hpp"
#include "adhc/vertex_set.hpp"

namespace adhc {

struct ExpanderParams {
  double nu = 0.1;
  double tau = 0.2;
  bool valid() const { return nu > 0.0 && nu <= tau && tau < 1.0; }
};

enum class ExpanderMode { Exact, Sampled };

struct ExpanderOptions {
  int exact_cap = 20;        // EXACT enumerates all subsets; refuse above this order
  int threads = 1;           // EXACT splits the subset space by prefix across threads
  int samples = 2000;        // SAMPLED mode
  std::uint64_t seed = 0;    // SAMPLED mode
};

struct ExpanderReport {
  bool is_expander = true;
  // SAMPLED runs that find no violation cannot certify expansion; they report
  // is_expander=true with conclusive=false. A false verdict always carries a
  // witness and is conclusive in either mode.
  bool conclusive = true;
  std::optional<VertexSet> witness;   // S with tau*n < |S| < (1-tau)*n and |RN+| < |S| + nu*n
  std::optional<VertexSet> rn_plus;   // RN+_nu(S) for the witness
  std::uint64_t subsets_checked = 0;
};

// RN+_nu(S): vertices with at least nu*n in-neighbors in S (membership in S
// not required).
VertexSet robust_out_neighborhood(const OrientedGraph& g, const VertexSet& s, double nu);

// Decides whether g is a robust (nu,tau)-outexpander. EXACT enumerates every
// subset in the size window using Gray-code order with incremental in-degree
// counters; the witness returned is the first violation in prefix-major
// enumeration order regardless of thread count.
ExpanderReport is_robust_outexpander(const OrientedGraph& g, const ExpanderParams& params, ExpanderMode mode,
                                     const ExpanderOptions& opts = {});

// Smallest integer count satisfying "count >= nu * n" with exact real
// comparison; shared by the kernel, the oracle and tests.
int rn_threshold(double nu, int n);

}  // namespace adhc
