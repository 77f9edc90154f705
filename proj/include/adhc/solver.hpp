#pragma once

#include <cstdint>
#include <optional>

#include "adhc/graph.hpp"
#include "adhc/walk.hpp"

namespace adhc {

// Memoized search over states (visited-mask, last vertex, direction of the
// arc that entered last). The memo marks states with no completion, so NONE
// is an exhaustive-search guarantee. Memory is the binding constraint:
// 2^(n-1) * n * 2 bits (about 50 MB at n = 24).
inline constexpr int kSolverMaxVertices = 24;

enum class SolveVerdict {
  Found,
  None,            // exhaustive: no such cycle/path exists
  BudgetExceeded,  // search truncated; never to be read as NONE
};

const char* to_string(SolveVerdict v);

struct SolveOptions {
  std::optional<std::uint64_t> budget_states;  // cap on state expansions
  int threads = 1;  // > 1 parallelizes over first-arc subtrees
};

struct SolveResult {
  SolveVerdict verdict = SolveVerdict::None;
  std::optional<AntidirectedWalk> witness;  // present iff Found; always validated
  std::uint64_t states_expanded = 0;
  double millis = 0.0;
};

// Decides whether g has an antidirected Hamilton cycle. Odd or tiny n is an
// immediate NONE with zero states expanded. The start vertex is fixed to id 0
// and both of its roles (source/sink) are tried. With threads > 1 the
// first-arc subtrees run in parallel over a shared memo; the verdict and the
// witness (lowest subtree in serial order wins) match the serial run, but
// states_expanded becomes schedule-dependent and a budget may trip at a
// different point than it would serially.
SolveResult find_adhc(const OrientedGraph& g, const SolveOptions& opts = {});

// Decides whether g has an antidirected Hamilton path from x to y whose first
// arc (at x) has the given direction. Exhaustive under the same state space.
SolveResult find_adhp_between(const OrientedGraph& g, int x, int y, StepDir pattern,
                              const SolveOptions& opts = {});

}  // namespace adhc
