#pragma once

#include "adhc/expander.hpp"
#include "adhc/graph.hpp"
#include "adhc/solver.hpp"
#include "adhc/walk.hpp"

namespace adhc {

// Reference implementations, deliberately written from the definitions with
// none of the solver/kernel machinery. They exist to cross-check the fast
// paths and stay independent of them.

inline constexpr int kOracleMaxVertices = 10;  // factorial blow-up

// Antidirected Hamilton cycle decision by enumerating all cyclic vertex
// orders (vertex 0 fixed) and both alternation phases.
SolveResult adhc_oracle(const OrientedGraph& g);

// Antidirected Hamilton path decision between fixed endpoints with a fixed
// first-arc direction, by enumerating all vertex orders.
SolveResult adhp_oracle(const OrientedGraph& g, int x, int y, StepDir pattern);

// Robust-outexpander decision straight from the definition: every subset in
// the size window, RN+ recomputed from scratch per subset, subsets visited in
// increasing mask order.
ExpanderReport robust_outexpander_oracle(const OrientedGraph& g, const ExpanderParams& params,
                                         int cap = 20);

}  // namespace adhc
