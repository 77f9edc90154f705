#pragma once

#include <vector>

#include "adhc/graph.hpp"
#include "adhc/partition.hpp"

namespace adhc {

// Per-vertex good/bad labels relative to a partition and slack delta.
// A vertex is good when the degree lower bounds of its own part hold
// (ties count as good):
//   A: d+-(v,A) >= |A|/2 - dn,  d+(v,B) >= |B| - dn,   d-(v,D) >= |D| - dn
//   B: d+(v,C)  >= |C| - dn,    d-(v,A) >= |A| - dn
//   C: d+-(v,C) >= |C|/2 - dn,  d+(v,D) >= |D| - dn,   d-(v,B) >= |B| - dn
//   D: d+(v,B)  >= |C|/2 - dn,  d-(v,B) >= |A|/2 - dn,
//      d+(v,A)  >= |A| - dn,    d-(v,C) >= |C| - dn
struct GoodBadLabels {
  VertexSet good;
  double delta = 0.0;

  bool is_good(int v) const { return good.contains(v); }
  VertexSet bad() const { return good.complement(); }
};

GoodBadLabels classify_good_bad(const OrientedGraph& g, const Partition4& p, double delta);

// d-(v,u1) >= fraction*n and d+(v,u2) >= fraction*n.
bool acceptable(const OrientedGraph& g, int v, const VertexSet& u1, const VertexSet& u2,
                double threshold_fraction = 0.01);

struct ReassignResult {
  Partition4 partition;
  std::vector<int> moved;       // bad vertices that changed part
  std::vector<int> unassigned;  // bad vertices matching no rule (kept in place)
};

// Moves every bad vertex to the first part whose acceptability rule matches,
// in the order A, B, C, D, all rules evaluated against the input partition:
//   A if acceptable(v, A u D, A u B)      B if acceptable(v, A u D, C u D)
//   C if acceptable(v, B u C, C u D)      D if acceptable(v, B u C, A u B)
// Vertices matching no rule are reported, not an error: the degree condition
// rules this out asymptotically but not at small n.
ReassignResult reassign_by_acceptability(const OrientedGraph& g, const Partition4& p,
                                         const GoodBadLabels& labels, double threshold_fraction = 0.01);

}  // namespace adhc
