#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adhc/classify.hpp"
#include "adhc/graph.hpp"
#include "adhc/partition.hpp"
#include "adhc/walk.hpp"

namespace adhc {

// Special arcs relative to a partition: E(A u D, C u D) together with
// E(B u C, A u B). The two classes have disjoint tail sets, so the combined
// list is duplicate-free by construction. Sorted by (tail, head).
std::vector<Arc> find_special_arcs(const OrientedGraph& g, const Partition4& p);

// Two special arcs sharing no endpoint, if any pair exists (quadratic scan
// over the special arc list, first pair in lexicographic order).
std::optional<std::pair<Arc, Arc>> find_two_disjoint_special_arcs(const OrientedGraph& g,
                                                                  const Partition4& p);

// D-proper path conditions:
//  P1 antidirected, even order <= 10
//  P2 first and last arcs point forward along the sequence
//  P3 both end-vertices are good vertices of D
struct ProperPathCheck {
  bool p1 = false, p2 = false, p3 = false;
  bool all() const { return p1 && p2 && p3; }
};

ProperPathCheck check_proper_path(const OrientedGraph& g, const Partition4& p,
                                  const GoodBadLabels& labels, const AntidirectedWalk& walk);

struct ExtendOutcome {
  bool ok = false;
  AntidirectedWalk path;
  std::string failed_at;  // first choice point with no candidate
};

// Extends a special arc u->v to a D-proper path avoiding `avoid` (|avoid| <=
// 20, u,v not in it). Every inserted vertex is good and chosen lowest-id
// first. For arcs in E(B u C, A u B) the shape is
//   v3 v2 v1 v u u1 u2 u3   (u1 in C u D, u2 in C, u3 in D; v1 in A u D,
//                            v2 in A, v3 in D), or
//   v1 v u u1 u2 u3         with v1 in D when |A| < n/200.
// For arcs in E(A u D, C u D) the mirrored shape is
//   [w x] u v [y z]         (x in A u B, w in D; y in C, z in D), where a
//                            side collapses when its arc endpoint is already
//                            a good vertex of D.
// Best-effort: a missing candidate yields ok=false naming the choice point;
// produced paths always satisfy P1-P3.
ExtendOutcome extend_to_proper_path(const OrientedGraph& g, const Partition4& p,
                                    const GoodBadLabels& labels, Arc special,
                                    const VertexSet& avoid);

// Fixed-target peel: target = e/|V| computed once on the input, then any
// vertex of degree < target is repeatedly removed (lowest id first). The
// survivors have minimum degree >= target and are non-empty whenever e > 0.
VertexSet min_degree_subgraph(int n, std::span<const std::pair<int, int>> edges);

struct BdPathResult {
  bool ok = false;
  AntidirectedWalk walk;
  std::string note;
  std::uint64_t expansions = 0;
};

// Builds the long B-D path P*: bipartite graph on (B,D) with edge set E(D,B),
// peeled by min_degree_subgraph, then a backtracking walk D,B,D,...,D over
// good vertices only, of odd order >= target_order (even targets rounded up).
// Every D-vertex on the walk is a source and every B-vertex a sink.
BdPathResult build_bd_path(const OrientedGraph& g, const Partition4& p, const GoodBadLabels& labels,
                           int target_order, std::uint64_t budget = 1u << 20);

struct LConditionReport {
  bool l1 = false;  // A, the required cover and all bad vertices lie on the path
  bool l2 = false;  // both ends good, in D, and sinks of the path
  bool l3 = false;  // |C \ P| > |B \ P| + |D \ P| + n/300
  bool l4 = false;  // |C n P| <= K * delta * n
};

LConditionReport check_L_conditions(const OrientedGraph& g, const Partition4& original,
                                    const GoodBadLabels& labels, const AntidirectedWalk& path,
                                    double delta, double k_l4, const VertexSet& required_cover);

struct CpConditionReport {
  bool cp1 = false;  // |C1| = b_rem + d_rem + round(2*sqrt(delta)*n)
  bool cp2 = false;  // |C2| >= n/400
  bool cp3 = false;  // per-vertex degree split within eps*n of proportional
};

CpConditionReport check_CP_conditions(const OrientedGraph& g, const VertexSet& c_rest,
                                      const VertexSet& c1, const VertexSet& c2, int b_rem, int d_rem,
                                      double delta, double epsilon);

struct BalancedSubsetResult {
  bool ok = false;
  VertexSet subset;
  int attempts = 0;
  double worst_deviation = 0.0;  // max |d(v,T) - K d(v,S)| style deviation seen in the best attempt
};

// Samples uniform T of size m inside s until, for every vertex and both
// degree signs, |d(v,T) - K d(v,S)| <= eps*n and |d(v,S\T) - (1-K) d(v,S)| <=
// eps*n with K = m/|s|. Gives up after max_retries (ok=false, best attempt
// reported).
BalancedSubsetResult balanced_random_subset(const OrientedGraph& g, const VertexSet& s, int m,
                                            double epsilon, std::uint64_t seed, int max_retries);

enum class OutlierSide { Dense, Sparse };

struct OutlierReport {
  VertexSet tail_outliers;  // vertices of X with exceptional d+(.,Y)
  VertexSet head_outliers;  // vertices of Y with exceptional d-(.,X)
  int e_xy = 0;
};

// Dense side: tails with d+(x,Y) <= |Y| - sqrt(eps)*n, heads with d-(y,X) <=
// |X| - sqrt(eps)*n. Sparse side: tails with d+(x,Y) >= sqrt(eps)*n, heads
// with d-(y,X) >= sqrt(eps)*n. X and Y must be disjoint.
OutlierReport degree_outlier_report(const OrientedGraph& g, const VertexSet& x, const VertexSet& y,
                                    double epsilon, OutlierSide side);

}  // namespace adhc
