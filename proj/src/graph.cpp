#include "adhc/graph.hpp"

#include <algorithm>
#include <limits>

namespace adhc {

OrientedGraph OrientedGraph::from_arcs(int n, std::span<const Arc> arcs) {
  OrientedGraph g(n);
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw GraphError(GraphFault::VertexOutOfRange,
                       "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") out of range");
    if (a.tail == a.head)
      throw GraphError(GraphFault::Loop, "loop at vertex " + std::to_string(a.tail));
    if (g.out_[static_cast<std::size_t>(a.tail)] & bit_of(a.head))
      throw GraphError(GraphFault::DuplicateArc,
                       "duplicate arc " + std::to_string(a.tail) + "->" + std::to_string(a.head));
    if (g.out_[static_cast<std::size_t>(a.head)] & bit_of(a.tail))
      throw GraphError(GraphFault::TwoCycle,
                       "2-cycle between " + std::to_string(a.tail) + " and " + std::to_string(a.head));
    g.out_[static_cast<std::size_t>(a.tail)] |= bit_of(a.head);
    g.in_[static_cast<std::size_t>(a.head)] |= bit_of(a.tail);
  }
  return g;
}

OrientedGraph relabel(const OrientedGraph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::uint64_t seen = 0;
  for (int v : perm) {
    if (v < 0 || v >= n || (seen & bit_of(v))) throw std::invalid_argument("relabel: not a permutation");
    seen |= bit_of(v);
  }
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(g.arc_count()));
  for (const Arc& a : g.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
  return OrientedGraph::from_arcs(n, arcs);
}

std::optional<int> sigma_plus_minus(const OrientedGraph& g) {
  const int n = g.order();
  std::vector<int> dplus(static_cast<std::size_t>(n)), dminus(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    dplus[static_cast<std::size_t>(v)] = g.out_degree(v);
    dminus[static_cast<std::size_t>(v)] = g.in_degree(v);
  }
  int best = std::numeric_limits<int>::max();
  bool found = false;
  for (int x = 0; x < n; ++x) {
    // ordered pairs (x,y), x != y, arc x->y absent (y->x may exist)
    const std::uint64_t candidates = ~g.out_row(x) & g.vertex_mask() & ~bit_of(x);
    for (int y : set_bits(candidates)) {
      found = true;
      best = std::min(best, dplus[static_cast<std::size_t>(x)] + dminus[static_cast<std::size_t>(y)]);
    }
  }
  if (!found) return std::nullopt;
  return best;
}

DegreeProfile degree_profile(const OrientedGraph& g) {
  DegreeProfile p;
  p.sigma_pm = sigma_plus_minus(g);
  p.per_vertex.reserve(static_cast<std::size_t>(g.order()));
  int delta0 = g.order() == 0 ? 0 : std::numeric_limits<int>::max();
  for (int v = 0; v < g.order(); ++v) {
    const int dp = g.out_degree(v), dm = g.in_degree(v);
    p.per_vertex.emplace_back(dp, dm);
    delta0 = std::min(delta0, std::min(dp, dm));
  }
  p.delta0 = delta0;
  return p;
}

}  // namespace adhc
