#include "adhc/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace adhc {

const char* to_string(ExtremalFamily f) {
  switch (f) {
    case ExtremalFamily::A: return "a";
    case ExtremalFamily::B: return "b";
    default: return "c";
  }
}

ExtremalFamily family_from_string(const std::string& s) {
  if (s == "a" || s == "A") return ExtremalFamily::A;
  if (s == "b" || s == "B") return ExtremalFamily::B;
  if (s == "c" || s == "C") return ExtremalFamily::C;
  throw std::invalid_argument("unknown family \"" + s + "\" (expected a, b or c)");
}

int ExtremalSpec::order() const {
  switch (family) {
    case ExtremalFamily::A: return 8 * s + 6;
    case ExtremalFamily::B: return 4 * s;
    default: return 4 * s + 2;
  }
}

int table_sigma(const ExtremalSpec& spec) {
  switch (spec.family) {
    case ExtremalFamily::A: return 6 * spec.s + 4;
    case ExtremalFamily::B: return 3 * spec.s;
    default: return 3 * spec.s + 1;
  }
}

int sharpness_threshold(int n) { return (3 * n + 2 + 3) / 4 - 1; }

OrientedGraph almost_regular_tournament(int m) {
  if (m < 1) throw std::invalid_argument("almost_regular_tournament: m must be positive");
  std::vector<Arc> arcs;
  const int half = m / 2;
  for (int i = 0; i < m; ++i)
    for (int j = 1; j <= (m - 1) / 2; ++j) arcs.push_back({i, (i + j) % m});
  if (m % 2 == 0) {
    // pair up opposite vertices once each
    for (int i = 0; i < half; ++i) arcs.push_back({i, (i + half) % m});
  }
  return OrientedGraph::from_arcs(m, arcs);
}

std::vector<Arc> almost_regular_bipartite_tournament(const VertexSet& b, const VertexSet& d) {
  if ((b.bits & d.bits) != 0)
    throw std::invalid_argument("almost_regular_bipartite_tournament: sets overlap");
  if (b.count() != d.count() || b.count() % 2 != 0)
    throw std::invalid_argument("almost_regular_bipartite_tournament: sides must have equal even size");
  const std::vector<int> bs = b.to_vector(), ds = d.to_vector();
  std::vector<Arc> arcs;
  arcs.reserve(bs.size() * ds.size());
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = 0; j < ds.size(); ++j) {
      if ((i + j) % 2 == 0)
        arcs.push_back({bs[i], ds[j]});
      else
        arcs.push_back({ds[j], bs[i]});
    }
  return arcs;
}

namespace {

void complete_class(std::vector<Arc>& arcs, const VertexSet& from, const VertexSet& to) {
  for (int u : set_bits(from.bits))
    for (int v : set_bits(to.bits)) arcs.push_back({u, v});
}

void tournament_on(std::vector<Arc>& arcs, const VertexSet& vs) {
  const std::vector<int> ids = vs.to_vector();
  if (ids.empty()) return;
  const OrientedGraph t = almost_regular_tournament(static_cast<int>(ids.size()));
  for (const Arc& a : t.arcs()) arcs.push_back({ids[static_cast<std::size_t>(a.tail)], ids[static_cast<std::size_t>(a.head)]});
}

VertexSet range_set(int n, int from, int len) {
  VertexSet s(n);
  for (int v = from; v < from + len; ++v) s.add(v);
  return s;
}

}  // namespace

ExtremalInstance generate_extremal(const ExtremalSpec& spec) {
  if (!spec.valid()) throw std::invalid_argument("generate_extremal: s must be >= 1");
  const int n = spec.order();
  int size_a = 0, size_b = 0, size_c = 0;
  switch (spec.family) {
    case ExtremalFamily::A: size_a = 2 * spec.s + 1; size_b = 2 * spec.s + 2; size_c = 2 * spec.s + 1; break;
    case ExtremalFamily::B: size_a = 1; size_b = spec.s; size_c = 2 * spec.s - 1; break;
    case ExtremalFamily::C: size_a = 0; size_b = spec.s + 1; size_c = 2 * spec.s; break;
  }
  const int size_d = size_b;

  Partition4 p(range_set(n, 0, size_a), range_set(n, size_a, size_b),
               range_set(n, size_a + size_b, size_c), range_set(n, size_a + size_b + size_c, size_d));

  std::vector<Arc> arcs;
  switch (spec.family) {
    case ExtremalFamily::A: {
      tournament_on(arcs, p.a);
      tournament_on(arcs, p.c);
      complete_class(arcs, p.a, p.b);
      complete_class(arcs, p.b, p.c);
      complete_class(arcs, p.c, p.d);
      complete_class(arcs, p.d, p.a);
      const auto cross = almost_regular_bipartite_tournament(p.b, p.d);
      arcs.insert(arcs.end(), cross.begin(), cross.end());
      break;
    }
    case ExtremalFamily::B: {
      tournament_on(arcs, p.c);
      complete_class(arcs, p.d, p.a);
      complete_class(arcs, p.a, p.b);
      complete_class(arcs, p.b, p.c);
      complete_class(arcs, p.c, p.d);
      complete_class(arcs, p.d, p.b);
      // the single A-vertex gets one in-neighbor (lowest C id) and one
      // out-neighbor (next C id) in the tournament part
      const std::vector<int> cs = p.c.to_vector();
      const int a_vertex = p.a.to_vector().front();
      arcs.push_back({cs[0], a_vertex});
      if (cs.size() >= 2) arcs.push_back({a_vertex, cs[1]});  // impossible for degenerate s=1
      break;
    }
    case ExtremalFamily::C: {
      tournament_on(arcs, p.c);
      complete_class(arcs, p.b, p.c);
      complete_class(arcs, p.c, p.d);
      complete_class(arcs, p.d, p.b);
      break;
    }
  }

  return {OrientedGraph::from_arcs(n, arcs), std::move(p), spec};
}

OrientedGraph random_oriented(const RandomModel& model) {
  if (model.n < 0 || model.n > kMaxVertices)
    throw std::invalid_argument("random_oriented: n outside [0,64]");
  SplitMix64 rng(model.seed);
  std::vector<Arc> arcs;
  for (int u = 0; u < model.n; ++u)
    for (int v = u + 1; v < model.n; ++v) {
      const bool present = rng.next_unit() < model.p;
      const bool forward = rng.next() & 1;  // always drawn: fixed consumption per pair
      if (present) arcs.push_back(forward ? Arc{u, v} : Arc{v, u});
    }
  return OrientedGraph::from_arcs(model.n, arcs);
}

}  // namespace adhc
