#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adhc/vertex_set.hpp"

namespace adhc {

struct Arc {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

enum class GraphFault {
  BadOrder,         // n negative or above kMaxVertices
  VertexOutOfRange,
  Loop,
  TwoCycle,         // arcs in both directions between one pair
  DuplicateArc,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphFault fault, const std::string& what) : std::runtime_error(what), fault_(fault) {}
  GraphFault fault() const { return fault_; }

 private:
  GraphFault fault_;
};

// An oriented graph: no loops, no parallel arcs, no 2-cycles. Immutable after
// construction; adjacency is one 64-bit row per vertex in each direction, so
// all degree/neighborhood queries are word operations. Safe to share across
// threads read-only.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  explicit OrientedGraph(int n) {
    if (n < 0 || n > kMaxVertices) throw GraphError(GraphFault::BadOrder, "vertex count outside [0,64]");
    n_ = n;
    out_.assign(static_cast<std::size_t>(n), 0);
    in_.assign(static_cast<std::size_t>(n), 0);
  }

  static OrientedGraph from_arcs(int n, std::span<const Arc> arcs);
  static OrientedGraph from_arcs(int n, std::initializer_list<Arc> arcs) {
    return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  int order() const { return n_; }
  std::uint64_t vertex_mask() const { return low_mask(n_); }

  std::uint64_t out_row(int v) const { return out_[static_cast<std::size_t>(v)]; }
  std::uint64_t in_row(int v) const { return in_[static_cast<std::size_t>(v)]; }

  bool has_arc(int u, int v) const {
    return u >= 0 && u < n_ && v >= 0 && v < n_ && (out_row(u) & bit_of(v));
  }

  int out_degree(int v) const { return std::popcount(out_row(v)); }
  int in_degree(int v) const { return std::popcount(in_row(v)); }
  // d+(v, X) and d-(v, X) for a vertex subset given as a bit mask.
  int out_degree_in(int v, std::uint64_t mask) const { return std::popcount(out_row(v) & mask); }
  int in_degree_in(int v, std::uint64_t mask) const { return std::popcount(in_row(v) & mask); }

  int arc_count() const {
    int e = 0;
    for (int v = 0; v < n_; ++v) e += out_degree(v);
    return e;
  }

  // e(X,Y): number of arcs with tail in X and head in Y (X and Y may overlap).
  int arcs_between(std::uint64_t x, std::uint64_t y) const {
    int e = 0;
    for (int u : set_bits(x & vertex_mask())) e += std::popcount(out_row(u) & y);
    return e;
  }
  int arcs_within(std::uint64_t x) const { return arcs_between(x, x); }

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(static_cast<std::size_t>(arc_count()));
    for (int u = 0; u < n_; ++u)
      for (int v : set_bits(out_row(u))) out.push_back({u, v});
    return out;
  }

  OrientedGraph reversed() const {
    OrientedGraph g(n_);
    g.out_ = in_;
    g.in_ = out_;
    return g;
  }

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> out_, in_;
};

// Rebuilds g with vertex v renamed to perm[v]; perm must be a permutation of 0..n-1.
OrientedGraph relabel(const OrientedGraph& g, std::span<const int> perm);

// sigma_{+-}: minimum of d+(x)+d-(y) over ordered pairs of distinct vertices
// with no arc x->y. Empty optional means no such pair exists (only possible
// for n <= 1); callers must treat that as "satisfies any bound".
std::optional<int> sigma_plus_minus(const OrientedGraph& g);

inline bool sigma_at_least(std::optional<int> sigma, double bound) {
  return !sigma.has_value() || static_cast<double>(*sigma) >= bound;
}

struct DegreeProfile {
  std::optional<int> sigma_pm;
  int delta0 = 0;                               // minimum semidegree
  std::vector<std::pair<int, int>> per_vertex;  // (d+, d-)
};

DegreeProfile degree_profile(const OrientedGraph& g);

}  // namespace adhc
