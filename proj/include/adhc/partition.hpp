#pragma once

#include <optional>
#include <string>

#include "adhc/expander.hpp"
#include "adhc/graph.hpp"
#include "adhc/vertex_set.hpp"

namespace adhc {

enum class Part : std::uint8_t { A, B, C, D };

inline const char* to_string(Part p) {
  switch (p) {
    case Part::A: return "a";
    case Part::B: return "b";
    case Part::C: return "c";
    default: return "d";
  }
}

// A labeled quadruple of disjoint vertex sets covering the whole vertex set.
// A or C may be empty.
struct Partition4 {
  VertexSet a, b, c, d;

  Partition4() = default;
  explicit Partition4(int n) : a(n), b(n), c(n), d(n) {}
  Partition4(VertexSet a_, VertexSet b_, VertexSet c_, VertexSet d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  int universe() const { return a.universe; }

  bool well_formed() const {
    const std::uint64_t sum = static_cast<std::uint64_t>(a.count()) + b.count() + c.count() + d.count();
    return (a.bits | b.bits | c.bits | d.bits) == low_mask(universe()) &&
           sum == static_cast<std::uint64_t>(universe());
  }

  const VertexSet& part(Part p) const {
    switch (p) {
      case Part::A: return a;
      case Part::B: return b;
      case Part::C: return c;
      default: return d;
    }
  }

  std::optional<Part> part_of(int v) const {
    if (a.contains(v)) return Part::A;
    if (b.contains(v)) return Part::B;
    if (c.contains(v)) return Part::C;
    if (d.contains(v)) return Part::D;
    return std::nullopt;
  }

  friend bool operator==(const Partition4&, const Partition4&) = default;
};

struct NicePartitionCheck {
  bool np1 = false;  // |A| <= |C| and |A|+|C| within K*eps*n of n/2
  bool np2 = false;  // |B| and |D| within K*eps*n of n/4
  bool np3 = false;  // e(A u D, C u D) <= eps^2 n^2
  int e_ad_cd = 0;
  bool all() const { return np1 && np2 && np3; }
};

// The O(eps n) slack in the size conditions hides a constant; callers supply
// it as big_o_constant.
NicePartitionCheck check_nice_partition(const OrientedGraph& g, const Partition4& p, double epsilon,
                                        double big_o_constant);

struct DerivedPartition {
  Partition4 partition;
  bool reversed = false;   // arcs reversed and labels A/C swapped to get |A| <= |C|
  OrientedGraph graph;     // the graph the partition applies to
};

// Turns a non-expansion witness S into the partition A = RN+ n S, B = RN+ \ S,
// C = V \ (RN+ u S), D = S \ RN+, reversing arcs and swapping A/C when needed
// so that |A| <= |C|. The witness is re-checked; a report that is not a
// genuine violation is rejected.
DerivedPartition derive_nice_partition(const OrientedGraph& g, const ExpanderReport& report, double nu);

}  // namespace adhc
