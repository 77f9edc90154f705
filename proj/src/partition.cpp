#include "adhc/partition.hpp"

#include <cmath>
#include <stdexcept>

namespace adhc {

NicePartitionCheck check_nice_partition(const OrientedGraph& g, const Partition4& p, double epsilon,
                                        double big_o_constant) {
  if (p.universe() != g.order() || !p.well_formed())
    throw std::invalid_argument("check_nice_partition: partition does not cover the graph");

  NicePartitionCheck r;
  const double n = g.order();
  const double slack = big_o_constant * epsilon * n;
  const int size_a = p.a.count(), size_b = p.b.count(), size_c = p.c.count(), size_d = p.d.count();

  r.np1 = size_a <= size_c && std::abs(static_cast<double>(size_a + size_c) - n / 2.0) <= slack;
  r.np2 = std::abs(static_cast<double>(size_b) - n / 4.0) <= slack &&
          std::abs(static_cast<double>(size_d) - n / 4.0) <= slack;
  r.e_ad_cd = g.arcs_between(p.a.bits | p.d.bits, p.c.bits | p.d.bits);
  r.np3 = static_cast<double>(r.e_ad_cd) <= epsilon * epsilon * n * n;
  return r;
}

DerivedPartition derive_nice_partition(const OrientedGraph& g, const ExpanderReport& report, double nu) {
  if (report.is_expander || !report.witness)
    throw std::invalid_argument("derive_nice_partition needs a false verdict with a witness");

  const int n = g.order();
  const VertexSet s = *report.witness;
  if (s.universe != n) throw std::invalid_argument("derive_nice_partition: witness universe mismatch");

  // re-check the witness from the definition before trusting it
  const VertexSet rn = robust_out_neighborhood(g, s, nu);
  const double size = s.count();
  if (!(static_cast<double>(rn.count()) < size + nu * n))
    throw std::invalid_argument("derive_nice_partition: witness is not a genuine violation");

  VertexSet a = rn & s;
  VertexSet b = rn - s;
  VertexSet c = (rn | s).complement();
  VertexSet d = s - rn;

  DerivedPartition out;
  out.reversed = a.count() > c.count();
  if (out.reversed) {
    out.graph = g.reversed();
    std::swap(a, c);
  } else {
    out.graph = g;
  }
  out.partition = Partition4(a, b, c, d);
  return out;
}

}  // namespace adhc
