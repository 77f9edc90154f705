#include "adhc/classify.hpp"

#include <stdexcept>

namespace adhc {

GoodBadLabels classify_good_bad(const OrientedGraph& g, const Partition4& p, double delta) {
  if (p.universe() != g.order() || !p.well_formed())
    throw std::invalid_argument("classify_good_bad: partition does not cover the graph");

  const double n = g.order();
  const double dn = delta * n;
  const double half_a = p.a.count() / 2.0, half_c = p.c.count() / 2.0;
  const double size_a = p.a.count(), size_b = p.b.count(), size_c = p.c.count(), size_d = p.d.count();

  GoodBadLabels labels;
  labels.good = VertexSet(g.order());
  labels.delta = delta;

  for (int v = 0; v < g.order(); ++v) {
    const auto part = p.part_of(v);
    bool good = false;
    switch (*part) {
      case Part::A:
        good = g.out_degree_in(v, p.a.bits) >= half_a - dn && g.in_degree_in(v, p.a.bits) >= half_a - dn &&
               g.out_degree_in(v, p.b.bits) >= size_b - dn && g.in_degree_in(v, p.d.bits) >= size_d - dn;
        break;
      case Part::B:
        good = g.out_degree_in(v, p.c.bits) >= size_c - dn && g.in_degree_in(v, p.a.bits) >= size_a - dn;
        break;
      case Part::C:
        good = g.out_degree_in(v, p.c.bits) >= half_c - dn && g.in_degree_in(v, p.c.bits) >= half_c - dn &&
               g.out_degree_in(v, p.d.bits) >= size_d - dn && g.in_degree_in(v, p.b.bits) >= size_b - dn;
        break;
      case Part::D:
        good = g.out_degree_in(v, p.b.bits) >= half_c - dn && g.in_degree_in(v, p.b.bits) >= half_a - dn &&
               g.out_degree_in(v, p.a.bits) >= size_a - dn && g.in_degree_in(v, p.c.bits) >= size_c - dn;
        break;
    }
    if (good) labels.good.add(v);
  }
  return labels;
}

bool acceptable(const OrientedGraph& g, int v, const VertexSet& u1, const VertexSet& u2,
                double threshold_fraction) {
  const double bar = threshold_fraction * g.order();
  return static_cast<double>(g.in_degree_in(v, u1.bits)) >= bar &&
         static_cast<double>(g.out_degree_in(v, u2.bits)) >= bar;
}

ReassignResult reassign_by_acceptability(const OrientedGraph& g, const Partition4& p,
                                         const GoodBadLabels& labels, double threshold_fraction) {
  if (p.universe() != g.order() || !p.well_formed())
    throw std::invalid_argument("reassign_by_acceptability: partition does not cover the graph");

  const VertexSet ad = p.a | p.d, ab = p.a | p.b, cd = p.c | p.d, bc = p.b | p.c;
  ReassignResult out{p, {}, {}};
  for (int v : set_bits(labels.bad().bits)) {
    Part target;
    if (acceptable(g, v, ad, ab, threshold_fraction))
      target = Part::A;
    else if (acceptable(g, v, ad, cd, threshold_fraction))
      target = Part::B;
    else if (acceptable(g, v, bc, cd, threshold_fraction))
      target = Part::C;
    else if (acceptable(g, v, bc, ab, threshold_fraction))
      target = Part::D;
    else {
      out.unassigned.push_back(v);
      continue;
    }
    const Part from = *p.part_of(v);
    if (from == target) continue;
    switch (from) {
      case Part::A: out.partition.a.remove(v); break;
      case Part::B: out.partition.b.remove(v); break;
      case Part::C: out.partition.c.remove(v); break;
      case Part::D: out.partition.d.remove(v); break;
    }
    switch (target) {
      case Part::A: out.partition.a.add(v); break;
      case Part::B: out.partition.b.add(v); break;
      case Part::C: out.partition.c.add(v); break;
      case Part::D: out.partition.d.add(v); break;
    }
    out.moved.push_back(v);
  }
  return out;
}

}  // namespace adhc
