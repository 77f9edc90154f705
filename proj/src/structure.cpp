#include "adhc/structure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "adhc/rng.hpp"

namespace adhc {

std::vector<Arc> find_special_arcs(const OrientedGraph& g, const Partition4& p) {
  if (p.universe() != g.order() || !p.well_formed())
    throw std::invalid_argument("find_special_arcs: partition does not cover the graph");

  const std::uint64_t ad = p.a.bits | p.d.bits, cd = p.c.bits | p.d.bits;
  const std::uint64_t bc = p.b.bits | p.c.bits, ab = p.a.bits | p.b.bits;

  std::vector<Arc> arcs;
  for (int u = 0; u < g.order(); ++u) {
    std::uint64_t heads = 0;
    if (ad & bit_of(u)) heads |= cd;
    if (bc & bit_of(u)) heads |= ab;  // tail sets are disjoint: no arc lands in both classes
    for (int v : set_bits(g.out_row(u) & heads)) arcs.push_back({u, v});
  }
  return arcs;
}

std::optional<std::pair<Arc, Arc>> find_two_disjoint_special_arcs(const OrientedGraph& g,
                                                                  const Partition4& p) {
  const std::vector<Arc> arcs = find_special_arcs(g, p);
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      const Arc& e = arcs[i];
      const Arc& f = arcs[j];
      if (e.tail != f.tail && e.tail != f.head && e.head != f.tail && e.head != f.head)
        return std::make_pair(e, f);
    }
  return std::nullopt;
}

ProperPathCheck check_proper_path(const OrientedGraph& g, const Partition4& p,
                                  const GoodBadLabels& labels, const AntidirectedWalk& walk) {
  ProperPathCheck r;
  r.p1 = !walk.closed && walk.order() >= 2 && walk.order() <= 10 && walk.order() % 2 == 0 &&
         validate_antidirected(g, walk).ok;
  r.p2 = walk.length() >= 1 && walk.directions.front() == StepDir::Forward &&
         walk.directions.back() == StepDir::Forward;
  if (walk.order() >= 2) {
    const int first = walk.vertices.front(), last = walk.vertices.back();
    r.p3 = p.d.contains(first) && p.d.contains(last) && labels.is_good(first) && labels.is_good(last);
  }
  return r;
}

namespace {

enum class SpecialClass { AdCd, BcAb };

std::optional<SpecialClass> classify_special(const Partition4& p, Arc arc) {
  const std::uint64_t ad = p.a.bits | p.d.bits, cd = p.c.bits | p.d.bits;
  const std::uint64_t bc = p.b.bits | p.c.bits, ab = p.a.bits | p.b.bits;
  if ((ad & bit_of(arc.tail)) && (cd & bit_of(arc.head))) return SpecialClass::AdCd;
  if ((bc & bit_of(arc.tail)) && (ab & bit_of(arc.head))) return SpecialClass::BcAb;
  return std::nullopt;
}

// Lowest-id good candidate not yet used; remembers the first stage that came
// up empty.
struct Picker {
  const GoodBadLabels& labels;
  std::uint64_t used;
  std::string failed;

  std::optional<int> pick(std::uint64_t candidates, const char* stage) {
    if (!failed.empty()) return std::nullopt;
    candidates &= labels.good.bits & ~used;
    if (candidates == 0) {
      failed = stage;
      return std::nullopt;
    }
    const int v = std::countr_zero(candidates);
    used |= bit_of(v);
    return v;
  }
};

AntidirectedWalk alternating_path(std::vector<int> vertices, StepDir first) {
  AntidirectedWalk w;
  w.vertices = std::move(vertices);
  for (int i = 0; i + 1 < static_cast<int>(w.vertices.size()); ++i)
    w.directions.push_back(i % 2 == 0 ? first : opposite(first));
  return w;
}

}  // namespace

ExtendOutcome extend_to_proper_path(const OrientedGraph& g, const Partition4& p,
                                    const GoodBadLabels& labels, Arc special,
                                    const VertexSet& avoid) {
  if (avoid.count() > 20) throw std::invalid_argument("extend_to_proper_path: |avoid| must be <= 20");
  if (avoid.contains(special.tail) || avoid.contains(special.head))
    throw std::invalid_argument("extend_to_proper_path: arc endpoints may not be avoided");
  if (!g.has_arc(special.tail, special.head))
    throw std::invalid_argument("extend_to_proper_path: arc not present in graph");
  const auto cls = classify_special(p, special);
  if (!cls) throw std::invalid_argument("extend_to_proper_path: arc is not special for the partition");

  const int u = special.tail, v = special.head;
  const double n = g.order();
  Picker pick{labels, avoid.bits | bit_of(u) | bit_of(v), {}};
  std::vector<int> seq;

  if (*cls == SpecialClass::BcAb) {
    const std::uint64_t cd = p.c.bits | p.d.bits, ad = p.a.bits | p.d.bits;
    const bool a_large = static_cast<double>(p.a.count()) >= n / 200.0;
    const auto u1 = pick.pick(g.out_row(u) & cd, "u1: good out-neighbor of u in C|D");
    const auto v1 = a_large ? pick.pick(g.in_row(v) & ad, "v1: good in-neighbor of v in A|D")
                            : pick.pick(g.in_row(v) & p.d.bits, "v1: good in-neighbor of v in D");
    const auto u2 = u1 ? pick.pick(g.in_row(*u1) & p.c.bits, "u2: good in-neighbor of u1 in C")
                       : std::nullopt;
    const auto u3 = u2 ? pick.pick(g.out_row(*u2) & p.d.bits, "u3: good out-neighbor of u2 in D")
                       : std::nullopt;
    if (a_large) {
      const auto v2 = v1 ? pick.pick(g.out_row(*v1) & p.a.bits, "v2: good out-neighbor of v1 in A")
                         : std::nullopt;
      const auto v3 = v2 ? pick.pick(g.in_row(*v2) & p.d.bits, "v3: good in-neighbor of v2 in D")
                         : std::nullopt;
      if (!pick.failed.empty()) return {false, {}, pick.failed};
      seq = {*v3, *v2, *v1, v, u, *u1, *u2, *u3};
    } else {
      if (!pick.failed.empty()) return {false, {}, pick.failed};
      seq = {*v1, v, u, *u1, *u2, *u3};
    }
  } else {
    // arc u->v with u in A|D, v in C|D; either side collapses when its
    // endpoint is already a good vertex of D
    std::vector<int> left, right;
    if (!(p.d.contains(u) && labels.is_good(u))) {
      const auto x = pick.pick(g.out_row(u) & (p.a.bits | p.b.bits), "x: good out-neighbor of u in A|B");
      const auto w = x ? pick.pick(g.in_row(*x) & p.d.bits, "w: good in-neighbor of x in D")
                       : std::nullopt;
      if (!pick.failed.empty()) return {false, {}, pick.failed};
      left = {*w, *x};
    }
    if (!(p.d.contains(v) && labels.is_good(v))) {
      const auto y = pick.pick(g.in_row(v) & p.c.bits, "y: good in-neighbor of v in C");
      const auto z = y ? pick.pick(g.out_row(*y) & p.d.bits, "z: good out-neighbor of y in D")
                       : std::nullopt;
      if (!pick.failed.empty()) return {false, {}, pick.failed};
      right = {*y, *z};
    }
    seq = left;
    seq.push_back(u);
    seq.push_back(v);
    seq.insert(seq.end(), right.begin(), right.end());
  }

  ExtendOutcome out{true, alternating_path(std::move(seq), StepDir::Forward), {}};
  if (!check_proper_path(g, p, labels, out.path).all())
    throw std::logic_error("extend_to_proper_path built a path violating P1-P3");
  return out;
}

VertexSet min_degree_subgraph(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("min_degree_subgraph: n outside [0,64]");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  int e = 0;
  for (const auto& [x, y] : edges) {
    if (x < 0 || x >= n || y < 0 || y >= n || x == y)
      throw std::invalid_argument("min_degree_subgraph: bad edge");
    if (adj[static_cast<std::size_t>(x)] & bit_of(y)) continue;  // set semantics
    adj[static_cast<std::size_t>(x)] |= bit_of(y);
    adj[static_cast<std::size_t>(y)] |= bit_of(x);
    ++e;
  }
  if (n == 0) return VertexSet(0);

  const double target = static_cast<double>(e) / n;  // fixed once, on the input
  std::uint64_t alive = low_mask(n);
  bool removed = true;
  while (removed && alive) {
    removed = false;
    for (int v : set_bits(alive)) {
      if (static_cast<double>(std::popcount(adj[static_cast<std::size_t>(v)] & alive)) < target) {
        alive &= ~bit_of(v);
        removed = true;
        break;  // restart at the lowest id
      }
    }
  }
  return VertexSet(n, alive);
}

BdPathResult build_bd_path(const OrientedGraph& g, const Partition4& p, const GoodBadLabels& labels,
                           int target_order, std::uint64_t budget) {
  BdPathResult res;
  int target = std::max(target_order, 1);
  if (target % 2 == 0) ++target;  // both ends in D forces odd order

  // peel the bipartite graph H on (B,D) with edge set E(D,B)
  const std::vector<int> hv = (p.b | p.d).to_vector();
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < hv.size(); ++i) local[static_cast<std::size_t>(hv[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (int d : set_bits(p.d.bits))
    for (int b : set_bits(g.out_row(d) & p.b.bits))
      edges.emplace_back(local[static_cast<std::size_t>(d)], local[static_cast<std::size_t>(b)]);
  const VertexSet surv_local = min_degree_subgraph(static_cast<int>(hv.size()), edges);
  std::uint64_t surviving = 0;
  for (int i : set_bits(surv_local.bits)) surviving |= bit_of(hv[static_cast<std::size_t>(i)]);

  const std::uint64_t d_pool = p.d.bits & surviving & labels.good.bits;
  const std::uint64_t b_pool = p.b.bits & surviving & labels.good.bits;

  // pigeonhole: k vertices of D and k-1 of B give order 2k-1 at most
  const int max_order = std::min(2 * std::popcount(d_pool) - 1, 2 * std::popcount(b_pool) + 1);
  if (target > max_order) {
    res.note = "target " + std::to_string(target) + " exceeds pigeonhole bound " + std::to_string(max_order);
    return res;
  }

  std::vector<int> path;
  std::uint64_t used = 0;
  std::uint64_t expansions = 0;
  bool out_of_budget = false;

  // backtracking walk D,B,D,...,D over good survivors, lowest id first
  auto dfs = [&](auto&& self, int cur, bool on_d_side) -> bool {
    if (on_d_side && static_cast<int>(path.size()) >= target) return true;
    if (++expansions > budget) {
      out_of_budget = true;
      return false;
    }
    const std::uint64_t next = on_d_side ? (g.out_row(cur) & b_pool & ~used)
                                         : (g.in_row(cur) & d_pool & ~used);
    for (int w : set_bits(next)) {
      path.push_back(w);
      used |= bit_of(w);
      if (self(self, w, !on_d_side)) return true;
      used &= ~bit_of(w);
      path.pop_back();
      if (out_of_budget) return false;
    }
    return false;
  };

  for (int start : set_bits(d_pool)) {
    path.assign(1, start);
    used = bit_of(start);
    if (dfs(dfs, start, true)) {
      res.ok = true;
      res.walk = alternating_path(path, StepDir::Forward);
      res.expansions = expansions;
      const WalkCheck check = validate_antidirected(g, res.walk);
      if (!check.ok) throw std::logic_error("build_bd_path built an invalid walk: " + check.message);
      return res;
    }
    if (out_of_budget) break;
  }
  res.expansions = expansions;
  res.note = out_of_budget ? "budget exhausted" : "no walk of the requested order";
  return res;
}

LConditionReport check_L_conditions(const OrientedGraph& g, const Partition4& original,
                                    const GoodBadLabels& labels, const AntidirectedWalk& path,
                                    double delta, double k_l4, const VertexSet& required_cover) {
  const WalkCheck check = validate_antidirected(g, path);
  if (!check.ok) throw std::invalid_argument("check_L_conditions: invalid path: " + check.message);

  const double n = g.order();
  const std::uint64_t on_path = path.vertex_set(g.order()).bits;

  LConditionReport r;
  const std::uint64_t must_cover = original.a.bits | required_cover.bits | labels.bad().bits;
  r.l1 = (must_cover & ~on_path) == 0;

  if (!path.closed && path.order() >= 2) {
    const int first = path.vertices.front(), last = path.vertices.back();
    const bool ends_good_d = original.d.contains(first) && original.d.contains(last) &&
                             labels.is_good(first) && labels.is_good(last);
    // a sink end has its only path-arc pointing into it
    const bool ends_sink = path.directions.front() == StepDir::Backward &&
                           path.directions.back() == StepDir::Forward;
    r.l2 = ends_good_d && ends_sink;
  }

  const double c_rem = std::popcount(original.c.bits & ~on_path);
  const double b_rem = std::popcount(original.b.bits & ~on_path);
  const double d_rem = std::popcount(original.d.bits & ~on_path);
  r.l3 = c_rem > b_rem + d_rem + n / 300.0;
  r.l4 = static_cast<double>(std::popcount(original.c.bits & on_path)) <= k_l4 * delta * n;
  return r;
}

CpConditionReport check_CP_conditions(const OrientedGraph& g, const VertexSet& c_rest,
                                      const VertexSet& c1, const VertexSet& c2, int b_rem, int d_rem,
                                      double delta, double epsilon) {
  if ((c1.bits & c2.bits) != 0 || (c1.bits | c2.bits) != c_rest.bits)
    throw std::invalid_argument("check_CP_conditions: c1, c2 must partition c_rest");

  const double n = g.order();
  CpConditionReport r;
  r.cp1 = c1.count() == b_rem + d_rem + static_cast<int>(std::llround(2.0 * std::sqrt(delta) * n));
  r.cp2 = static_cast<double>(c2.count()) >= n / 400.0;

  r.cp3 = true;
  const int rest_size = c_rest.count();
  for (int i = 0; i < 2 && r.cp3; ++i) {
    const VertexSet& ci = i == 0 ? c1 : c2;
    const double ratio = rest_size == 0 ? 0.0 : static_cast<double>(ci.count()) / rest_size;
    for (int v = 0; v < g.order() && r.cp3; ++v) {
      const double dev_out = std::abs(g.out_degree_in(v, ci.bits) - ratio * g.out_degree_in(v, c_rest.bits));
      const double dev_in = std::abs(g.in_degree_in(v, ci.bits) - ratio * g.in_degree_in(v, c_rest.bits));
      if (dev_out > epsilon * n || dev_in > epsilon * n) r.cp3 = false;
    }
  }
  return r;
}

BalancedSubsetResult balanced_random_subset(const OrientedGraph& g, const VertexSet& s, int m,
                                            double epsilon, std::uint64_t seed, int max_retries) {
  const int size_s = s.count();
  if (m < 0 || m > size_s) throw std::invalid_argument("balanced_random_subset: need 0 <= m <= |s|");

  const double n = g.order();
  const double ratio = size_s == 0 ? 0.0 : static_cast<double>(m) / size_s;
  SplitMix64 rng(seed);
  std::vector<int> elems = s.to_vector();

  BalancedSubsetResult res;
  res.worst_deviation = std::numeric_limits<double>::infinity();

  for (int attempt = 1; attempt <= std::max(max_retries, 1); ++attempt) {
    for (int i = 0; i < m; ++i) {
      const int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(size_s - i)));
      std::swap(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]);
    }
    std::uint64_t t_bits = 0;
    for (int i = 0; i < m; ++i) t_bits |= bit_of(elems[static_cast<std::size_t>(i)]);
    const std::uint64_t rest = s.bits & ~t_bits;

    double worst = 0.0;
    for (int v = 0; v < g.order(); ++v) {
      const double dpS = g.out_degree_in(v, s.bits), dmS = g.in_degree_in(v, s.bits);
      worst = std::max({worst,
                        std::abs(g.out_degree_in(v, t_bits) - ratio * dpS),
                        std::abs(g.in_degree_in(v, t_bits) - ratio * dmS),
                        std::abs(g.out_degree_in(v, rest) - (1.0 - ratio) * dpS),
                        std::abs(g.in_degree_in(v, rest) - (1.0 - ratio) * dmS)});
    }
    res.attempts = attempt;
    if (worst < res.worst_deviation) {
      res.worst_deviation = worst;
      res.subset = VertexSet(g.order(), t_bits);
    }
    if (worst <= epsilon * n) {
      res.ok = true;
      res.subset = VertexSet(g.order(), t_bits);
      res.worst_deviation = worst;
      return res;
    }
  }
  return res;  // ok=false, best attempt retained
}

OutlierReport degree_outlier_report(const OrientedGraph& g, const VertexSet& x, const VertexSet& y,
                                    double epsilon, OutlierSide side) {
  if ((x.bits & y.bits) != 0) throw std::invalid_argument("degree_outlier_report: sets must be disjoint");

  const double n = g.order();
  const double bar = std::sqrt(epsilon) * n;
  OutlierReport r{VertexSet(g.order()), VertexSet(g.order()), g.arcs_between(x.bits, y.bits)};
  for (int v : set_bits(x.bits)) {
    const double d = g.out_degree_in(v, y.bits);
    const bool outlier = side == OutlierSide::Dense ? d <= y.count() - bar : d >= bar;
    if (outlier) r.tail_outliers.add(v);
  }
  for (int v : set_bits(y.bits)) {
    const double d = g.in_degree_in(v, x.bits);
    const bool outlier = side == OutlierSide::Dense ? d <= x.count() - bar : d >= bar;
    if (outlier) r.head_outliers.add(v);
  }
  return r;
}

}  // namespace adhc
