#include <doctest.h>

#include <algorithm>
#include <limits>

#include "adhc/generators.hpp"
#include "adhc/graph.hpp"
#include "adhc/graph_io.hpp"
#include "adhc/rng.hpp"
#include "adhc/walk.hpp"

using namespace adhc;

namespace {

// independent sigma implementation for cross-checking: plain loops over the
// arc list, no bit tricks
std::optional<int> sigma_by_brute_force(const OrientedGraph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  bool any = false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || g.has_arc(x, y)) continue;
      any = true;
      best = std::min(best, g.out_degree(x) + g.in_degree(y));
    }
  return any ? std::optional<int>(best) : std::nullopt;
}

OrientedGraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return OrientedGraph::from_arcs(n, arcs);
}

}  // namespace

TEST_SUITE("graph_core") {

TEST_CASE("construction rejects loops, 2-cycles, duplicates and bad ids") {
  CHECK_THROWS_AS(OrientedGraph::from_arcs(2, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(OrientedGraph::from_arcs(2, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(OrientedGraph::from_arcs(2, {{0, 1}, {0, 1}}), GraphError);
  CHECK_THROWS_AS(OrientedGraph::from_arcs(2, {{0, 2}}), GraphError);
  CHECK_THROWS_AS(OrientedGraph(65), GraphError);

  try {
    OrientedGraph::from_arcs(2, {{0, 1}, {1, 0}});
  } catch (const GraphError& e) {
    CHECK(e.fault() == GraphFault::TwoCycle);
  }
}

TEST_CASE("adjacency rows stay consistent") {
  const OrientedGraph g = OrientedGraph::from_arcs(4, {{0, 1}, {2, 1}, {3, 2}});
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      CHECK(g.has_arc(u, v) == ((g.in_row(v) & bit_of(u)) != 0));
  CHECK(g.arc_count() == 3);
  CHECK(g.out_degree(0) == 1);
  CHECK(g.in_degree(1) == 2);
  CHECK(g.arcs_between(bit_of(0) | bit_of(2), bit_of(1)) == 2);
}

TEST_CASE("sigma of a directed 3-cycle is 2") {
  CHECK(sigma_plus_minus(directed_cycle(3)) == 2);
}

TEST_CASE("sigma of the transitive tournament on 3 vertices is 0") {
  const OrientedGraph g = OrientedGraph::from_arcs(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(sigma_by_brute_force(g) == 0);  // (2,0): d+(2)=0, d-(0)=0
  CHECK(sigma_plus_minus(g) == 0);
}

TEST_CASE("sigma of family c at s=2 matches the size table") {
  const ExtremalInstance inst = generate_extremal({ExtremalFamily::C, 2});
  CHECK(inst.graph.order() == 10);
  CHECK(sigma_plus_minus(inst.graph) == 7);  // 3s+1
}

TEST_CASE("sigma is infinite only when no ordered non-adjacent pair exists") {
  CHECK(!sigma_plus_minus(OrientedGraph(0)).has_value());
  CHECK(!sigma_plus_minus(OrientedGraph(1)).has_value());
  // any graph with n >= 2 has a reverse pair without an arc
  CHECK(sigma_plus_minus(OrientedGraph::from_arcs(2, {{0, 1}})).has_value());
  CHECK(sigma_at_least(std::nullopt, 1e9));
  CHECK(sigma_at_least(5, 5.0));
  CHECK(!sigma_at_least(5, 5.5));
}

TEST_CASE("degree profile of a directed n-cycle") {
  const DegreeProfile p = degree_profile(directed_cycle(7));
  CHECK(p.delta0 == 1);
  for (const auto& [dp, dm] : p.per_vertex) {
    CHECK(dp == 1);
    CHECK(dm == 1);
  }
}

TEST_CASE("degree profile of the empty graph on 2 vertices") {
  const DegreeProfile p = degree_profile(OrientedGraph(2));
  CHECK(p.sigma_pm == 0);
  CHECK(p.delta0 == 0);
}

TEST_CASE("degree profile of family b at s=2") {
  const DegreeProfile p = degree_profile(generate_extremal({ExtremalFamily::B, 2}).graph);
  CHECK(p.sigma_pm == 6);  // 3s
}

TEST_CASE("sigma is the attained minimum over ordered non-adjacent pairs") {
  for (int i = 0; i < 40; ++i) {
    const OrientedGraph g = random_oriented({10, 0.15 + 0.08 * (i % 8), SplitMix64::derive(3, i)});
    const auto sigma = sigma_plus_minus(g);
    CHECK(sigma == sigma_by_brute_force(g));
    if (!sigma) continue;
    bool attained = false;
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y) {
        if (x == y || g.has_arc(x, y)) continue;
        CHECK(*sigma <= g.out_degree(x) + g.in_degree(y));
        attained |= *sigma == g.out_degree(x) + g.in_degree(y);
      }
    CHECK(attained);
  }
}

TEST_CASE("arc count conservation") {
  for (int i = 0; i < 30; ++i) {
    const OrientedGraph g = random_oriented({12, 0.6, SplitMix64::derive(4, i)});
    int out_sum = 0, in_sum = 0;
    for (int v = 0; v < g.order(); ++v) {
      out_sum += g.out_degree(v);
      in_sum += g.in_degree(v);
    }
    CHECK(out_sum == g.arc_count());
    CHECK(in_sum == g.arc_count());
    CHECK(g.arc_count() <= g.order() * (g.order() - 1) / 2);
  }
}

TEST_CASE("antidirected validation accepts the alternating 4-cycle") {
  // arcs v0->v1, v2->v1, v2->v3, v0->v3
  const OrientedGraph g = OrientedGraph::from_arcs(4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}});
  const AntidirectedWalk walk{{0, 1, 2, 3},
                              {StepDir::Forward, StepDir::Backward, StepDir::Forward, StepDir::Backward},
                              true};
  CHECK(validate_antidirected(g, walk).ok);
  CHECK(is_antidirected_hamilton_cycle(g, walk));
}

TEST_CASE("antidirected validation rejects a directed 4-cycle") {
  const OrientedGraph g = directed_cycle(4);
  const AntidirectedWalk walk{{0, 1, 2, 3},
                              {StepDir::Forward, StepDir::Forward, StepDir::Forward, StepDir::Forward},
                              true};
  const WalkCheck check = validate_antidirected(g, walk);
  CHECK(!check.ok);
  CHECK(check.fault == WalkFault::AlternationBreak);
}

TEST_CASE("antidirected validation rejects odd closed walks") {
  const OrientedGraph g = directed_cycle(5);
  AntidirectedWalk walk;
  walk.closed = true;
  walk.vertices = {0, 1, 2, 3, 4};
  walk.directions.assign(5, StepDir::Forward);
  for (int i = 1; i < 5; i += 2) walk.directions[static_cast<std::size_t>(i)] = StepDir::Backward;
  const WalkCheck check = validate_antidirected(g, walk);
  CHECK(!check.ok);
  CHECK(check.fault == WalkFault::OddClosedLength);
}

TEST_CASE("antidirected validation reports missing arcs, repeats and shape errors") {
  const OrientedGraph g = OrientedGraph::from_arcs(4, {{0, 1}});
  CHECK(validate_antidirected(g, {{0, 1}, {StepDir::Backward}, false}).fault == WalkFault::MissingArc);
  CHECK(validate_antidirected(g, {{0, 1, 0}, {StepDir::Forward, StepDir::Backward}, false}).fault ==
        WalkFault::RepeatedVertex);
  CHECK(validate_antidirected(g, {{0, 1}, {}, false}).fault == WalkFault::ShapeMismatch);
  CHECK(validate_antidirected(g, {{0, 5}, {StepDir::Forward}, false}).fault ==
        WalkFault::VertexOutOfRange);
  CHECK(validate_antidirected(g, {{0, 1}, {StepDir::Forward, StepDir::Backward}, true}).fault ==
        WalkFault::ClosedTooShort);
  // empty and single-vertex open walks are vacuously fine
  CHECK(validate_antidirected(g, {{}, {}, false}).ok);
  CHECK(validate_antidirected(g, {{2}, {}, false}).ok);
}

TEST_CASE("graph text round-trips") {
  const OrientedGraph g = read_graph_text("n 2\n0 1\n");
  CHECK(g.order() == 2);
  CHECK(g.has_arc(0, 1));
  CHECK(!g.has_arc(1, 0));

  const ExtremalInstance inst = generate_extremal({ExtremalFamily::C, 1});
  CHECK(read_graph_text(write_graph(inst.graph)) == inst.graph);

  for (int i = 0; i < 20; ++i) {
    const OrientedGraph r = random_oriented({14, 0.5, SplitMix64::derive(5, i)});
    CHECK(read_graph_text(write_graph(r)) == r);
  }
}

TEST_CASE("parser accepts comments and blank lines") {
  const OrientedGraph g = read_graph_text("# header comment\n\nn 3\n# middle\n0 1\n\n 2 1 \n");
  CHECK(g.arc_count() == 2);
  CHECK(g.has_arc(2, 1));
}

TEST_CASE("parser reports each malformation distinctly") {
  auto fault_of = [](const std::string& text) {
    try {
      read_graph_text(text);
    } catch (const ParseError& e) {
      return e.fault();
    }
    return static_cast<ParseFault>(-1);
  };
  CHECK(fault_of("m 2\n") == ParseFault::MalformedHeader);
  CHECK(fault_of("n 2 junk\n") == ParseFault::MalformedHeader);
  CHECK(fault_of("n 70\n") == ParseFault::MalformedHeader);
  CHECK(fault_of("# only comments\n") == ParseFault::MissingHeader);
  CHECK(fault_of("n 2\n0\n") == ParseFault::BadArcLine);
  CHECK(fault_of("n 2\n0 1 2\n") == ParseFault::BadArcLine);
  CHECK(fault_of("n 2\n0 2\n") == ParseFault::VertexOutOfRange);
  CHECK(fault_of("n 2\n1 1\n") == ParseFault::Loop);
  CHECK(fault_of("n 2\n0 1\n0 1\n") == ParseFault::DuplicateArc);
  CHECK(fault_of("n 2\n0 1\n1 0\n") == ParseFault::TwoCycle);
}

TEST_CASE("relabel requires a permutation and preserves structure") {
  const OrientedGraph g = OrientedGraph::from_arcs(3, {{0, 1}, {1, 2}});
  const std::vector<int> perm{2, 0, 1};
  const OrientedGraph h = relabel(g, perm);
  CHECK(h.has_arc(2, 0));
  CHECK(h.has_arc(0, 1));
  CHECK(h.arc_count() == 2);
  CHECK_THROWS_AS(relabel(g, std::vector<int>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(relabel(g, std::vector<int>{0, 1}), std::invalid_argument);
}

TEST_CASE("vertex set basics") {
  VertexSet s(6, {0, 2, 5});
  CHECK(s.count() == 3);
  CHECK(s.contains(5));
  CHECK(!s.contains(1));
  CHECK(s.complement().count() == 3);
  CHECK((s - VertexSet(6, {2})).count() == 2);
  CHECK(s.to_vector() == std::vector<int>{0, 2, 5});
  CHECK_THROWS_AS(s.add(6), std::out_of_range);
  CHECK_THROWS_AS(VertexSet(65), std::out_of_range);
}

}  // TEST_SUITE
