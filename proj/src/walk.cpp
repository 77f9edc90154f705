#include "adhc/walk.hpp"

namespace adhc {

namespace {

bool step_arc_present(const OrientedGraph& g, int from, int to, StepDir dir) {
  return dir == StepDir::Forward ? g.has_arc(from, to) : g.has_arc(to, from);
}

}  // namespace

WalkCheck validate_antidirected(const OrientedGraph& g, const AntidirectedWalk& walk) {
  const int order = walk.order();
  const int expected_steps = walk.closed ? order : std::max(order - 1, 0);
  if (walk.length() != expected_steps)
    return WalkCheck::fail(WalkFault::ShapeMismatch, -1,
                           "expected " + std::to_string(expected_steps) + " directions, got " +
                               std::to_string(walk.length()));

  std::uint64_t seen = 0;
  for (int i = 0; i < order; ++i) {
    const int v = walk.vertices[static_cast<std::size_t>(i)];
    if (v < 0 || v >= g.order())
      return WalkCheck::fail(WalkFault::VertexOutOfRange, -1, "vertex " + std::to_string(v) + " out of range");
    if (seen & bit_of(v))
      return WalkCheck::fail(WalkFault::RepeatedVertex, -1, "vertex " + std::to_string(v) + " repeated");
    seen |= bit_of(v);
  }

  if (walk.closed) {
    if (order < 4)
      return WalkCheck::fail(WalkFault::ClosedTooShort, -1,
                             "closed walk of order " + std::to_string(order) + "; cycles need >= 4");
    if (order % 2 != 0)
      return WalkCheck::fail(WalkFault::OddClosedLength, -1,
                             "closed antidirected walk of odd order " + std::to_string(order));
  }

  for (int i = 0; i < expected_steps; ++i) {
    const int from = walk.vertices[static_cast<std::size_t>(i)];
    const int to = walk.vertices[static_cast<std::size_t>((i + 1) % order)];
    const StepDir dir = walk.directions[static_cast<std::size_t>(i)];
    if (!step_arc_present(g, from, to, dir))
      return WalkCheck::fail(WalkFault::MissingArc, i,
                             "step " + std::to_string(i) + ": no arc " +
                                 (dir == StepDir::Forward ? std::to_string(from) + "->" + std::to_string(to)
                                                          : std::to_string(to) + "->" + std::to_string(from)));
    if (i > 0 && dir == walk.directions[static_cast<std::size_t>(i - 1)])
      return WalkCheck::fail(WalkFault::AlternationBreak, i,
                             "steps " + std::to_string(i - 1) + "," + std::to_string(i) +
                                 " form a directed path");
  }
  // wrap-around alternation between the closing step and step 0
  if (walk.closed && expected_steps > 0 &&
      walk.directions.back() == walk.directions.front())
    return WalkCheck::fail(WalkFault::AlternationBreak, expected_steps - 1,
                           "closing step and step 0 form a directed path");

  return WalkCheck::pass();
}

}  // namespace adhc
