#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adhc/graph.hpp"

namespace adhc {

// Direction of one step of a walk relative to the traversal order:
// Forward  = the host graph has the arc vertices[i] -> vertices[i+1],
// Backward = the host graph has the arc vertices[i+1] -> vertices[i].
enum class StepDir : std::uint8_t { Forward, Backward };

inline StepDir opposite(StepDir d) {
  return d == StepDir::Forward ? StepDir::Backward : StepDir::Forward;
}

inline const char* to_string(StepDir d) { return d == StepDir::Forward ? "fwd" : "bwd"; }

// A walk through distinct vertices whose steps carry explicit arc directions.
// For an open walk there are order-1 steps; a closed walk has one extra step
// from the last vertex back to the first. Antidirected means consecutive step
// directions differ (wrapping around when closed, which forces even order).
struct AntidirectedWalk {
  std::vector<int> vertices;
  std::vector<StepDir> directions;
  bool closed = false;

  int order() const { return static_cast<int>(vertices.size()); }
  int length() const { return static_cast<int>(directions.size()); }

  VertexSet vertex_set(int universe) const {
    VertexSet s(universe);
    for (int v : vertices) s.add(v);
    return s;
  }
};

enum class WalkFault {
  None,
  ShapeMismatch,     // directions count does not match vertex count
  VertexOutOfRange,
  RepeatedVertex,
  ClosedTooShort,    // closed walks need at least 4 vertices
  OddClosedLength,
  MissingArc,
  AlternationBreak,
};

struct WalkCheck {
  bool ok = true;
  WalkFault fault = WalkFault::None;
  int at_step = -1;  // step index of the first violation, when applicable
  std::string message;

  explicit operator bool() const { return ok; }

  static WalkCheck pass() { return {}; }
  static WalkCheck fail(WalkFault fault, int at_step, std::string message) {
    return {false, fault, at_step, std::move(message)};
  }
};

// Checks every walk invariant against the host graph and reports the first
// violated constraint.
WalkCheck validate_antidirected(const OrientedGraph& g, const AntidirectedWalk& walk);

inline bool spans_all_vertices(const OrientedGraph& g, const AntidirectedWalk& walk) {
  if (walk.order() != g.order()) return false;
  std::uint64_t seen = 0;
  for (int v : walk.vertices) {
    if (v < 0 || v >= g.order()) return false;
    seen |= bit_of(v);
  }
  return seen == g.vertex_mask();
}

inline bool is_antidirected_hamilton_cycle(const OrientedGraph& g, const AntidirectedWalk& walk) {
  return walk.closed && spans_all_vertices(g, walk) && validate_antidirected(g, walk).ok;
}

}  // namespace adhc
