#pragma once

#include <cstdint>
#include <vector>

#include "adhc/graph.hpp"
#include "adhc/partition.hpp"
#include "adhc/rng.hpp"

namespace adhc {

// The three sharpness families. Orders and part sizes:
//   family A: n = 8s+6, |A| = |C| = 2s+1, |B| = |D| = 2s+2, sigma = 6s+4
//   family B: n = 4s,   |A| = 1, |C| = 2s-1, |B| = |D| = s, sigma = 3s
//   family C: n = 4s+2, |A| = 0, |C| = 2s,   |B| = |D| = s+1, sigma = 3s+1
// In each case sigma equals ceil((3n+2)/4) - 1, one below the Hamilton
// threshold, and the graph has no antidirected Hamilton cycle.
enum class ExtremalFamily { A, B, C };

const char* to_string(ExtremalFamily f);
ExtremalFamily family_from_string(const std::string& s);

struct ExtremalSpec {
  ExtremalFamily family = ExtremalFamily::C;
  int s = 1;

  int order() const;
  // family B with s = 1 yields |C| = 1: the one-vertex "tournament" cannot
  // host both the in- and the out-neighbor of the A-vertex, so the instance
  // is generated but flagged degenerate and misses the sigma target.
  bool degenerate() const { return family == ExtremalFamily::B && s < 2; }
  bool valid() const { return s >= 1; }
};

// sigma_{+-} value from the size table above.
int table_sigma(const ExtremalSpec& spec);

// ceil((3n+2)/4) - 1, the largest value below the Hamilton threshold.
int sharpness_threshold(int n);

struct ExtremalInstance {
  OrientedGraph graph;
  Partition4 partition;
  ExtremalSpec spec;
};

// Builds the canonical representative of the family: parts laid out in id
// order A, B, C, D; tournaments are the rotational construction below.
ExtremalInstance generate_extremal(const ExtremalSpec& spec);

// Tournament on m vertices with |d+(v) - d-(v)| <= 1 for every v.
// Odd m: i -> i+j (mod m) for j = 1..(m-1)/2 (all degrees (m-1)/2).
// Even m: the same for j = 1..m/2-1, plus i -> i+m/2 (mod m) for i < m/2.
OrientedGraph almost_regular_tournament(int m);

// Exactly one arc per cross pair of the two sets, oriented b_i -> d_j iff
// i+j is even (indices in ascending id order), so each vertex sends out
// exactly half of its cross pairs. Requires |b| = |d| and even.
std::vector<Arc> almost_regular_bipartite_tournament(const VertexSet& b, const VertexSet& d);

// Each unordered pair gets an arc with probability p, direction a fair coin;
// one splitmix64 stream per instance, two draws per pair in pair order
// (u,v), u < v, so equal (n,p,seed) always produce the identical graph.
struct RandomModel {
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
};

OrientedGraph random_oriented(const RandomModel& model);

}  // namespace adhc
