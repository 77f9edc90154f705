#include "adhc/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace adhc {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_millis(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool arc_for_step(const OrientedGraph& g, int from, int to, StepDir dir) {
  return dir == StepDir::Forward ? g.has_arc(from, to) : g.has_arc(to, from);
}

AntidirectedWalk make_walk(const std::vector<int>& seq, StepDir first, bool closed) {
  AntidirectedWalk w;
  w.vertices = seq;
  w.closed = closed;
  const int steps = closed ? static_cast<int>(seq.size()) : static_cast<int>(seq.size()) - 1;
  for (int i = 0; i < steps; ++i) w.directions.push_back(i % 2 == 0 ? first : opposite(first));
  return w;
}

}  // namespace

SolveResult adhc_oracle(const OrientedGraph& g) {
  const auto start = Clock::now();
  const int n = g.order();
  if (n > kOracleMaxVertices)
    throw std::invalid_argument("adhc_oracle capped at n = " + std::to_string(kOracleMaxVertices));
  if (n < 4 || n % 2 != 0) return {SolveVerdict::None, std::nullopt, 0, elapsed_millis(start)};

  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  std::uint64_t examined = 0;
  do {
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(n));
    seq.push_back(0);
    seq.insert(seq.end(), rest.begin(), rest.end());
    for (StepDir phase : {StepDir::Forward, StepDir::Backward}) {
      ++examined;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const StepDir dir = i % 2 == 0 ? phase : opposite(phase);
        ok = arc_for_step(g, seq[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>((i + 1) % n)], dir);
      }
      if (ok)
        return {SolveVerdict::Found, make_walk(seq, phase, true), examined, elapsed_millis(start)};
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return {SolveVerdict::None, std::nullopt, examined, elapsed_millis(start)};
}

SolveResult adhp_oracle(const OrientedGraph& g, int x, int y, StepDir pattern) {
  const auto start = Clock::now();
  const int n = g.order();
  if (n > kOracleMaxVertices)
    throw std::invalid_argument("adhp_oracle capped at n = " + std::to_string(kOracleMaxVertices));
  if (x < 0 || x >= n || y < 0 || y >= n) throw std::invalid_argument("adhp_oracle: endpoint out of range");
  if (x == y) throw std::invalid_argument("adhp_oracle: endpoints must differ");

  std::vector<int> middle;
  for (int v = 0; v < n; ++v)
    if (v != x && v != y) middle.push_back(v);
  std::sort(middle.begin(), middle.end());

  std::uint64_t examined = 0;
  do {
    ++examined;
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(n));
    seq.push_back(x);
    seq.insert(seq.end(), middle.begin(), middle.end());
    seq.push_back(y);
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) {
      const StepDir dir = i % 2 == 0 ? pattern : opposite(pattern);
      ok = arc_for_step(g, seq[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>(i + 1)], dir);
    }
    if (ok)
      return {SolveVerdict::Found, make_walk(seq, pattern, false), examined, elapsed_millis(start)};
  } while (std::next_permutation(middle.begin(), middle.end()));
  return {SolveVerdict::None, std::nullopt, examined, elapsed_millis(start)};
}

ExpanderReport robust_outexpander_oracle(const OrientedGraph& g, const ExpanderParams& params, int cap) {
  if (!params.valid()) throw std::invalid_argument("expander params need 0 < nu <= tau < 1");
  const int n = g.order();
  if (n > cap) throw std::invalid_argument("robust_outexpander_oracle capped at n = " + std::to_string(cap));

  ExpanderReport report;
  const double lo = params.tau * n, hi = (1.0 - params.tau) * n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (!(static_cast<double>(size) > lo && static_cast<double>(size) < hi)) continue;
    ++report.subsets_checked;
    std::uint64_t rn = 0;
    for (int v = 0; v < n; ++v)
      if (static_cast<double>(g.in_degree_in(v, mask)) >= params.nu * n) rn |= bit_of(v);
    if (static_cast<double>(std::popcount(rn)) < static_cast<double>(size) + params.nu * n) {
      report.is_expander = false;
      report.witness = VertexSet(n, mask);
      report.rn_plus = VertexSet(n, rn);
      return report;
    }
  }
  return report;
}

}  // namespace adhc
