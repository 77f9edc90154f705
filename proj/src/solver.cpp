#include "adhc/solver.hpp"

#include <atomic>
#include <chrono>
#include <climits>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adhc {

const char* to_string(SolveVerdict v) {
  switch (v) {
    case SolveVerdict::Found: return "found";
    case SolveVerdict::None: return "none";
    default: return "budget_exceeded";
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_millis(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// State index with the always-present start bit (vertex 0) dropped:
// ((mask >> 1) * n + last) * 2 + dir.
std::size_t state_index(std::uint64_t mask, int last, StepDir din, int n) {
  return ((static_cast<std::size_t>(mask >> 1) * static_cast<std::size_t>(n)) +
          static_cast<std::size_t>(last)) * 2 +
         (din == StepDir::Backward ? 1 : 0);
}

std::size_t memo_words(int n) {
  return ((std::size_t{1} << (n - 1)) * static_cast<std::size_t>(n) * 2 + 63) / 64;
}

struct PlainMemo {
  std::vector<std::uint64_t> words;
  explicit PlainMemo(int n) : words(memo_words(n), 0) {}
  bool test(std::size_t i) const { return words[i >> 6] & (std::uint64_t{1} << (i & 63)); }
  void set(std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
};

// Bits are only set after a state's subtree is fully exhausted without a
// completion, so concurrent readers either skip a provably dead state or
// re-explore it; both are sound.
struct AtomicMemo {
  std::vector<std::atomic<std::uint64_t>> words;
  explicit AtomicMemo(int n) : words(memo_words(n)) {
    for (auto& w : words) w.store(0, std::memory_order_relaxed);
  }
  bool test(std::size_t i) const {
    return words[i >> 6].load(std::memory_order_relaxed) & (std::uint64_t{1} << (i & 63));
  }
  void set(std::size_t i) {
    words[i >> 6].fetch_or(std::uint64_t{1} << (i & 63), std::memory_order_relaxed);
  }
};

struct SerialControl {
  std::optional<std::uint64_t> budget;
  std::uint64_t states = 0;
  bool budget_hit = false;

  bool tick() {
    ++states;
    if (budget && states > *budget) {
      budget_hit = true;
      return false;
    }
    return true;
  }
  void finish() {}
};

struct SharedControl {
  std::optional<std::uint64_t> budget;
  std::atomic<std::uint64_t> states{0};
  std::atomic<bool> budget_hit{false};
  std::atomic<int> best_task{INT_MAX};
};

// Per-engine view over SharedControl; atomics are only touched every
// kFlushEvery expansions.
struct SharedControlView {
  static constexpr std::uint64_t kFlushEvery = 1024;

  SharedControl* ctl;
  int my_task;
  std::uint64_t unflushed = 0;

  bool tick() {
    if (++unflushed < kFlushEvery) return true;
    ctl->states.fetch_add(unflushed, std::memory_order_relaxed);
    unflushed = 0;
    if (ctl->budget_hit.load(std::memory_order_relaxed)) return false;
    if (ctl->budget && ctl->states.load(std::memory_order_relaxed) > *ctl->budget) {
      ctl->budget_hit.store(true, std::memory_order_relaxed);
      return false;
    }
    // a strictly earlier subtree already found a cycle; this subtree's result
    // can no longer be the canonical one
    if (ctl->best_task.load(std::memory_order_relaxed) < my_task) return false;
    return true;
  }
  void finish() {
    ctl->states.fetch_add(unflushed, std::memory_order_relaxed);
    unflushed = 0;
  }
};

enum class DfsOutcome { Found, Exhausted, Stopped };

template <class Memo, class Control>
class Engine {
 public:
  Engine(const OrientedGraph& g, Memo& memo, Control& ctl, std::optional<int> target_end)
      : g_(g), memo_(memo), ctl_(ctl), target_(target_end), full_(g.vertex_mask()), n_(g.order()) {}

  // Runs one first-arc subtree: state after the step start->v1.
  DfsOutcome run(int v1, StepDir din) {
    path_.clear();
    path_.push_back(0);
    path_.push_back(v1);
    const DfsOutcome out = dfs(bit_of(0) | bit_of(v1), v1, din);
    ctl_.finish();
    return out;
  }

  const std::vector<int>& path() const { return path_; }

 private:
  DfsOutcome dfs(std::uint64_t mask, int last, StepDir din) {
    if (mask == full_) {
      if (target_) return last == *target_ ? DfsOutcome::Found : DfsOutcome::Exhausted;
      // closing step back to vertex 0 must alternate against the entering arc
      const bool closes = din == StepDir::Forward ? g_.has_arc(0, last) : g_.has_arc(last, 0);
      return closes ? DfsOutcome::Found : DfsOutcome::Exhausted;
    }
    const std::size_t idx = state_index(mask, last, din, n_);
    if (memo_.test(idx)) return DfsOutcome::Exhausted;
    if (!ctl_.tick()) return DfsOutcome::Stopped;

    // alternation: a Forward arc into `last` forces the next arc to point
    // into `last` as well (Backward step), and vice versa
    const std::uint64_t cand =
        (din == StepDir::Forward ? g_.in_row(last) : g_.out_row(last)) & ~mask;
    for (int v : set_bits(cand)) {
      if (target_ && v == *target_ && (mask | bit_of(v)) != full_) continue;
      path_.push_back(v);
      const DfsOutcome out = dfs(mask | bit_of(v), v, opposite(din));
      if (out != DfsOutcome::Exhausted) return out;
      path_.pop_back();
    }
    memo_.set(idx);
    return DfsOutcome::Exhausted;
  }

  const OrientedGraph& g_;
  Memo& memo_;
  Control& ctl_;
  std::optional<int> target_;
  std::uint64_t full_;
  int n_;
  std::vector<int> path_;
};

struct FirstArc {
  StepDir dir;  // direction of the step start -> v1
  int v1;
};

AntidirectedWalk assemble_walk(const std::vector<int>& vertices, StepDir first, bool closed) {
  AntidirectedWalk walk;
  walk.vertices = vertices;
  walk.closed = closed;
  const int steps = closed ? static_cast<int>(vertices.size()) : static_cast<int>(vertices.size()) - 1;
  walk.directions.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    walk.directions.push_back(i % 2 == 0 ? first : opposite(first));
  return walk;
}

std::vector<FirstArc> cycle_first_arcs(const OrientedGraph& g) {
  std::vector<FirstArc> tasks;
  for (int v : set_bits(g.out_row(0))) tasks.push_back({StepDir::Forward, v});
  for (int v : set_bits(g.in_row(0))) tasks.push_back({StepDir::Backward, v});
  return tasks;
}

SolveResult solve_serial(const OrientedGraph& g, const std::vector<FirstArc>& tasks,
                         std::optional<int> target, std::optional<std::uint64_t> budget,
                         Clock::time_point start) {
  PlainMemo memo(g.order());
  SerialControl ctl{budget};
  for (const FirstArc& task : tasks) {
    Engine<PlainMemo, SerialControl> engine(g, memo, ctl, target);
    const DfsOutcome out = engine.run(task.v1, task.dir);
    if (out == DfsOutcome::Found) {
      SolveResult res{SolveVerdict::Found, assemble_walk(engine.path(), task.dir, !target.has_value()),
                      ctl.states, elapsed_millis(start)};
      return res;
    }
    if (out == DfsOutcome::Stopped)
      return {SolveVerdict::BudgetExceeded, std::nullopt, ctl.states, elapsed_millis(start)};
  }
  return {SolveVerdict::None, std::nullopt, ctl.states, elapsed_millis(start)};
}

SolveResult solve_parallel(const OrientedGraph& g, const std::vector<FirstArc>& tasks,
                           std::optional<int> target, const SolveOptions& opts,
                           Clock::time_point start) {
#ifndef _OPENMP
  return solve_serial(g, tasks, target, opts.budget_states, start);
#else
  AtomicMemo memo(g.order());
  SharedControl ctl;
  ctl.budget = opts.budget_states;
  std::vector<std::vector<int>> found_paths(tasks.size());

  const int task_count = static_cast<int>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.threads)
  for (int t = 0; t < task_count; ++t) {
    if (ctl.best_task.load(std::memory_order_relaxed) < t) continue;
    SharedControlView view{&ctl, t};
    Engine<AtomicMemo, SharedControlView> engine(g, memo, view, target);
    const DfsOutcome out = engine.run(tasks[static_cast<std::size_t>(t)].v1,
                                      tasks[static_cast<std::size_t>(t)].dir);
    if (out == DfsOutcome::Found) {
      found_paths[static_cast<std::size_t>(t)] = engine.path();
      int cur = ctl.best_task.load(std::memory_order_relaxed);
      while (t < cur && !ctl.best_task.compare_exchange_weak(cur, t)) {
      }
    }
  }

  const std::uint64_t states = ctl.states.load(std::memory_order_relaxed);
  const int best = ctl.best_task.load(std::memory_order_relaxed);
  if (best != INT_MAX) {
    const FirstArc& task = tasks[static_cast<std::size_t>(best)];
    return {SolveVerdict::Found,
            assemble_walk(found_paths[static_cast<std::size_t>(best)], task.dir, !target.has_value()),
            states, elapsed_millis(start)};
  }
  if (ctl.budget_hit.load(std::memory_order_relaxed))
    return {SolveVerdict::BudgetExceeded, std::nullopt, states, elapsed_millis(start)};
  return {SolveVerdict::None, std::nullopt, states, elapsed_millis(start)};
#endif
}

SolveResult dispatch(const OrientedGraph& g, const std::vector<FirstArc>& tasks,
                     std::optional<int> target, const SolveOptions& opts, Clock::time_point start) {
  if (opts.threads > 1 && tasks.size() > 1) return solve_parallel(g, tasks, target, opts, start);
  return solve_serial(g, tasks, target, opts.budget_states, start);
}

void check_solver_order(const OrientedGraph& g) {
  if (g.order() > kSolverMaxVertices)
    throw std::invalid_argument("solver capped at n = " + std::to_string(kSolverMaxVertices) +
                                " (memo needs 2^(n-1)*n*2 bits)");
}

}  // namespace

SolveResult find_adhc(const OrientedGraph& g, const SolveOptions& opts) {
  const auto start = Clock::now();
  const int n = g.order();
  // parity / triviality: antidirected cycles have even order >= 4
  if (n < 4 || n % 2 != 0) return {SolveVerdict::None, std::nullopt, 0, elapsed_millis(start)};
  check_solver_order(g);

  SolveResult res = dispatch(g, cycle_first_arcs(g), std::nullopt, opts, start);
  if (res.verdict == SolveVerdict::Found &&
      !is_antidirected_hamilton_cycle(g, *res.witness))
    throw std::logic_error("find_adhc produced an invalid witness");
  return res;
}

SolveResult find_adhp_between(const OrientedGraph& g, int x, int y, StepDir pattern,
                              const SolveOptions& opts) {
  const auto start = Clock::now();
  const int n = g.order();
  if (x < 0 || x >= n || y < 0 || y >= n) throw std::invalid_argument("find_adhp_between: endpoint out of range");
  if (x == y) throw std::invalid_argument("find_adhp_between: endpoints must differ");
  check_solver_order(g);

  // normalize the start to vertex 0 (swap ids 0 and x) so the memo layout can
  // drop the start bit
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
  std::swap(perm[0], perm[static_cast<std::size_t>(x)]);
  const OrientedGraph h = x == 0 ? g : relabel(g, perm);
  const int target = perm[static_cast<std::size_t>(y)];

  std::vector<FirstArc> tasks;
  const std::uint64_t firsts =
      (pattern == StepDir::Forward ? h.out_row(0) : h.in_row(0));
  for (int v : set_bits(firsts)) {
    if (v == target && n > 2) continue;
    tasks.push_back({pattern, v});
  }

  SolveResult res = dispatch(h, tasks, target, opts, start);
  if (res.verdict == SolveVerdict::Found) {
    for (int& v : res.witness->vertices) v = perm[static_cast<std::size_t>(v)];  // perm is an involution
    if (!spans_all_vertices(g, *res.witness) || !validate_antidirected(g, *res.witness).ok ||
        res.witness->vertices.front() != x || res.witness->vertices.back() != y ||
        res.witness->directions.front() != pattern)
      throw std::logic_error("find_adhp_between produced an invalid witness");
  }
  return res;
}

}  // namespace adhc
