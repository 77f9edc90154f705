#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adhc/generators.hpp"
#include "adhc/graph.hpp"
#include "adhc/solver.hpp"

namespace adhc {

// Worker count for batch runs: explicit request > ADHC_LAB_THREADS env > 1.
int resolve_threads(int requested = 0);

inline constexpr int kReportSchemaVersion = 1;

enum class RowStatus { Pass, Fail, Inconclusive };
const char* to_string(RowStatus s);

struct RunSummary {
  int pass = 0, fail = 0, inconclusive = 0;
  // 0 all pass, 1 any fail, 2 inconclusive rows but no failure
  int exit_code() const { return fail > 0 ? 1 : (inconclusive > 0 ? 2 : 0); }
};

// ---------------------------------------------------------------- sharpness

struct SharpnessRow {
  ExtremalFamily family = ExtremalFamily::C;
  int s = 1;
  int n = 0;
  int sigma_expected = 0;
  std::optional<int> sigma_actual;
  int threshold = 0;  // ceil((3n+2)/4) - 1
  SolveVerdict verdict = SolveVerdict::None;
  std::uint64_t states = 0;
  bool degenerate = false;
  RowStatus status = RowStatus::Fail;
};

struct SharpnessReport {
  std::vector<SharpnessRow> rows;
  RunSummary summary;
};

// Generates each family instance, measures sigma, runs the exact solver.
// A row passes iff sigma_actual = expected = threshold and the verdict is
// NONE; a budget-hit row is INCONCLUSIVE, never a pass.
SharpnessReport run_sharpness(std::span<const ExtremalSpec> plan,
                              std::optional<std::uint64_t> budget = std::nullopt, int threads = 0);

// --------------------------------------------------------------- crosscheck

struct CrosscheckConfig {
  int n = 8;
  int count = 100;                    // graphs per p-grid entry
  std::vector<double> p_grid{0.5};
  std::uint64_t seed = 0;             // master seed; instance i uses derive(seed, i)
  bool exhaustive = false;            // enumerate all 3^(n(n-1)/2) labeled graphs (n <= 4)
};

struct CrosscheckRow {
  int index = 0;
  int n = 0;
  std::optional<double> p;            // absent in exhaustive mode
  std::optional<std::uint64_t> model_seed;
  SolveVerdict solver = SolveVerdict::None;
  SolveVerdict oracle = SolveVerdict::None;
  bool match = false;
};

struct CrosscheckReport {
  std::vector<CrosscheckRow> rows;
  int mismatches = 0;
  RunSummary summary;
};

CrosscheckReport run_crosscheck(const CrosscheckConfig& config, int threads = 0);

// For the exhaustive mode and the test suite: the graph with the given index
// in the labeled enumeration (base-3 digit per pair (u,v), u < v, in
// lexicographic pair order: 0 none, 1 u->v, 2 v->u).
OrientedGraph labeled_oriented_graph(int n, std::uint64_t index);
std::uint64_t labeled_oriented_count(int n);  // 3^(n(n-1)/2)

// -------------------------------------------------------------------- sweep

// Exact integer form of "sigma >= (n + 3*gamma*n)/2 implies delta0 >=
// gamma*n" with gamma = gamma_percent/100; holds for every oriented graph,
// so any violation is an implementation bug.
struct OreSemidegreeCheck {
  bool hypothesis = false;
  bool conclusion = false;
  bool violated = false;
};

OreSemidegreeCheck ore_semidegree_check(std::optional<int> sigma, int delta0, int n, int gamma_percent);

struct SweepConfig {
  std::vector<int> n_values;
  std::vector<double> p_grid{0.5};
  std::vector<std::uint64_t> seeds{0};
  std::vector<int> gamma_percents{5, 10, 15, 20, 25, 30};
  std::vector<ExtremalSpec> extremal;  // extra instances injected into the corpus
  std::optional<std::uint64_t> budget;
  bool run_solver = true;
};

struct SweepRow {
  std::string source;  // "random" or "extremal"
  std::optional<ExtremalFamily> family;
  std::optional<int> s;
  int n = 0;
  std::optional<double> p;
  std::optional<std::uint64_t> seed;
  std::optional<int> sigma;
  int delta0 = 0;
  std::vector<int> violated_gammas;       // must stay empty
  bool hypothesis = false;                // n even and sigma >= (3n+2)/4
  std::optional<SolveVerdict> verdict;    // present when the hypothesis row ran the solver
  bool hypothesis_without_adhc = false;   // data point, not a failure
  RowStatus status = RowStatus::Pass;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  int violations = 0;
  RunSummary summary;
};

SweepReport run_sweep(const SweepConfig& config, int threads = 0);

// ---------------------------------------------------------------- reporting

// One JSON object per row, keys sorted, no timestamps: identical configs and
// seeds serialize byte-identically.
std::string to_jsonl(const SharpnessReport& report);
std::string to_jsonl(const CrosscheckReport& report);
std::string to_jsonl(const SweepReport& report);

std::string to_csv(const SharpnessReport& report);
std::string to_csv(const CrosscheckReport& report);
std::string to_csv(const SweepReport& report);

// "c:1-4,b:2-5,a:1-2" -> specs in listed order.
std::vector<ExtremalSpec> parse_extremal_plan(const std::string& plan);
std::vector<int> parse_int_list(const std::string& text);        // "4..20" / "4-20" / "4,6,8"
std::vector<double> parse_double_list(const std::string& text);  // "0.2,0.5,0.8"

}  // namespace adhc
