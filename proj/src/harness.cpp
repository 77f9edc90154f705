#include "adhc/harness.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "adhc/oracles.hpp"
#include "adhc/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adhc {

using nlohmann::json;

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ADHC_LAB_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
#ifdef _OPENMP
  return std::max(1, omp_get_max_threads());
#else
  return 1;
#endif
}

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Fail: return "fail";
    default: return "inconclusive";
  }
}

namespace {

void tally(RunSummary& summary, RowStatus status) {
  switch (status) {
    case RowStatus::Pass: ++summary.pass; break;
    case RowStatus::Fail: ++summary.fail; break;
    default: ++summary.inconclusive; break;
  }
}

template <class Fn>
void parallel_indexed(int count, int threads, Fn&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, threads))
#endif
  for (int i = 0; i < count; ++i) fn(i);
  (void)threads;
}

json sigma_json(const std::optional<int>& sigma) {
  return sigma ? json(*sigma) : json(nullptr);
}

std::string csv_sigma(const std::optional<int>& sigma) {
  return sigma ? std::to_string(*sigma) : "inf";
}

}  // namespace

// ---------------------------------------------------------------- sharpness

SharpnessReport run_sharpness(std::span<const ExtremalSpec> plan, std::optional<std::uint64_t> budget,
                              int threads) {
  SharpnessReport report;
  report.rows.resize(plan.size());

  parallel_indexed(static_cast<int>(plan.size()), resolve_threads(threads), [&](int i) {
    const ExtremalSpec& spec = plan[static_cast<std::size_t>(i)];
    SharpnessRow row;
    row.family = spec.family;
    row.s = spec.s;
    row.n = spec.order();
    row.sigma_expected = table_sigma(spec);
    row.threshold = sharpness_threshold(row.n);
    row.degenerate = spec.degenerate();

    const ExtremalInstance inst = generate_extremal(spec);
    row.sigma_actual = sigma_plus_minus(inst.graph);
    const SolveResult solved = find_adhc(inst.graph, {budget, 1});
    row.verdict = solved.verdict;
    row.states = solved.states_expanded;

    if (solved.verdict == SolveVerdict::BudgetExceeded)
      row.status = RowStatus::Inconclusive;
    else if (row.sigma_actual && *row.sigma_actual == row.sigma_expected &&
             row.sigma_expected == row.threshold && solved.verdict == SolveVerdict::None)
      row.status = RowStatus::Pass;
    else
      row.status = RowStatus::Fail;
    report.rows[static_cast<std::size_t>(i)] = row;
  });

  for (const SharpnessRow& row : report.rows) tally(report.summary, row.status);
  return report;
}

// --------------------------------------------------------------- crosscheck

std::uint64_t labeled_oriented_count(int n) {
  std::uint64_t count = 1;
  for (int i = 0; i < n * (n - 1) / 2; ++i) count *= 3;
  return count;
}

OrientedGraph labeled_oriented_graph(int n, std::uint64_t index) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int digit = static_cast<int>(index % 3);
      index /= 3;
      if (digit == 1) arcs.push_back({u, v});
      if (digit == 2) arcs.push_back({v, u});
    }
  return OrientedGraph::from_arcs(n, arcs);
}

CrosscheckReport run_crosscheck(const CrosscheckConfig& config, int threads) {
  if (config.n > kOracleMaxVertices)
    throw std::invalid_argument("crosscheck: n above oracle cap " + std::to_string(kOracleMaxVertices));
  if (config.exhaustive && config.n > 4)
    throw std::invalid_argument("crosscheck: exhaustive enumeration supported only for n <= 4");

  CrosscheckReport report;
  if (config.exhaustive) {
    const std::uint64_t total = labeled_oriented_count(config.n);
    report.rows.resize(total);
    parallel_indexed(static_cast<int>(total), resolve_threads(threads), [&](int i) {
      CrosscheckRow row;
      row.index = i;
      row.n = config.n;
      const OrientedGraph g = labeled_oriented_graph(config.n, static_cast<std::uint64_t>(i));
      row.solver = find_adhc(g).verdict;
      row.oracle = adhc_oracle(g).verdict;
      row.match = row.solver == row.oracle;
      report.rows[static_cast<std::size_t>(i)] = row;
    });
  } else {
    const int total = config.count * static_cast<int>(config.p_grid.size());
    report.rows.resize(static_cast<std::size_t>(total));
    parallel_indexed(total, resolve_threads(threads), [&](int i) {
      CrosscheckRow row;
      row.index = i;
      row.n = config.n;
      row.p = config.p_grid[static_cast<std::size_t>(i) / static_cast<std::size_t>(config.count)];
      row.model_seed = SplitMix64::derive(config.seed, static_cast<std::uint64_t>(i));
      const OrientedGraph g = random_oriented({config.n, *row.p, *row.model_seed});
      row.solver = find_adhc(g).verdict;
      row.oracle = adhc_oracle(g).verdict;
      row.match = row.solver == row.oracle;
      report.rows[static_cast<std::size_t>(i)] = row;
    });
  }

  for (const CrosscheckRow& row : report.rows) {
    if (!row.match) ++report.mismatches;
    tally(report.summary, row.match ? RowStatus::Pass : RowStatus::Fail);
  }
  return report;
}

// -------------------------------------------------------------------- sweep

OreSemidegreeCheck ore_semidegree_check(std::optional<int> sigma, int delta0, int n, int gamma_percent) {
  OreSemidegreeCheck r;
  // sigma >= n(100 + 3k)/200 and delta0 >= kn/100, in integers
  r.hypothesis = !sigma.has_value() ||
                 static_cast<long long>(*sigma) * 200 >= static_cast<long long>(n) * (100 + 3 * gamma_percent);
  r.conclusion = static_cast<long long>(delta0) * 100 >= static_cast<long long>(n) * gamma_percent;
  r.violated = r.hypothesis && !r.conclusion;
  return r;
}

SweepReport run_sweep(const SweepConfig& config, int threads) {
  struct Instance {
    SweepRow row;
    OrientedGraph graph;
  };
  std::vector<Instance> instances;
  for (int n : config.n_values)
    for (double p : config.p_grid)
      for (std::uint64_t seed : config.seeds) {
        Instance inst;
        inst.row.source = "random";
        inst.row.n = n;
        inst.row.p = p;
        inst.row.seed = seed;
        inst.graph = random_oriented({n, p, seed});
        instances.push_back(std::move(inst));
      }
  for (const ExtremalSpec& spec : config.extremal) {
    Instance inst;
    inst.row.source = "extremal";
    inst.row.family = spec.family;
    inst.row.s = spec.s;
    inst.row.n = spec.order();
    inst.graph = generate_extremal(spec).graph;
    instances.push_back(std::move(inst));
  }

  SweepReport report;
  report.rows.resize(instances.size());
  parallel_indexed(static_cast<int>(instances.size()), resolve_threads(threads), [&](int i) {
    Instance& inst = instances[static_cast<std::size_t>(i)];
    SweepRow& row = inst.row;
    const DegreeProfile profile = degree_profile(inst.graph);
    row.sigma = profile.sigma_pm;
    row.delta0 = profile.delta0;

    for (int gamma : config.gamma_percents)
      if (ore_semidegree_check(row.sigma, row.delta0, row.n, gamma).violated)
        row.violated_gammas.push_back(gamma);

    // Hamilton hypothesis: even order and 4*sigma >= 3n+2 (odd orders skipped)
    row.hypothesis = row.n % 2 == 0 &&
                     (!row.sigma.has_value() || 4LL * *row.sigma >= 3LL * row.n + 2);
    row.status = row.violated_gammas.empty() ? RowStatus::Pass : RowStatus::Fail;

    if (row.hypothesis && config.run_solver && row.n <= kSolverMaxVertices) {
      const SolveResult solved = find_adhc(inst.graph, {config.budget, 1});
      row.verdict = solved.verdict;
      if (solved.verdict == SolveVerdict::BudgetExceeded && row.status == RowStatus::Pass)
        row.status = RowStatus::Inconclusive;
      row.hypothesis_without_adhc = solved.verdict == SolveVerdict::None;
    }
    report.rows[static_cast<std::size_t>(i)] = row;
  });

  for (const SweepRow& row : report.rows) {
    report.violations += static_cast<int>(row.violated_gammas.size());
    tally(report.summary, row.status);
  }
  return report;
}

// ---------------------------------------------------------------- reporting

namespace {

json to_json(const SharpnessRow& row) {
  return json{{"kind", "sharpness"},
              {"family", to_string(row.family)},
              {"s", row.s},
              {"n", row.n},
              {"sigma_expected", row.sigma_expected},
              {"sigma_actual", sigma_json(row.sigma_actual)},
              {"threshold", row.threshold},
              {"verdict", to_string(row.verdict)},
              {"states", row.states},
              {"degenerate", row.degenerate},
              {"status", to_string(row.status)}};
}

json to_json(const CrosscheckRow& row) {
  json j{{"kind", "crosscheck"},
         {"index", row.index},
         {"n", row.n},
         {"solver", to_string(row.solver)},
         {"oracle", to_string(row.oracle)},
         {"match", row.match}};
  if (row.p) j["p"] = *row.p;
  if (row.model_seed) j["model_seed"] = *row.model_seed;
  return j;
}

json to_json(const SweepRow& row) {
  json j{{"kind", "sweep"},
         {"source", row.source},
         {"n", row.n},
         {"sigma", sigma_json(row.sigma)},
         {"delta0", row.delta0},
         {"violated_gammas", row.violated_gammas},
         {"hypothesis", row.hypothesis},
         {"status", to_string(row.status)}};
  if (row.family) j["family"] = to_string(*row.family);
  if (row.s) j["s"] = *row.s;
  if (row.p) j["p"] = *row.p;
  if (row.seed) j["seed"] = *row.seed;
  if (row.verdict) {
    j["verdict"] = to_string(*row.verdict);
    j["hypothesis_without_adhc"] = row.hypothesis_without_adhc;
  }
  return j;
}

template <class Report>
std::string rows_to_jsonl(const Report& report) {
  std::ostringstream out;
  for (const auto& row : report.rows) out << to_json(row).dump() << "\n";
  return out.str();
}

}  // namespace

std::string to_jsonl(const SharpnessReport& report) { return rows_to_jsonl(report); }
std::string to_jsonl(const CrosscheckReport& report) { return rows_to_jsonl(report); }
std::string to_jsonl(const SweepReport& report) { return rows_to_jsonl(report); }

std::string to_csv(const SharpnessReport& report) {
  std::ostringstream out;
  out << "family,s,n,sigma_expected,sigma_actual,threshold,verdict,states,degenerate,status\n";
  for (const SharpnessRow& r : report.rows)
    out << to_string(r.family) << "," << r.s << "," << r.n << "," << r.sigma_expected << ","
        << csv_sigma(r.sigma_actual) << "," << r.threshold << "," << to_string(r.verdict) << ","
        << r.states << "," << (r.degenerate ? 1 : 0) << "," << to_string(r.status) << "\n";
  return out.str();
}

std::string to_csv(const CrosscheckReport& report) {
  std::ostringstream out;
  out << "index,n,p,model_seed,solver,oracle,match\n";
  for (const CrosscheckRow& r : report.rows) {
    out << r.index << "," << r.n << ",";
    if (r.p) out << *r.p;
    out << ",";
    if (r.model_seed) out << *r.model_seed;
    out << "," << to_string(r.solver) << "," << to_string(r.oracle) << "," << (r.match ? 1 : 0) << "\n";
  }
  return out.str();
}

std::string to_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "source,family,s,n,p,seed,sigma,delta0,violated_gammas,hypothesis,verdict,"
         "hypothesis_without_adhc,status\n";
  for (const SweepRow& r : report.rows) {
    out << r.source << ",";
    if (r.family) out << to_string(*r.family);
    out << ",";
    if (r.s) out << *r.s;
    out << "," << r.n << ",";
    if (r.p) out << *r.p;
    out << ",";
    if (r.seed) out << *r.seed;
    out << "," << csv_sigma(r.sigma) << "," << r.delta0 << ",";
    for (std::size_t i = 0; i < r.violated_gammas.size(); ++i)
      out << (i ? ";" : "") << r.violated_gammas[i];
    out << "," << (r.hypothesis ? 1 : 0) << ",";
    if (r.verdict) out << to_string(*r.verdict);
    out << "," << (r.hypothesis_without_adhc ? 1 : 0) << "," << to_string(r.status) << "\n";
  }
  return out.str();
}

// ------------------------------------------------------------ list parsing

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

}  // namespace

std::vector<ExtremalSpec> parse_extremal_plan(const std::string& plan) {
  std::vector<ExtremalSpec> specs;
  for (const std::string& group : split(plan, ',')) {
    const auto colon = group.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("plan group \"" + group + "\" needs the form family:s or family:lo-hi");
    const ExtremalFamily family = family_from_string(group.substr(0, colon));
    const std::string range = group.substr(colon + 1);
    const auto dash = range.find('-');
    const int lo = std::stoi(dash == std::string::npos ? range : range.substr(0, dash));
    const int hi = dash == std::string::npos ? lo : std::stoi(range.substr(dash + 1));
    if (lo < 1 || hi < lo) throw std::invalid_argument("bad s range in plan group \"" + group + "\"");
    for (int s = lo; s <= hi; ++s) specs.push_back({family, s});
  }
  return specs;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  for (const std::string& part : split(text, ',')) {
    const auto dots = part.find("..");
    const auto dash = part.find('-');
    if (dots != std::string::npos) {
      const int lo = std::stoi(part.substr(0, dots)), hi = std::stoi(part.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) values.push_back(v);
    } else if (dash != std::string::npos && dash > 0) {
      const int lo = std::stoi(part.substr(0, dash)), hi = std::stoi(part.substr(dash + 1));
      for (int v = lo; v <= hi; ++v) values.push_back(v);
    } else {
      values.push_back(std::stoi(part));
    }
  }
  return values;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  for (const std::string& part : split(text, ',')) values.push_back(std::stod(part));
  return values;
}

}  // namespace adhc
