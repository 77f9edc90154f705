// Command-line front end: generation, exact solving, structural analysis and
// batch experiments over the graph text format.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "adhc/classify.hpp"
#include "adhc/expander.hpp"
#include "adhc/generators.hpp"
#include "adhc/graph_io.hpp"
#include "adhc/harness.hpp"
#include "adhc/oracles.hpp"
#include "adhc/partition.hpp"
#include "adhc/rng.hpp"
#include "adhc/solver.hpp"
#include "adhc/structure.hpp"

using nlohmann::json;
using namespace adhc;

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
  out << text;
}

json meta_line(const std::string& command, const json& config) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return json{{"kind", "meta"},
              {"schema_version", kReportSchemaVersion},
              {"rng", kRngAlgorithm},
              {"command", command},
              {"config", config},
              {"timestamp", stamp}};
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::runtime_error("expected k=v in \"" + item + "\"");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

std::string kv_get(const std::map<std::string, std::string>& kv, const std::string& key,
                   const std::string& fallback = "") {
  const auto it = kv.find(key);
  if (it == kv.end()) {
    if (fallback.empty()) throw std::runtime_error("missing required parameter \"" + key + "\"");
    return fallback;
  }
  return it->second;
}

json ids(const VertexSet& s) { return json(s.to_vector()); }

json partition_json(const Partition4& p) {
  return json{{"a", ids(p.a)}, {"b", ids(p.b)}, {"c", ids(p.c)}, {"d", ids(p.d)}};
}

// "a:0,1;b:2,3;c:;d:4" (a part may be listed empty or omitted)
Partition4 parse_partition(const std::string& text, int n) {
  Partition4 p(n);
  std::istringstream in(text);
  std::string group;
  while (std::getline(in, group, ';')) {
    if (group.empty()) continue;
    const auto colon = group.find(':');
    if (colon == std::string::npos) throw std::runtime_error("partition group \"" + group + "\" needs part:ids");
    const std::string part = group.substr(0, colon);
    VertexSet* target = part == "a" ? &p.a : part == "b" ? &p.b : part == "c" ? &p.c
                        : part == "d" ? &p.d : nullptr;
    if (!target) throw std::runtime_error("unknown part \"" + part + "\"");
    std::istringstream ids_in(group.substr(colon + 1));
    std::string id;
    while (std::getline(ids_in, id, ','))
      if (!id.empty()) target->add(std::stoi(id));
  }
  if (!p.well_formed()) throw std::runtime_error("partition does not cover 0.." + std::to_string(n - 1));
  return p;
}

json solve_json(const SolveResult& r) {
  json j{{"verdict", to_string(r.verdict)},
         {"states", r.states_expanded},
         {"millis", r.millis},
         {"witness", nullptr},
         {"directions", nullptr}};
  if (r.witness) {
    j["witness"] = r.witness->vertices;
    json dirs = json::array();
    for (StepDir d : r.witness->directions) dirs.push_back(to_string(d));
    j["directions"] = dirs;
  }
  return j;
}

struct ExperimentIo {
  std::string out_path;
  std::string format = "json";
};

template <class Report>
int finish_experiment(const std::string& command, const json& config, const Report& report,
                      const ExperimentIo& io) {
  if (io.format == "csv") {
    emit(to_csv(report), io.out_path);
  } else {
    emit(meta_line(command, config).dump() + "\n" + to_jsonl(report), io.out_path);
  }
  return report.summary.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"antidirected Hamilton cycle laboratory for oriented graphs"};
  app.require_subcommand(1);

  // ------------------------------------------------------------------- gen
  auto* gen = app.add_subcommand("gen", "generate extremal-family or random oriented graphs");
  std::string gen_family, gen_random, gen_out, gen_partition_out;
  int gen_s = 1;
  gen->add_option("--family", gen_family, "extremal family: a, b or c");
  gen->add_option("--s", gen_s, "family scale parameter (s >= 1)");
  gen->add_option("--random", gen_random, "random model, e.g. n=10,p=0.4,seed=7");
  gen->add_option("--out", gen_out, "write graph text here (default stdout)");
  gen->add_option("--partition-out", gen_partition_out, "write the defining partition as JSON");
  gen->callback([&] {
    if (gen_family.empty() == gen_random.empty())
      throw CLI::ValidationError("gen", "pass exactly one of --family or --random");
    if (!gen_family.empty()) {
      const ExtremalSpec spec{family_from_string(gen_family), gen_s};
      const ExtremalInstance inst = generate_extremal(spec);
      emit(write_graph(inst.graph), gen_out);
      if (!gen_partition_out.empty()) {
        json j{{"family", to_string(spec.family)}, {"s", spec.s},      {"n", spec.order()},
               {"degenerate", spec.degenerate()},  {"sigma", table_sigma(spec)}};
        j.update(partition_json(inst.partition));
        emit(j.dump(2) + "\n", gen_partition_out);
      }
    } else {
      const auto kv = parse_kv(gen_random);
      const RandomModel model{std::stoi(kv_get(kv, "n")), std::stod(kv_get(kv, "p")),
                              std::stoull(kv_get(kv, "seed", "0"))};
      emit(write_graph(random_oriented(model)), gen_out);
    }
  });

  // ----------------------------------------------------------------- solve
  auto* solve = app.add_subcommand("solve", "exact antidirected Hamilton cycle / path decision");
  std::string solve_in, solve_pattern = "fwd", solve_out;
  std::vector<int> solve_path;
  std::uint64_t solve_budget = 0;
  int solve_threads = 1;
  solve->add_option("--in", solve_in, "graph file")->required();
  solve->add_option("--budget-states", solve_budget, "abort after this many state expansions");
  solve->add_option("--path", solve_path, "decide a Hamilton path between two vertices")->expected(2);
  solve->add_option("--pattern", solve_pattern, "direction of the first arc for --path: fwd or bwd");
  solve->add_option("--threads", solve_threads,
                    "parallelize first-arc subtrees (memory: 2^(n-1)*n*2 memo bits per solve)");
  solve->add_option("--out", solve_out, "write the JSON result here (default stdout)");
  solve->callback([&] {
    const OrientedGraph g = read_graph_file(solve_in);
    SolveOptions opts;
    if (solve_budget > 0) opts.budget_states = solve_budget;
    opts.threads = solve_threads;
    SolveResult r;
    if (!solve_path.empty()) {
      const StepDir pattern = solve_pattern == "bwd" ? StepDir::Backward : StepDir::Forward;
      r = find_adhp_between(g, solve_path[0], solve_path[1], pattern, opts);
    } else {
      r = find_adhc(g, opts);
    }
    emit(solve_json(r).dump(2) + "\n", solve_out);
    if (r.verdict == SolveVerdict::BudgetExceeded) throw CLI::RuntimeError(2);
  });

  // --------------------------------------------------------------- analyze
  auto* analyze = app.add_subcommand("analyze", "structural reports over a graph file");
  std::string an_in, an_op, an_params, an_partition, an_out;
  analyze->add_option("--in", an_in, "graph file")->required();
  analyze->add_option("--op", an_op, "sigma | expander | nice-partition | classify | special-arcs")
      ->required();
  analyze->add_option("--params", an_params, "comma-separated k=v list, e.g. nu=0.1,tau=0.2");
  analyze->add_option("--partition", an_partition, "explicit partition, e.g. a:0;b:1,2;c:3;d:4,5");
  analyze->add_option("--out", an_out, "write the JSON report here (default stdout)");
  analyze->callback([&] {
    const OrientedGraph g = read_graph_file(an_in);
    const auto kv = parse_kv(an_params);
    json report{{"op", an_op}, {"n", g.order()}};

    if (an_op == "sigma") {
      const DegreeProfile profile = degree_profile(g);
      report["sigma"] = profile.sigma_pm ? json(*profile.sigma_pm) : json(nullptr);
      report["delta0"] = profile.delta0;
      json per = json::array();
      for (const auto& [dp, dm] : profile.per_vertex) per.push_back(json::array({dp, dm}));
      report["per_vertex"] = per;
    } else if (an_op == "expander" || an_op == "nice-partition") {
      const ExpanderParams params{std::stod(kv_get(kv, "nu")), std::stod(kv_get(kv, "tau"))};
      ExpanderOptions opts;
      opts.exact_cap = std::stoi(kv_get(kv, "cap", "20"));
      opts.threads = std::stoi(kv_get(kv, "threads", "1"));
      opts.samples = std::stoi(kv_get(kv, "samples", "2000"));
      opts.seed = std::stoull(kv_get(kv, "seed", "0"));
      const ExpanderMode mode =
          kv_get(kv, "mode", "exact") == "sampled" ? ExpanderMode::Sampled : ExpanderMode::Exact;
      const ExpanderReport rep = is_robust_outexpander(g, params, mode, opts);
      report["is_expander"] = rep.is_expander;
      report["conclusive"] = rep.conclusive;
      report["subsets_checked"] = rep.subsets_checked;
      report["witness"] = rep.witness ? ids(*rep.witness) : json(nullptr);
      report["rn_plus"] = rep.rn_plus ? ids(*rep.rn_plus) : json(nullptr);
      if (an_op == "nice-partition") {
        if (rep.is_expander) {
          report["note"] = "graph is a robust outexpander at these parameters; no partition derived";
        } else {
          const DerivedPartition derived = derive_nice_partition(g, rep, params.nu);
          const NicePartitionCheck check =
              check_nice_partition(derived.graph, derived.partition, std::stod(kv_get(kv, "epsilon", "0.1")),
                                   std::stod(kv_get(kv, "k", "1")));
          report["partition"] = partition_json(derived.partition);
          report["reversed"] = derived.reversed;
          report["np1"] = check.np1;
          report["np2"] = check.np2;
          report["np3"] = check.np3;
          report["e_ad_cd"] = check.e_ad_cd;
        }
      }
    } else if (an_op == "classify") {
      if (an_partition.empty()) throw CLI::ValidationError("analyze", "classify needs --partition");
      const Partition4 p = parse_partition(an_partition, g.order());
      const GoodBadLabels labels = classify_good_bad(g, p, std::stod(kv_get(kv, "delta")));
      report["delta"] = labels.delta;
      report["good"] = ids(labels.good);
      report["bad"] = ids(labels.bad());
    } else if (an_op == "special-arcs") {
      if (an_partition.empty()) throw CLI::ValidationError("analyze", "special-arcs needs --partition");
      const Partition4 p = parse_partition(an_partition, g.order());
      json arcs = json::array();
      for (const Arc& a : find_special_arcs(g, p)) arcs.push_back(json::array({a.tail, a.head}));
      report["arcs"] = arcs;
      report["count"] = arcs.size();
      const auto pair = find_two_disjoint_special_arcs(g, p);
      report["two_disjoint"] =
          pair ? json::array({json::array({pair->first.tail, pair->first.head}),
                              json::array({pair->second.tail, pair->second.head})})
               : json(nullptr);
    } else {
      throw CLI::ValidationError("analyze", "unknown --op \"" + an_op + "\"");
    }
    emit(report.dump(2) + "\n", an_out);
  });

  // -------------------------------------------------------- verify-sharpness
  auto* sharp = app.add_subcommand("verify-sharpness",
                                   "generate the extremal families, check sigma and solver verdicts");
  std::string sharp_plan = "c:1-4,b:2-5,a:1-1";
  ExperimentIo sharp_io;
  std::uint64_t sharp_budget = 0;
  int sharp_threads = 0;
  sharp->add_option("--plan", sharp_plan, "family:s-range list (default c:1-4,b:2-5,a:1-1)");
  sharp->add_option("--budget-states", sharp_budget, "per-instance solver budget");
  sharp->add_option("--threads", sharp_threads, "worker pool size (default ADHC_LAB_THREADS or omp)");
  sharp->add_option("--out", sharp_io.out_path, "report file (default stdout)");
  sharp->add_option("--format", sharp_io.format, "json (JSON Lines) or csv");
  sharp->callback([&] {
    const auto plan = parse_extremal_plan(sharp_plan);
    const std::optional<std::uint64_t> budget =
        sharp_budget > 0 ? std::optional<std::uint64_t>(sharp_budget) : std::nullopt;
    const SharpnessReport report = run_sharpness(plan, budget, sharp_threads);
    const json config{{"plan", sharp_plan}, {"budget_states", sharp_budget}};
    const int code = finish_experiment("verify-sharpness", config, report, sharp_io);
    if (code != 0) throw CLI::RuntimeError(code);
  });

  // -------------------------------------------------------------- crosscheck
  auto* cross = app.add_subcommand("crosscheck", "solver verdicts vs the permutation oracle");
  CrosscheckConfig cross_config;
  ExperimentIo cross_io;
  std::string cross_p = "0.5";
  int cross_threads = 0;
  cross->add_option("--n", cross_config.n, "graph order (<= 10)")->required();
  cross->add_option("--count", cross_config.count, "graphs per p value");
  cross->add_option("--p", cross_p, "arc probability grid, e.g. 0.2,0.5,0.8");
  cross->add_option("--seed", cross_config.seed, "master seed");
  cross->add_flag("--exhaustive", cross_config.exhaustive, "all labeled oriented graphs (n <= 4)");
  cross->add_option("--threads", cross_threads, "worker pool size");
  cross->add_option("--out", cross_io.out_path, "report file (default stdout)");
  cross->add_option("--format", cross_io.format, "json or csv");
  cross->callback([&] {
    cross_config.p_grid = parse_double_list(cross_p);
    const CrosscheckReport report = run_crosscheck(cross_config, cross_threads);
    const json config{{"n", cross_config.n},
                      {"count", cross_config.count},
                      {"p", cross_p},
                      {"seed", cross_config.seed},
                      {"exhaustive", cross_config.exhaustive}};
    const int code = finish_experiment("crosscheck", config, report, cross_io);
    if (code != 0) throw CLI::RuntimeError(code);
  });

  // ------------------------------------------------------------------ sweep
  auto* sweep = app.add_subcommand("sweep", "degree statistics and solver verdicts over a corpus");
  ExperimentIo sweep_io;
  std::string sweep_n, sweep_p = "0.5", sweep_seeds = "0", sweep_gamma = "5,10,15,20,25,30";
  std::string sweep_extremal;
  std::uint64_t sweep_budget = 0;
  bool sweep_no_solver = false;
  int sweep_threads = 0;
  sweep->add_option("--n", sweep_n, "orders, e.g. 4..20")->required();
  sweep->add_option("--p", sweep_p, "arc probability grid");
  sweep->add_option("--seeds", sweep_seeds, "model seeds, e.g. 0..9");
  sweep->add_option("--gamma", sweep_gamma, "gamma grid in percent");
  sweep->add_option("--extremal", sweep_extremal, "extremal instances to inject, e.g. c:1-4");
  sweep->add_option("--budget-states", sweep_budget, "per-instance solver budget");
  sweep->add_flag("--no-solver", sweep_no_solver, "record degree statistics only");
  sweep->add_option("--threads", sweep_threads, "worker pool size");
  sweep->add_option("--out", sweep_io.out_path, "report file (default stdout)");
  sweep->add_option("--format", sweep_io.format, "json or csv");
  sweep->callback([&] {
    SweepConfig config;
    config.n_values = parse_int_list(sweep_n);
    config.p_grid = parse_double_list(sweep_p);
    config.seeds.clear();
    for (int s : parse_int_list(sweep_seeds)) config.seeds.push_back(static_cast<std::uint64_t>(s));
    config.gamma_percents = parse_int_list(sweep_gamma);
    if (!sweep_extremal.empty()) config.extremal = parse_extremal_plan(sweep_extremal);
    if (sweep_budget > 0) config.budget = sweep_budget;
    config.run_solver = !sweep_no_solver;
    const SweepReport report = run_sweep(config, sweep_threads);
    const json config_json{{"n", sweep_n},
                           {"p", sweep_p},
                           {"seeds", sweep_seeds},
                           {"gamma", sweep_gamma},
                           {"extremal", sweep_extremal},
                           {"budget_states", sweep_budget},
                           {"run_solver", config.run_solver}};
    const int code = finish_experiment("sweep", config_json, report, sweep_io);
    if (code != 0) throw CLI::RuntimeError(code);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
