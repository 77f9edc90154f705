#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "adhc/harness.hpp"
#include "adhc/oracles.hpp"

using namespace adhc;

TEST_SUITE("harness") {

TEST_CASE("sharpness rows pass for valid plans and report exit code 0") {
  const auto plan = parse_extremal_plan("c:1-2,b:2-3,a:1-1");
  const SharpnessReport report = run_sharpness(plan);
  REQUIRE(report.rows.size() == 5);
  for (const SharpnessRow& row : report.rows) {
    CHECK(row.status == RowStatus::Pass);
    CHECK(row.verdict == SolveVerdict::None);
    CHECK(row.sigma_actual == row.sigma_expected);
    CHECK(row.sigma_expected == row.threshold);
  }
  CHECK(report.summary.exit_code() == 0);
}

TEST_CASE("budget-hit sharpness rows are inconclusive, never passes") {
  const auto plan = parse_extremal_plan("b:3-3");  // n=12, NONE takes more than 5 states
  const SharpnessReport report = run_sharpness(plan, std::optional<std::uint64_t>(5));
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].status == RowStatus::Inconclusive);
  CHECK(report.rows[0].verdict == SolveVerdict::BudgetExceeded);
  CHECK(report.summary.exit_code() == 2);
}

TEST_CASE("the degenerate family b instance fails honestly") {
  const SharpnessReport report = run_sharpness(parse_extremal_plan("b:1-1"));
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].degenerate);
  CHECK(report.rows[0].status == RowStatus::Fail);
  CHECK(report.summary.exit_code() == 1);
}

TEST_CASE("labeled enumeration") {
  CHECK(labeled_oriented_count(4) == 729);
  CHECK(labeled_oriented_count(0) == 1);
  const OrientedGraph g1 = labeled_oriented_graph(4, 1);
  CHECK(g1.arc_count() == 1);
  CHECK(g1.has_arc(0, 1));
  const OrientedGraph g2 = labeled_oriented_graph(4, 2);
  CHECK(g2.has_arc(1, 0));
  // last index: every pair carries the reversed arc
  const OrientedGraph last = labeled_oriented_graph(3, 26);
  CHECK(last.arc_count() == 3);
}

TEST_CASE("exhaustive crosscheck at n=4 has zero mismatches") {
  CrosscheckConfig config;
  config.n = 4;
  config.exhaustive = true;
  const CrosscheckReport report = run_crosscheck(config);
  CHECK(report.rows.size() == 729);
  CHECK(report.mismatches == 0);
  CHECK(report.summary.exit_code() == 0);
}

TEST_CASE("odd-order crosscheck rows are NONE on both sides") {
  CrosscheckConfig config;
  config.n = 9;
  config.count = 5;
  config.p_grid = {0.6};
  config.seed = 3;
  const CrosscheckReport report = run_crosscheck(config);
  for (const CrosscheckRow& row : report.rows) {
    CHECK(row.solver == SolveVerdict::None);
    CHECK(row.oracle == SolveVerdict::None);
    CHECK(row.match);
  }
}

TEST_CASE("crosscheck refuses orders beyond the oracle cap") {
  CrosscheckConfig config;
  config.n = 11;
  CHECK_THROWS_AS(run_crosscheck(config), std::invalid_argument);
  CrosscheckConfig exh;
  exh.n = 5;
  exh.exhaustive = true;
  CHECK_THROWS_AS(run_crosscheck(exh), std::invalid_argument);
}

TEST_CASE("ore-to-semidegree implication in exact integers") {
  // hypothesis boundary: 200*sigma == n*(100+3k)
  CHECK(ore_semidegree_check(13, 2, 20, 10).hypothesis);   // 2600 == 2600
  CHECK(!ore_semidegree_check(12, 2, 20, 10).hypothesis);  // 2400 < 2600
  // conclusion boundary: 100*delta0 == k*n
  CHECK(ore_semidegree_check(13, 2, 20, 10).conclusion);   // 200 == 200
  CHECK(!ore_semidegree_check(13, 1, 20, 10).conclusion);  // 100 < 200
  CHECK(ore_semidegree_check(13, 1, 20, 10).violated);
  // infinite sigma satisfies any hypothesis
  CHECK(ore_semidegree_check(std::nullopt, 0, 1, 30).hypothesis);
}

TEST_CASE("sweep: no implication violations, odd orders skip the solver") {
  SweepConfig config;
  config.n_values = {5, 6, 7, 8};
  config.p_grid = {0.3, 0.8};
  config.seeds = {0, 1, 2};
  const SweepReport report = run_sweep(config);
  CHECK(report.violations == 0);
  for (const SweepRow& row : report.rows) {
    CHECK(row.violated_gammas.empty());
    if (row.n % 2 != 0) {
      CHECK(!row.hypothesis);
      CHECK(!row.verdict.has_value());
    }
  }
}

TEST_CASE("sweep flags injected extremal instances as below the hypothesis") {
  SweepConfig config;
  config.extremal = parse_extremal_plan("c:1-3,b:2-3");
  const SweepReport report = run_sweep(config);
  REQUIRE(report.rows.size() == 5);
  for (const SweepRow& row : report.rows) {
    CHECK(row.source == "extremal");
    CHECK(!row.hypothesis);  // sigma sits one below the Hamilton bound
    CHECK(row.status == RowStatus::Pass);
  }
}

TEST_CASE("sweep records hypothesis graphs without a cycle as data, not failure") {
  SweepConfig config;
  config.n_values = {4};
  config.p_grid = {1.0};  // tournaments on 4 vertices: sigma can reach the bound
  config.seeds = {0, 1, 2, 3, 4};
  const SweepReport report = run_sweep(config);
  for (const SweepRow& row : report.rows) {
    CHECK(row.status == RowStatus::Pass);
    if (row.hypothesis) CHECK(row.verdict.has_value());
  }
}

TEST_CASE("reports serialize deterministically across repeats and thread counts") {
  const auto plan = parse_extremal_plan("c:1-2,b:2-2");
  CHECK(to_jsonl(run_sharpness(plan, std::nullopt, 1)) == to_jsonl(run_sharpness(plan, std::nullopt, 2)));

  CrosscheckConfig cc;
  cc.n = 6;
  cc.count = 30;
  cc.p_grid = {0.3, 0.7};
  cc.seed = 11;
  CHECK(to_jsonl(run_crosscheck(cc, 1)) == to_jsonl(run_crosscheck(cc, 2)));

  SweepConfig sc;
  sc.n_values = {6, 8};
  sc.p_grid = {0.5};
  sc.seeds = {0, 1};
  sc.extremal = parse_extremal_plan("c:1-1");
  CHECK(to_jsonl(run_sweep(sc, 1)) == to_jsonl(run_sweep(sc, 2)));
}

TEST_CASE("csv projections carry one line per row plus a header") {
  const SharpnessReport report = run_sharpness(parse_extremal_plan("c:1-2"));
  const std::string csv = to_csv(report);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.rfind("family,s,n,", 0) == 0);
}

TEST_CASE("plan and list parsing") {
  const auto plan = parse_extremal_plan("c:1-3,a:2");
  REQUIRE(plan.size() == 4);
  CHECK(plan[0].family == ExtremalFamily::C);
  CHECK(plan[3].family == ExtremalFamily::A);
  CHECK(plan[3].s == 2);
  CHECK_THROWS_AS(parse_extremal_plan("c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_extremal_plan("x:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_extremal_plan("c:0"), std::invalid_argument);

  CHECK(parse_int_list("4..6,9") == std::vector<int>{4, 5, 6, 9});
  CHECK(parse_int_list("4-6") == std::vector<int>{4, 5, 6});
  CHECK(parse_double_list("0.2,0.5") == std::vector<double>{0.2, 0.5});
}

TEST_CASE("thread resolution") {
  CHECK(resolve_threads(3) == 3);
  setenv("ADHC_LAB_THREADS", "5", 1);
  CHECK(resolve_threads(0) == 5);
  CHECK(resolve_threads(2) == 2);  // explicit request wins
  unsetenv("ADHC_LAB_THREADS");
  CHECK(resolve_threads(0) >= 1);
}

}  // TEST_SUITE
