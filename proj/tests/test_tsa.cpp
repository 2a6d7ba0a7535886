#include "doctest.h"

#include <sstream>
#include <string>

#include "csp/baselines.hpp"
#include "csp/tsa.hpp"
#include "fixtures.hpp"

using namespace csp;

namespace {

SolverConfig virtual_config(double t_max, std::uint64_t seed) {
  SolverConfig cfg;
  cfg.t_max = t_max;
  cfg.rng_seed = seed;
  cfg.timing = TimingMode::virtual_time;
  return cfg;
}

}  // namespace

TEST_SUITE("tsa") {
  TEST_CASE("solves the two-string example optimally") {
    const auto inst = fixtures::two_string_example();
    const auto report = solve_tsa(inst, virtual_config(30.0, 1));
    CHECK(report.solution.distance == 2);
    CHECK(report.solution.distance <= report.beam_distance);
    CHECK(report.solution.distance == hamming_to_set(report.solution.symbols, inst));
  }

  TEST_CASE("stage budgets") {
    const auto inst = fixtures::random_instance(4, 10, 100, 4);
    const auto report = solve_tsa(inst, virtual_config(5.0, 3));
    CHECK(report.t_max == 5.0);
    CHECK(report.ls_budget == 2.5);
    CHECK(report.timings.total() <= 5.0 * 1.1);
    CHECK(report.trial_r1 >= 0);

    SolverConfig cfg = virtual_config(20.0, 3);
    CHECK(solve_tsa(inst, cfg).ls_budget == 5.0);
    cfg.t_max.reset();
    CHECK(cfg.time_limit(100) == 30.0);
    CHECK(cfg.time_limit(400) == 60.0);
    CHECK(cfg.time_limit(1000) == 120.0);
  }

  TEST_CASE("forced rank skips the trial runs") {
    const auto inst = fixtures::random_instance(8, 6, 30, 4);
    SolverConfig cfg = virtual_config(2.0, 5);
    cfg.rank_mode = RankMode::r2;
    const auto report = solve_tsa(inst, cfg);
    CHECK(report.rank == Rank::r2);
    CHECK(report.trial_r1 == -1);
    CHECK(report.timings.prune == 0.0);
  }

  TEST_CASE("never worse than the optimum, and deterministic in virtual time") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const auto inst = fixtures::random_instance(seed, 4, 8, 4);
      const auto a = solve_tsa(inst, virtual_config(1.0, seed));
      const auto b = solve_tsa(inst, virtual_config(1.0, seed));
      CHECK(a.solution.symbols == b.solution.symbols);
      CHECK(format_report(a, inst) == format_report(b, inst));
      CHECK(a.solution.distance >= brute_force_optimum(inst).distance);
    }
  }

  TEST_CASE("report format") {
    const auto inst = fixtures::two_string_example();
    const auto report = solve_tsa(inst, virtual_config(30.0, 1));
    std::istringstream in(format_report(report, inst));
    std::string key;
    std::string value;
    std::vector<std::string> keys;
    while (in >> key >> value) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"solution", "distance", "beam_distance", "rank", "trial_r1", "trial_r2",
                                           "final_beta", "ls_iterations", "seed", "timing", "t_max", "time_prune",
                                           "time_beam", "time_local", "time_total"});
    CHECK(format_report(report, inst).find("t_max 30.000000\n") != std::string::npos);
  }

  TEST_CASE("invalid configuration") {
    const auto inst = fixtures::two_string_example();
    SolverConfig cfg = virtual_config(-1.0, 0);
    CHECK_THROWS_AS(solve_tsa(inst, cfg), std::invalid_argument);
    cfg = virtual_config(1.0, 0);
    cfg.beta_initial = 0;
    CHECK_THROWS_AS(solve_tsa(inst, cfg), std::invalid_argument);
  }
}
