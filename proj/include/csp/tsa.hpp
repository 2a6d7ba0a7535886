#pragma once

// The three-stage solver: rank pruning, time-restricted beam search, and
// local search, run under one total time limit.

#include <string>
#include <vector>

#include "csp/beam_search.hpp"
#include "csp/core.hpp"
#include "csp/local_search.hpp"
#include "csp/pruning.hpp"

namespace csp {

struct StageTimings {
  double prune = 0.0;
  double beam = 0.0;
  double local = 0.0;

  double total() const { return prune + beam + local; }
};

struct SolveReport {
  Solution solution;
  int beam_distance = 0;  // before local search
  Rank rank = Rank::r1;
  int trial_r1 = -1;
  int trial_r2 = -1;
  std::size_t final_beta = 0;
  std::size_t ls_iterations = 0;
  StageTimings timings;
  double t_max = 0.0;
  double ls_budget = 0.0;  // budget actually given to local search
  SolverConfig config;
};

SolveReport solve_tsa(const Instance& inst, const SolverConfig& cfg);

/// Stable key/value text rendering used by the command-line tool.
std::string format_report(const SolveReport& report, const Instance& inst);

}  // namespace csp
