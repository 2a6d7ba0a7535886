#include "csp/tsa.hpp"

#include <iomanip>
#include <sstream>

#include "csp/random.hpp"

namespace csp {

SolveReport solve_tsa(const Instance& inst, const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t L = inst.length();
  SolveReport report;
  report.config = cfg;
  report.t_max = cfg.time_limit(L);
  report.ls_budget = cfg.local_search_reserve(L);
  const double search_budget = report.t_max - report.ls_budget;

  Stopwatch prune_clock(cfg.timing);
  RankedAlphabet ranked;
  switch (cfg.rank_mode) {
    case RankMode::automatic:
      ranked = rank_identify(inst, cfg.beta_trial, search_budget, cfg.rng_seed, cfg.timing);
      break;
    case RankMode::r1:
      ranked = ranked_alphabet(rank_sets(inst), Rank::r1);
      break;
    case RankMode::r2:
      ranked = ranked_alphabet(rank_sets(inst), Rank::r2);
      break;
  }
  report.timings.prune = cfg.timing == TimingMode::wall ? prune_clock.seconds() : ranked.trial_seconds;
  report.rank = ranked.rank;
  report.trial_r1 = ranked.trial_r1;
  report.trial_r2 = ranked.trial_r2;

  const BeamResult beam =
      trbs_solve(inst, ranked, BeamOptions{cfg.beta_initial, search_budget - report.timings.prune, cfg.timing});
  report.timings.beam = beam.seconds;
  report.beam_distance = beam.solution.distance;
  report.final_beta = beam.beta_trace.empty() ? cfg.beta_initial : beam.beta_trace.back();

  LocalSearchOptions ls;
  ls.budget = report.ls_budget;
  ls.rng_seed = splitmix64(cfg.rng_seed);
  ls.timing = cfg.timing;
  const LocalSearchResult improved = local_search(beam.solution.symbols, inst, ls);
  report.timings.local = improved.seconds;
  report.ls_iterations = improved.iterations;
  report.solution = improved.solution;
  return report;
}

std::string format_report(const SolveReport& report, const Instance& inst) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6);
  out << "solution " << inst.alphabet().decode(report.solution.symbols) << '\n';
  out << "distance " << report.solution.distance << '\n';
  out << "beam_distance " << report.beam_distance << '\n';
  out << "rank " << to_string(report.rank) << '\n';
  out << "trial_r1 " << report.trial_r1 << '\n';
  out << "trial_r2 " << report.trial_r2 << '\n';
  out << "final_beta " << report.final_beta << '\n';
  out << "ls_iterations " << report.ls_iterations << '\n';
  out << "seed " << report.config.rng_seed << '\n';
  out << "timing " << to_string(report.config.timing) << '\n';
  out << "t_max " << report.t_max << '\n';
  out << "time_prune " << report.timings.prune << '\n';
  out << "time_beam " << report.timings.beam << '\n';
  out << "time_local " << report.timings.local << '\n';
  out << "time_total " << report.timings.total() << '\n';
  return out.str();
}

}  // namespace csp
