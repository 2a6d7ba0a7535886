#pragma once

// Time-restricted beam search over partial solutions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "csp/core.hpp"
#include "csp/heuristic.hpp"
#include "csp/pruning.hpp"
#include "csp/timing.hpp"

namespace csp {

struct SolverConfig {
  std::size_t beta_initial = 300;
  std::size_t beta_trial = 15;
  std::optional<double> t_max;  // default_time_limit(L) when unset
  double ls_budget = 5.0;
  RankMode rank_mode = RankMode::automatic;
  std::uint64_t rng_seed = 0;
  TimingMode timing = TimingMode::wall;

  void validate() const;
  double time_limit(std::size_t length) const;
  /// Time held back for local search: ls_budget, but at most half of t_max.
  double local_search_reserve(std::size_t length) const;
};

/// Approximate memory one beam may occupy. Beam growth stops at the width
/// that fills it, regardless of time left.
inline constexpr std::size_t kBeamMemoryBytes = std::size_t{256} << 20;

/// Widest beam fitting in kBeamMemoryBytes for n strings of length L.
std::size_t memory_beta_limit(std::size_t count, std::size_t length);

struct BeamOptions {
  std::size_t beta = 300;
  double budget = 25.0;  // seconds available to the whole search
  TimingMode timing = TimingMode::wall;
  std::size_t max_beta = 0;  // 0: memory_beta_limit of the instance
};

struct BeamResult {
  Solution solution;
  std::vector<std::size_t> beta_trace;  // width used at each level
  double seconds = 0.0;
};

/// All children of `beam` over `allowed`, scored by EX. Children with
/// identical content are kept once.
std::vector<BeamNode> expand(const std::vector<BeamNode>& beam, const SymbolString& allowed, const Instance& inst,
                             const SuffixScoreTables& tables);

/// The best min(beta, |candidates|) nodes ordered by EX descending, then
/// variance ascending, then partial solution ascending. Variance is only
/// computed for nodes compared against an EX-equal node.
std::vector<BeamNode> select_best(std::vector<BeamNode> candidates, std::size_t beta);

/// Beam width update from the remaining time `t_rem` and the expected
/// remaining time t_iter * (L - level).
std::size_t adjust_beta(std::size_t beta, double t_rem, double t_iter, std::size_t level, std::size_t length);

/// One search level: the same node set as select_best(expand(...)), but
/// children are only materialized once selected. `beam` must hold distinct
/// nodes in ascending lexicographic order; the result keeps that order.
/// Work (per-string comparisons) is charged to `clock` when given.
std::vector<BeamNode> beam_step(const std::vector<BeamNode>& beam, const SymbolString& allowed, std::size_t beta,
                                const Instance& inst, const SuffixScoreTables& tables, Stopwatch* clock = nullptr);

BeamResult trbs_solve(const Instance& inst, const RankedAlphabet& ranked, const BeamOptions& options);

/// Uses cfg.beta_initial and the time left after the local-search reserve.
BeamResult trbs_solve(const Instance& inst, const RankedAlphabet& ranked, const SolverConfig& cfg);

}  // namespace csp
