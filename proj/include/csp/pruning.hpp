#pragma once

// Per-level alphabet pruning: rank sets R1/R2 and trial-based rank choice.

#include <cstdint>
#include <string_view>
#include <vector>

#include "csp/core.hpp"
#include "csp/timing.hpp"

namespace csp {

enum class Rank { r1, r2 };
enum class RankMode { automatic, r1, r2 };

RankMode parse_rank_mode(std::string_view text);
std::string_view to_string(Rank rank);
std::string_view to_string(RankMode mode);

/// For each level, r1 holds the symbols attaining the highest frequency and
/// r2 additionally those attaining the second-highest distinct positive
/// frequency. Both are sorted by code.
struct RankSets {
  std::vector<SymbolString> r1;
  std::vector<SymbolString> r2;
};

/// The allowed symbols per level (Sigma_P), taken uniformly from one rank.
struct RankedAlphabet {
  std::vector<SymbolString> allowed;
  Rank rank = Rank::r1;
  // Distances of the trial searches, -1 when the rank was forced.
  int trial_r1 = -1;
  int trial_r2 = -1;
  double trial_seconds = 0.0;

  std::size_t length() const { return allowed.size(); }
};

RankSets rank_sets(const Instance& inst);

RankedAlphabet ranked_alphabet(const RankSets& sets, Rank rank);

/// The rank with the smaller trial distance; a seeded coin flip on ties.
Rank choose_rank(int r1_distance, int r2_distance, std::uint64_t rng_seed);

/// Runs a trial beam search of width `beta_trial` with each rank, each with
/// `budget / 4` seconds and no local search, and keeps the better rank.
RankedAlphabet rank_identify(const Instance& inst, std::size_t beta_trial, double budget, std::uint64_t rng_seed,
                             TimingMode timing = TimingMode::wall);

}  // namespace csp
