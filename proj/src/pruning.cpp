#include "csp/pruning.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "csp/beam_search.hpp"

namespace csp {

RankMode parse_rank_mode(std::string_view text) {
  if (text == "auto") return RankMode::automatic;
  if (text == "r1") return RankMode::r1;
  if (text == "r2") return RankMode::r2;
  throw std::invalid_argument("unknown rank '" + std::string(text) + "' (expected auto, r1 or r2)");
}

std::string_view to_string(Rank rank) { return rank == Rank::r1 ? "r1" : "r2"; }

std::string_view to_string(RankMode mode) {
  switch (mode) {
    case RankMode::automatic: return "auto";
    case RankMode::r1: return "r1";
    case RankMode::r2: return "r2";
  }
  return "auto";
}

RankSets rank_sets(const Instance& inst) {
  const std::size_t L = inst.length();
  const auto m = static_cast<Symbol>(inst.alphabet_size());
  RankSets sets;
  sets.r1.resize(L);
  sets.r2.resize(L);
  for (std::size_t l = 0; l < L; ++l) {
    int first = 0;
    int second = 0;
    for (Symbol s = 0; s < m; ++s) {
      const int f = inst.frequency(l, s);
      if (f > first) {
        second = first;
        first = f;
      } else if (f < first && f > second) {
        second = f;
      }
    }
    for (Symbol s = 0; s < m; ++s) {
      const int f = inst.frequency(l, s);
      if (f == first) sets.r1[l].push_back(s);
      if (f > 0 && (f == first || f == second)) sets.r2[l].push_back(s);
    }
  }
  return sets;
}

RankedAlphabet ranked_alphabet(const RankSets& sets, Rank rank) {
  RankedAlphabet ranked;
  ranked.allowed = rank == Rank::r1 ? sets.r1 : sets.r2;
  ranked.rank = rank;
  return ranked;
}

Rank choose_rank(int r1_distance, int r2_distance, std::uint64_t rng_seed) {
  if (r1_distance < r2_distance) return Rank::r1;
  if (r2_distance < r1_distance) return Rank::r2;
  std::mt19937_64 rng(rng_seed);
  return std::bernoulli_distribution(0.5)(rng) ? Rank::r2 : Rank::r1;
}

RankedAlphabet rank_identify(const Instance& inst, std::size_t beta_trial, double budget, std::uint64_t rng_seed,
                             TimingMode timing) {
  if (beta_trial < 1) throw std::invalid_argument("trial beam width must be at least 1");
  const RankSets sets = rank_sets(inst);
  const BeamOptions trial{beta_trial, budget / 4.0, timing};

  const BeamResult first = trbs_solve(inst, ranked_alphabet(sets, Rank::r1), trial);
  double seconds = first.seconds;
  const int d1 = first.solution.distance;
  int d2 = d1;
  // Identical rank sets give identical trials.
  if (sets.r2 != sets.r1) {
    const BeamResult second = trbs_solve(inst, ranked_alphabet(sets, Rank::r2), trial);
    d2 = second.solution.distance;
    seconds += second.seconds;
  }

  RankedAlphabet chosen = ranked_alphabet(sets, choose_rank(d1, d2, rng_seed));
  chosen.trial_r1 = d1;
  chosen.trial_r2 = d2;
  chosen.trial_seconds = seconds;
  return chosen;
}

}  // namespace csp
