#pragma once

// Peak-flattening local search: repeatedly rewrite one position of the
// incumbent towards a string at maximum distance.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "csp/core.hpp"
#include "csp/timing.hpp"

namespace csp {

struct RepairCandidate {
  std::size_t position = 0;
  Symbol symbol = 0;
  std::size_t source = 0;  // index of the critical string supplying the symbol

  bool operator==(const RepairCandidate&) const = default;
};

/// Indices of the input strings at maximum distance from `solution`.
std::vector<std::size_t> find_critical_strings(const SymbolString& solution, const Instance& inst);

/// For every critical string c, the positions l maximizing f_l(c[l]) paired
/// with c[l]. Pairs from all critical strings are merged and shuffled; pairs
/// that would not change `solution` are dropped.
std::vector<RepairCandidate> repair_candidates(const std::vector<std::size_t>& critical,
                                               const SymbolString& solution, const Instance& inst,
                                               std::mt19937_64& rng);

struct LocalSearchOptions {
  double budget = 5.0;
  std::uint64_t rng_seed = 0;
  TimingMode timing = TimingMode::wall;
  std::size_t max_iterations = std::numeric_limits<std::size_t>::max();
  /// Called after every accepted move with the new incumbent and its
  /// incrementally maintained distance vector.
  std::function<void(const SymbolString&, const Eigen::VectorXi&)> on_accept;
};

struct LocalSearchResult {
  Solution solution;
  std::size_t iterations = 0;
  std::size_t accepted = 0;
  bool local_optimum = false;  // stopped because no candidate qualified
  double seconds = 0.0;
};

LocalSearchResult local_search(const SymbolString& init, const Instance& inst, const LocalSearchOptions& options);

inline LocalSearchResult local_search(const SymbolString& init, const Instance& inst, double budget,
                                      std::uint64_t rng_seed, TimingMode timing = TimingMode::wall) {
  LocalSearchOptions options;
  options.budget = budget;
  options.rng_seed = rng_seed;
  options.timing = timing;
  return local_search(init, inst, options);
}

}  // namespace csp
