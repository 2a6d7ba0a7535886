#pragma once

// Comparison methods: a frequency-table greedy in the style of the
// wave-function-collapse heuristic, and an exact enumeration oracle for tiny
// instances.

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "csp/core.hpp"

namespace csp {

/// Builds the solution left to right. At each position it picks a string
/// currently farthest from the partial solution (seeded choice among ties)
/// and takes that string's symbol when it is among the most frequent at the
/// position, otherwise a most frequent symbol (seeded choice among ties).
///
/// This is a reconstruction from a short prose description of the original
/// method and only serves as a comparative baseline.
Solution wfc_solve(const Instance& inst, std::uint64_t rng_seed);

class OracleSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct OracleResult {
  SymbolString solution;
  int distance = 0;
  std::uint64_t examined = 0;  // search nodes visited
};

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

/// Exact optimum by depth-first enumeration in lexicographic order with
/// branch-and-bound pruning. Returns the lexicographically smallest optimum.
/// Throws OracleSizeError when m^L exceeds `cap`.
OracleResult brute_force_optimum(const Instance& inst, std::uint64_t cap = kDefaultOracleCap);

/// ceil(max_{i<j} hd(s_i, s_j) / 2).
int pairwise_lower_bound(const Instance& inst);

}  // namespace csp
