#pragma once

// Expected-distance node evaluation for the beam search.
//
// A node for partial solution x of length p is scored by the fitness vector
//   fitness_i = matches(x, s_i[0..p)) + score_i[p]
// where score_i[p] counts the positions q >= p at which the expected solution
// agrees with s_i. The EX score is min_i fitness_i; larger is better. Ties are
// broken by the sample variance of the per-string distances; smaller is better.

#include <cstdint>
#include <vector>

#include "csp/core.hpp"

namespace csp {

/// Most frequent symbol per level; ties go to the smallest code.
struct ExpectedSolution {
  SymbolString symbols;
};

ExpectedSolution expected_solution(const Instance& inst);

/// Suffix match counts of `expected` against `s`: entry p counts matches at
/// positions p..L-1, entry L is 0. Size L + 1.
Eigen::VectorXi suffix_scores(const SymbolString& expected, const SymbolString& s);

/// n x (L + 1) matrix; row j is suffix_scores(expected, s_j).
class SuffixScoreTables {
 public:
  SuffixScoreTables() = default;
  explicit SuffixScoreTables(Eigen::MatrixXi scores) : scores_(std::move(scores)) {}

  std::size_t count() const { return static_cast<std::size_t>(scores_.rows()); }
  std::size_t length() const { return static_cast<std::size_t>(scores_.cols()) - 1; }

  int operator()(std::size_t j, std::size_t p) const {
    return scores_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(p));
  }
  /// score_j[p] for every j.
  auto suffix(std::size_t p) const { return scores_.col(static_cast<Eigen::Index>(p)); }
  const Eigen::MatrixXi& matrix() const { return scores_; }

 private:
  Eigen::MatrixXi scores_;
};

SuffixScoreTables suffix_score_tables(const Instance& inst, const ExpectedSolution& expected);

struct BeamNode {
  SymbolString symbols;
  Eigen::VectorXi matches;  // hd^c against each input prefix
  int ex = 0;

  std::size_t length() const { return symbols.size(); }
};

/// The empty partial solution.
BeamNode root_node(const Instance& inst, const SuffixScoreTables& tables);

/// Builds a node from scratch by comparing `prefix` against every input.
BeamNode node_from_prefix(SymbolString prefix, const Instance& inst, const SuffixScoreTables& tables);

/// min_i (matches_i + score_i[|x|]), recomputed from the node's match vector.
int ex_score(const BeamNode& node, const SuffixScoreTables& tables);

/// n * sum(d^2) - (sum d)^2 over the per-string distances. Exact integer
/// proxy for the sample variance: variance = key / (n (n - 1)).
std::int64_t variance_key(const Eigen::Ref<const Eigen::VectorXi>& matches);

/// Sample variance (denominator n - 1) of the per-string distances; 0 for n = 1.
double variance_score(const BeamNode& node);
double variance_of(const Eigen::Ref<const Eigen::VectorXi>& distances);

/// Appends `symbol`, updating matches in O(n).
BeamNode extend_node(const BeamNode& node, Symbol symbol, const Instance& inst, const SuffixScoreTables& tables);

}  // namespace csp
