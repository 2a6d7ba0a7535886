#include "csp/heuristic.hpp"

#include <stdexcept>

namespace csp {

ExpectedSolution expected_solution(const Instance& inst) {
  ExpectedSolution exp;
  exp.symbols.resize(inst.length());
  for (std::size_t l = 0; l < inst.length(); ++l) {
    Eigen::Index best = 0;
    // maxCoeff returns the first maximal index, i.e. the smallest code.
    inst.frequencies().col(static_cast<Eigen::Index>(l)).maxCoeff(&best);
    exp.symbols[l] = static_cast<Symbol>(best);
  }
  return exp;
}

Eigen::VectorXi suffix_scores(const SymbolString& expected, const SymbolString& s) {
  if (expected.size() != s.size()) throw LengthMismatchError(expected.size(), s.size());
  const auto L = static_cast<Eigen::Index>(s.size());
  Eigen::VectorXi score(L + 1);
  score(L) = 0;
  for (Eigen::Index p = L - 1; p >= 0; --p)
    score(p) = score(p + 1) + (expected[static_cast<std::size_t>(p)] == s[static_cast<std::size_t>(p)] ? 1 : 0);
  return score;
}

SuffixScoreTables suffix_score_tables(const Instance& inst, const ExpectedSolution& expected) {
  if (expected.symbols.size() != inst.length()) throw LengthMismatchError(expected.symbols.size(), inst.length());
  const auto n = static_cast<Eigen::Index>(inst.count());
  const auto L = static_cast<Eigen::Index>(inst.length());
  Eigen::MatrixXi scores(n, L + 1);
  scores.col(L).setZero();
  for (Eigen::Index p = L - 1; p >= 0; --p) {
    const Symbol e = expected.symbols[static_cast<std::size_t>(p)];
    scores.col(p) = scores.col(p + 1) + (inst.level(static_cast<std::size_t>(p)).array() == e).cast<int>().matrix();
  }
  return SuffixScoreTables(std::move(scores));
}

BeamNode root_node(const Instance& inst, const SuffixScoreTables& tables) {
  BeamNode root;
  root.matches = Eigen::VectorXi::Zero(static_cast<Eigen::Index>(inst.count()));
  root.ex = ex_score(root, tables);
  return root;
}

BeamNode node_from_prefix(SymbolString prefix, const Instance& inst, const SuffixScoreTables& tables) {
  BeamNode node;
  const Eigen::VectorXi d = distance_vector(prefix, inst);
  node.matches = Eigen::VectorXi::Constant(d.size(), static_cast<int>(prefix.size())) - d;
  node.symbols = std::move(prefix);
  node.ex = ex_score(node, tables);
  return node;
}

int ex_score(const BeamNode& node, const SuffixScoreTables& tables) {
  return (node.matches + tables.suffix(node.length())).minCoeff();
}

std::int64_t variance_key(const Eigen::Ref<const Eigen::VectorXi>& matches) {
  // Shift-invariant, so matches and distances (p - matches) give the same key.
  const auto v = matches.cast<std::int64_t>();
  const std::int64_t sum = v.sum();
  const std::int64_t sq = v.squaredNorm();
  return static_cast<std::int64_t>(v.size()) * sq - sum * sum;
}

double variance_of(const Eigen::Ref<const Eigen::VectorXi>& distances) {
  const auto n = distances.size();
  if (n < 2) return 0.0;
  return static_cast<double>(variance_key(distances)) / static_cast<double>(n * (n - 1));
}

double variance_score(const BeamNode& node) { return variance_of(node.matches); }

BeamNode extend_node(const BeamNode& node, Symbol symbol, const Instance& inst, const SuffixScoreTables& tables) {
  const std::size_t p = node.length();
  if (p >= inst.length()) throw std::logic_error("cannot extend a complete node");
  if (symbol >= inst.alphabet_size()) throw std::out_of_range("symbol outside the alphabet");
  BeamNode child;
  child.symbols.reserve(p + 1);
  child.symbols = node.symbols;
  child.symbols.push_back(symbol);
  child.matches = node.matches + (inst.level(p).array() == symbol).cast<int>().matrix();
  child.ex = ex_score(child, tables);
  return child;
}

}  // namespace csp
