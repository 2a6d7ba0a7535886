#include "csp/beam_search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace csp {

namespace {

// Indices of the best `k` of `count` items under (EX desc, variance asc,
// lexicographic asc). Variance keys are computed on first use only.
template <typename Ex, typename VarKey, typename LexLess>
std::vector<std::size_t> rank_top(std::size_t count, std::size_t k, Ex ex, VarKey var_key, LexLess lex_less) {
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<std::int64_t> keys(count, -1);
  auto key = [&](std::size_t i) {
    if (keys[i] < 0) keys[i] = var_key(i);
    return keys[i];
  };
  auto better = [&](std::size_t a, std::size_t b) {
    const int ea = ex(a);
    const int eb = ex(b);
    if (ea != eb) return ea > eb;
    const auto ka = key(a);
    const auto kb = key(b);
    if (ka != kb) return ka < kb;
    return lex_less(a, b);
  };
  k = std::min(k, count);
  if (k < count) {
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(), better);
    idx.resize(k);
  } else {
    std::sort(idx.begin(), idx.end(), better);
  }
  return idx;
}

std::size_t common_length(const std::vector<BeamNode>& beam) {
  const std::size_t p = beam.front().length();
  for (const auto& node : beam)
    if (node.length() != p) throw std::invalid_argument("beam nodes have different lengths");
  return p;
}

}  // namespace

void SolverConfig::validate() const {
  if (beta_initial < 1) throw std::invalid_argument("beta must be at least 1");
  if (beta_trial < 1) throw std::invalid_argument("trial beta must be at least 1");
  if (t_max && !(*t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
  if (!(ls_budget >= 0.0)) throw std::invalid_argument("local search budget must be non-negative");
}

double SolverConfig::time_limit(std::size_t length) const { return t_max ? *t_max : default_time_limit(length); }

double SolverConfig::local_search_reserve(std::size_t length) const {
  return std::min(ls_budget, 0.5 * time_limit(length));
}

std::vector<BeamNode> expand(const std::vector<BeamNode>& beam, const SymbolString& allowed, const Instance& inst,
                             const SuffixScoreTables& tables) {
  std::vector<BeamNode> children;
  if (beam.empty()) return children;
  const std::size_t p = common_length(beam);
  if (p >= inst.length()) throw std::logic_error("cannot expand complete nodes");

  std::vector<const BeamNode*> parents;
  parents.reserve(beam.size());
  for (const auto& node : beam) parents.push_back(&node);
  std::sort(parents.begin(), parents.end(), [](const BeamNode* a, const BeamNode* b) { return a->symbols < b->symbols; });
  parents.erase(std::unique(parents.begin(), parents.end(),
                            [](const BeamNode* a, const BeamNode* b) { return a->symbols == b->symbols; }),
                parents.end());

  SymbolString symbols = allowed;
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());

  children.reserve(parents.size() * symbols.size());
  for (const BeamNode* parent : parents)
    for (Symbol s : symbols) children.push_back(extend_node(*parent, s, inst, tables));
  return children;
}

std::vector<BeamNode> select_best(std::vector<BeamNode> candidates, std::size_t beta) {
  if (candidates.empty()) throw std::invalid_argument("select_best needs at least one candidate");
  const auto order = rank_top(
      candidates.size(), beta, [&](std::size_t i) { return candidates[i].ex; },
      [&](std::size_t i) { return variance_key(candidates[i].matches); },
      [&](std::size_t a, std::size_t b) { return candidates[a].symbols < candidates[b].symbols; });
  std::vector<BeamNode> kept;
  kept.reserve(order.size());
  for (std::size_t i : order) kept.push_back(std::move(candidates[i]));
  return kept;
}

std::size_t adjust_beta(std::size_t beta, double t_rem, double t_iter, std::size_t level, std::size_t length) {
  if (beta < 1) throw std::invalid_argument("beta must be at least 1");
  if (level >= length) throw std::invalid_argument("adjust_beta called at or beyond the last level");
  const double expected = t_iter * static_cast<double>(length - level);
  std::size_t next = beta;
  if (expected <= 0.0 || t_rem / expected >= 1.1) {
    next = beta * 11 / 10;
  } else if (t_rem / expected <= 0.9) {
    next = std::min<std::size_t>(beta * 10 / 11, 150);
  }
  return std::max<std::size_t>(next, 1);
}

std::size_t memory_beta_limit(std::size_t count, std::size_t length) {
  // Symbols, match vector and the two vector headers of one node.
  const std::size_t node = length + count * sizeof(int) + 2 * sizeof(std::vector<int>) + sizeof(int);
  return std::max<std::size_t>(kBeamMemoryBytes / node, 1);
}

std::vector<BeamNode> beam_step(const std::vector<BeamNode>& beam, const SymbolString& allowed, std::size_t beta,
                                const Instance& inst, const SuffixScoreTables& tables, Stopwatch* clock) {
  if (beam.empty()) throw std::invalid_argument("beam is empty");
  if (allowed.empty()) throw std::invalid_argument("no allowed symbols at this level");
  const std::size_t p = common_length(beam);
  if (p >= inst.length()) throw std::logic_error("cannot expand complete nodes");

  const auto n = static_cast<Eigen::Index>(inst.count());
  const auto m = static_cast<Eigen::Index>(allowed.size());
  Eigen::MatrixXi hits(n, m);
  for (Eigen::Index k = 0; k < m; ++k)
    hits.col(k) = (inst.level(p).array() == allowed[static_cast<std::size_t>(k)]).cast<int>().matrix();

  struct Child {
    std::uint32_t parent;
    std::uint32_t slot;  // index into allowed
    int ex;
  };
  std::vector<Child> children;
  children.reserve(beam.size() * allowed.size());
  Eigen::VectorXi base(n);
  for (std::size_t b = 0; b < beam.size(); ++b) {
    base = beam[b].matches + tables.suffix(p + 1);
    for (Eigen::Index k = 0; k < m; ++k)
      children.push_back({static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(k), (base + hits.col(k)).minCoeff()});
  }

  std::uint64_t variance_evals = 0;
  Eigen::VectorXi scratch(n);
  const auto order = rank_top(
      children.size(), beta, [&](std::size_t i) { return children[i].ex; },
      [&](std::size_t i) {
        ++variance_evals;
        scratch = beam[children[i].parent].matches + hits.col(children[i].slot);
        return variance_key(scratch);
      },
      [&](std::size_t a, std::size_t b) {
        const Child& x = children[a];
        const Child& y = children[b];
        if (x.parent != y.parent) return x.parent < y.parent;
        return allowed[x.slot] < allowed[y.slot];
      });

  std::vector<std::size_t> kept(order);
  std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
    const Child& x = children[a];
    const Child& y = children[b];
    if (x.parent != y.parent) return x.parent < y.parent;
    return allowed[x.slot] < allowed[y.slot];
  });

  std::vector<BeamNode> next;
  next.reserve(kept.size());
  for (std::size_t i : kept) {
    const Child& c = children[i];
    const BeamNode& parent = beam[c.parent];
    BeamNode node;
    node.symbols.reserve(p + 1);
    node.symbols.assign(parent.symbols.begin(), parent.symbols.end());
    node.symbols.push_back(allowed[c.slot]);
    node.matches = parent.matches + hits.col(c.slot);
    node.ex = c.ex;
    next.push_back(std::move(node));
  }

  if (clock) {
    const auto per_node = static_cast<std::uint64_t>(n);
    clock->charge(per_node * (children.size() + variance_evals + next.size()));
  }
  return next;
}

BeamResult trbs_solve(const Instance& inst, const RankedAlphabet& ranked, const BeamOptions& options) {
  const std::size_t L = inst.length();
  if (ranked.length() != L) throw LengthMismatchError(ranked.length(), L);
  if (options.beta < 1) throw std::invalid_argument("beta must be at least 1");
  const std::size_t max_beta =
      std::max(options.beta, options.max_beta ? options.max_beta : memory_beta_limit(inst.count(), L));

  const SuffixScoreTables tables = suffix_score_tables(inst, expected_solution(inst));
  Stopwatch clock(options.timing);
  BeamResult result;
  result.beta_trace.reserve(L);

  std::vector<BeamNode> beam{root_node(inst, tables)};
  std::size_t beta = options.beta;
  for (std::size_t l = 0; l < L; ++l) {
    const double before = clock.seconds();
    beam = beam_step(beam, ranked.allowed[l], beta, inst, tables, &clock);
    result.beta_trace.push_back(beta);
    const double t_iter = clock.seconds() - before;
    if (l + 1 < L) {
      const double t_rem = options.budget - clock.seconds();
      // Out of budget: finish greedily.
      beta = t_rem <= 0.0 ? 1 : std::min(adjust_beta(beta, t_rem, t_iter, l + 1, L), max_beta);
    }
  }

  // The beam is in lexicographic order, so the first maximum is the
  // lexicographically smallest among the best.
  const auto best = std::max_element(beam.begin(), beam.end(),
                                     [](const BeamNode& a, const BeamNode& b) { return a.ex < b.ex; });
  result.solution = make_solution(best->symbols, inst);
  result.seconds = clock.seconds();
  return result;
}

BeamResult trbs_solve(const Instance& inst, const RankedAlphabet& ranked, const SolverConfig& cfg) {
  cfg.validate();
  const double budget = cfg.time_limit(inst.length()) - cfg.local_search_reserve(inst.length());
  return trbs_solve(inst, ranked, BeamOptions{cfg.beta_initial, budget, cfg.timing});
}

}  // namespace csp
