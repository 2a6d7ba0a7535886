#include "csp/local_search.hpp"

#include <algorithm>
#include <stdexcept>

namespace csp {

namespace {

// Positions l maximizing f_l(s[l]) for one input string. Depends only on
// the instance.
std::vector<std::size_t> peak_levels(const Instance& inst, std::size_t i) {
  const SymbolString& s = inst.string(i);
  std::vector<std::size_t> levels;
  int best = -1;
  for (std::size_t l = 0; l < s.size(); ++l) {
    const int f = inst.frequency(l, s[l]);
    if (f > best) {
      best = f;
      levels.clear();
    }
    if (f == best) levels.push_back(l);
  }
  return levels;
}

std::vector<RepairCandidate> collect_candidates(const std::vector<std::size_t>& critical,
                                                const std::vector<std::vector<std::size_t>>& peaks,
                                                const SymbolString& solution, const Instance& inst,
                                                std::mt19937_64& rng) {
  std::vector<RepairCandidate> pairs;
  for (std::size_t c : critical)
    for (std::size_t l : peaks[c]) pairs.push_back({l, inst.string(c)[l], c});

  std::sort(pairs.begin(), pairs.end(), [](const RepairCandidate& a, const RepairCandidate& b) {
    return a.position != b.position ? a.position < b.position : a.symbol < b.symbol;
  });
  pairs.erase(std::unique(pairs.begin(), pairs.end(),
                          [](const RepairCandidate& a, const RepairCandidate& b) {
                            return a.position == b.position && a.symbol == b.symbol;
                          }),
              pairs.end());
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::erase_if(pairs, [&](const RepairCandidate& p) { return solution[p.position] == p.symbol; });
  return pairs;
}

std::vector<std::size_t> argmax_indices(const Eigen::VectorXi& d) {
  const int peak = d.maxCoeff();
  std::vector<std::size_t> out;
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (d(i) == peak) out.push_back(static_cast<std::size_t>(i));
  return out;
}

}  // namespace

std::vector<std::size_t> find_critical_strings(const SymbolString& solution, const Instance& inst) {
  if (solution.size() != inst.length()) throw LengthMismatchError(solution.size(), inst.length());
  return argmax_indices(distance_vector(solution, inst));
}

std::vector<RepairCandidate> repair_candidates(const std::vector<std::size_t>& critical,
                                               const SymbolString& solution, const Instance& inst,
                                               std::mt19937_64& rng) {
  if (critical.empty()) throw std::invalid_argument("no critical strings given");
  if (solution.size() != inst.length()) throw LengthMismatchError(solution.size(), inst.length());
  std::vector<std::vector<std::size_t>> peaks(inst.count());
  for (std::size_t c : critical) peaks.at(c) = peak_levels(inst, c);
  return collect_candidates(critical, peaks, solution, inst, rng);
}

LocalSearchResult local_search(const SymbolString& init, const Instance& inst, const LocalSearchOptions& options) {
  if (init.size() != inst.length()) throw LengthMismatchError(init.size(), inst.length());
  if (!(options.budget >= 0.0)) throw std::invalid_argument("local search budget must be non-negative");

  std::vector<std::vector<std::size_t>> peaks(inst.count());
  for (std::size_t i = 0; i < inst.count(); ++i) peaks[i] = peak_levels(inst, i);

  std::mt19937_64 rng(options.rng_seed);
  Stopwatch clock(options.timing);
  const auto n = static_cast<std::uint64_t>(inst.count());

  LocalSearchResult result;
  SymbolString best = init;
  Eigen::VectorXi dist = distance_vector(best, inst);
  int peak = dist.maxCoeff();
  Eigen::VectorXi trial(dist.size());

  while (clock.seconds() < options.budget && result.iterations < options.max_iterations) {
    ++result.iterations;
    const auto critical = argmax_indices(dist);
    const auto candidates = collect_candidates(critical, peaks, best, inst, rng);
    clock.charge(n);

    bool moved = false;
    for (const RepairCandidate& c : candidates) {
      clock.charge(n);
      const Symbol old = best[c.position];
      const auto column = inst.level(c.position).array();
      trial = dist + (column == old).cast<int>().matrix() - (column == c.symbol).cast<int>().matrix();
      const int trial_peak = trial.maxCoeff();
      if (trial_peak <= peak) {
        best[c.position] = c.symbol;
        dist = trial;
        peak = trial_peak;
        ++result.accepted;
        moved = true;
        if (options.on_accept) options.on_accept(best, dist);
        break;
      }
    }
    if (!moved) {
      result.local_optimum = true;
      break;
    }
  }

  result.solution = Solution{std::move(best), peak};
  result.seconds = clock.seconds();
  return result;
}

}  // namespace csp
