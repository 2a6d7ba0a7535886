#include "csp/baselines.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace csp {

namespace {

template <typename Rng>
std::size_t pick(const std::vector<std::size_t>& options, Rng& rng) {
  if (options.size() == 1) return options.front();
  std::uniform_int_distribution<std::size_t> dist(0, options.size() - 1);
  return options[dist(rng)];
}

class Enumerator {
 public:
  explicit Enumerator(const Instance& inst)
      : inst_(inst), n_(inst.count()), L_(inst.length()), suffix_pair_(L_ + 1, std::vector<int>(n_ * n_, 0)) {
    for (std::size_t p = L_; p-- > 0;)
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
          suffix_pair_[p][i * n_ + j] =
              suffix_pair_[p + 1][i * n_ + j] + (inst.string(i)[p] != inst.string(j)[p] ? 1 : 0);
  }

  OracleResult run() {
    bound_ = static_cast<int>(L_) + 1;
    prefix_.assign(L_, 0);
    dist_.assign(n_, 0);
    visit(0);
    return OracleResult{best_, bound_, examined_};
  }

 private:
  int lower_bound(std::size_t p) const {
    int lb = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      lb = std::max(lb, dist_[i]);
      for (std::size_t j = i + 1; j < n_; ++j)
        lb = std::max(lb, (dist_[i] + dist_[j] + suffix_pair_[p][i * n_ + j] + 1) / 2);
    }
    return lb;
  }

  void visit(std::size_t p) {
    ++examined_;
    if (lower_bound(p) >= bound_) return;
    if (p == L_) {
      best_ = prefix_;
      bound_ = *std::max_element(dist_.begin(), dist_.end());
      return;
    }
    for (std::size_t s = 0; s < inst_.alphabet_size(); ++s) {
      const auto sym = static_cast<Symbol>(s);
      prefix_[p] = sym;
      for (std::size_t i = 0; i < n_; ++i) dist_[i] += inst_.string(i)[p] != sym ? 1 : 0;
      visit(p + 1);
      for (std::size_t i = 0; i < n_; ++i) dist_[i] -= inst_.string(i)[p] != sym ? 1 : 0;
    }
  }

  const Instance& inst_;
  std::size_t n_;
  std::size_t L_;
  std::vector<std::vector<int>> suffix_pair_;  // [p][i*n+j] = hd of suffixes from p
  SymbolString prefix_;
  std::vector<int> dist_;
  SymbolString best_;
  int bound_ = 0;
  std::uint64_t examined_ = 0;
};

}  // namespace

Solution wfc_solve(const Instance& inst, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  const std::size_t n = inst.count();
  const std::size_t L = inst.length();
  std::vector<int> dist(n, 0);
  SymbolString sol;
  sol.reserve(L);
  std::vector<std::size_t> farthest;
  std::vector<std::size_t> frequent;
  for (std::size_t l = 0; l < L; ++l) {
    const int peak = *std::max_element(dist.begin(), dist.end());
    farthest.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (dist[i] == peak) farthest.push_back(i);
    const std::size_t target = pick(farthest, rng);

    const auto column = inst.frequencies().col(static_cast<Eigen::Index>(l));
    const int top = column.maxCoeff();
    frequent.clear();
    for (Eigen::Index s = 0; s < column.size(); ++s)
      if (column(s) == top) frequent.push_back(static_cast<std::size_t>(s));

    const Symbol preferred = inst.string(target)[l];
    const Symbol chosen = column(preferred) == top ? preferred : static_cast<Symbol>(pick(frequent, rng));
    sol.push_back(chosen);
    for (std::size_t i = 0; i < n; ++i) dist[i] += inst.string(i)[l] != chosen ? 1 : 0;
  }
  return make_solution(std::move(sol), inst);
}

OracleResult brute_force_optimum(const Instance& inst, std::uint64_t cap) {
  const std::uint64_t m = inst.alphabet_size();
  std::uint64_t space = 1;
  for (std::size_t l = 0; l < inst.length(); ++l) {
    if (space > cap / m) {
      throw OracleSizeError("search space " + std::to_string(m) + "^" + std::to_string(inst.length()) +
                            " exceeds the enumeration cap of " + std::to_string(cap));
    }
    space *= m;
  }
  return Enumerator(inst).run();
}

int pairwise_lower_bound(const Instance& inst) {
  int widest = 0;
  for (std::size_t i = 0; i < inst.count(); ++i)
    for (std::size_t j = i + 1; j < inst.count(); ++j)
      widest = std::max(widest, hamming_distance(inst.string(i), inst.string(j)));
  return (widest + 1) / 2;
}

}  // namespace csp
