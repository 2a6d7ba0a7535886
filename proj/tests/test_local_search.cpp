#include "doctest.h"

#include <algorithm>
#include <random>
#include <string>

#include "csp/baselines.hpp"
#include "csp/core.hpp"
#include "csp/local_search.hpp"
#include "fixtures.hpp"

using namespace csp;

namespace {

LocalSearchOptions virtual_options(double budget, std::uint64_t seed) {
  LocalSearchOptions o;
  o.budget = budget;
  o.rng_seed = seed;
  o.timing = TimingMode::virtual_time;
  return o;
}

}  // namespace

TEST_SUITE("local_search") {
  TEST_CASE("one repair step on the DNA example") {
    const auto inst = fixtures::dna_local_search_example();
    const auto init = inst.alphabet().encode("GAACG");
    CHECK(fixtures::ref_set_distance("GAACG", fixtures::texts(inst)) == 4);

    const auto critical = find_critical_strings(init, inst);
    CHECK(critical == std::vector<std::size_t>{1});

    std::mt19937_64 rng(7);
    const auto cands = repair_candidates(critical, init, inst, rng);
    REQUIRE(cands.size() == 1);
    CHECK(cands[0].position == 0);
    CHECK(inst.alphabet().symbol(cands[0].symbol) == 'C');
    CHECK(cands[0].source == 1);

    auto opts = virtual_options(5.0, 1);
    opts.max_iterations = 1;
    const auto r = local_search(init, inst, opts);
    CHECK(inst.alphabet().decode(r.solution.symbols) == "CAACG");
    CHECK(r.solution.distance == 3);
    CHECK(r.accepted == 1);
  }

  TEST_CASE("identical critical string symbols give no candidates") {
    const auto inst = Instance::from_strings({"ACGT", "ACGA"});
    const auto sol = inst.alphabet().encode("ACGT");
    std::mt19937_64 rng(1);
    // s_2 differs only at position 3, whose frequency is below the peak, so
    // every peak position already agrees with the solution.
    CHECK(repair_candidates({1}, sol, inst, rng).empty());
    CHECK(repair_candidates({0}, sol, inst, rng).empty());
  }

  TEST_CASE("tied peak levels all become candidates") {
    const auto inst = Instance::from_strings({"AB", "AB", "BA"});
    const auto sol = inst.alphabet().encode("BA");
    std::mt19937_64 rng(3);
    auto cands = repair_candidates({0}, sol, inst, rng);
    std::sort(cands.begin(), cands.end(),
              [](const RepairCandidate& a, const RepairCandidate& b) { return a.position < b.position; });
    REQUIRE(cands.size() == 2);
    CHECK(cands[0].position == 0);
    CHECK(cands[1].position == 1);
  }

  TEST_CASE("duplicate pairs from several critical strings are merged") {
    const auto inst = Instance::from_strings({"AA", "AA", "BB"});
    const auto sol = inst.alphabet().encode("BB");
    std::mt19937_64 rng(3);
    const auto cands = repair_candidates({0, 1}, sol, inst, rng);
    CHECK(cands.size() == 2);
  }

  TEST_CASE("single string converges to itself") {
    const auto inst = Instance::from_strings({"ABCABCAB"});
    const auto r = local_search(inst.alphabet().encode("CCCCCCCC"), inst, virtual_options(5.0, 2));
    CHECK(r.solution.distance == 0);
    CHECK(inst.alphabet().decode(r.solution.symbols) == "ABCABCAB");
    CHECK(r.local_optimum);
  }

  TEST_CASE("input validation") {
    const auto inst = fixtures::dna_local_search_example();
    CHECK_THROWS_AS(local_search(SymbolString(4, 0), inst, virtual_options(1.0, 0)), LengthMismatchError);
    CHECK_THROWS_AS(local_search(SymbolString(5, 0), inst, virtual_options(-1.0, 0)), std::invalid_argument);
    std::mt19937_64 rng(0);
    CHECK_THROWS_AS(repair_candidates({}, SymbolString(5, 0), inst, rng), std::invalid_argument);
  }

  TEST_CASE("an optimal start stays optimal") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto inst = fixtures::random_instance(seed, 4, 7, 3);
      const int opt = fixtures::ref_optimum(fixtures::texts(inst), inst.alphabet().symbols());
      const auto exact = brute_force_optimum(inst);
      const auto r = local_search(exact.solution, inst, virtual_options(1.0, seed));
      CHECK(r.solution.distance == opt);
    }
  }

  TEST_CASE("properties over random instances") {
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 2 + gen() % 6;
      const std::size_t L = 3 + gen() % 20;
      const std::size_t m = 2 + gen() % 4;
      const auto inst = fixtures::random_instance(gen(), n, L, m);
      const auto strings = fixtures::texts(inst);

      SymbolString init(L);
      for (auto& c : init) c = static_cast<Symbol>(gen() % m);
      const int start = fixtures::ref_set_distance(inst.alphabet().decode(init), strings);

      SymbolString prev = init;
      int prev_peak = start;
      bool ok_steps = true;
      bool ok_monotone = true;
      bool ok_vector = true;
      bool ok_provenance = true;
      auto opts = virtual_options(0.05, gen());
      opts.on_accept = [&](const SymbolString& cur, const Eigen::VectorXi& dist) {
        const std::string text = inst.alphabet().decode(cur);
        std::size_t changed = 0;
        std::size_t where = 0;
        for (std::size_t l = 0; l < L; ++l)
          if (cur[l] != prev[l]) ++changed, where = l;
        ok_steps = ok_steps && changed == 1;
        if (changed == 1) {
          const bool from_input =
              std::any_of(strings.begin(), strings.end(), [&](const std::string& s) { return s[where] == text[where]; });
          ok_provenance = ok_provenance && from_input;
        }
        for (std::size_t i = 0; i < n; ++i)
          ok_vector = ok_vector && dist(static_cast<Eigen::Index>(i)) == fixtures::ref_hamming(text, strings[i]);
        const int peak = fixtures::ref_set_distance(text, strings);
        ok_monotone = ok_monotone && peak <= prev_peak;
        prev = cur;
        prev_peak = peak;
      };
      const auto r = local_search(init, inst, opts);
      CHECK(ok_steps);
      CHECK(ok_monotone);
      CHECK(ok_vector);
      CHECK(ok_provenance);
      CHECK(r.solution.distance <= start);
      CHECK(r.solution.distance == fixtures::ref_set_distance(inst.alphabet().decode(r.solution.symbols), strings));
      CHECK(r.seconds <= opts.budget + 1e-6 * static_cast<double>(n) * static_cast<double>(L + 1));
    }
  }

  TEST_CASE("deterministic for a fixed seed") {
    const auto inst = fixtures::random_instance(5, 8, 60, 4);
    const SymbolString init(60, 0);
    const auto a = local_search(init, inst, virtual_options(0.5, 11));
    const auto b = local_search(init, inst, virtual_options(0.5, 11));
    CHECK(a.solution.symbols == b.solution.symbols);
    CHECK(a.iterations == b.iterations);
  }

  TEST_CASE("wall-clock budget is respected") {
    const auto inst = fixtures::random_instance(6, 20, 400, 4);
    LocalSearchOptions o;
    o.budget = 0.2;
    o.rng_seed = 1;
    const auto r = local_search(SymbolString(400, 0), inst, o);
    CHECK(r.seconds < 0.2 + 0.1);
  }
}
