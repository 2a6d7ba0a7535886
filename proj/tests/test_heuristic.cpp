#include "doctest.h"

#include <random>
#include <string>

#include "csp/heuristic.hpp"
#include "fixtures.hpp"

using namespace csp;

namespace {

// Independent EX: prefix matches plus suffix matches against `expected`.
int ref_ex(const std::string& x, const std::vector<std::string>& strings, const std::string& expected) {
  int ex = 1 << 30;
  for (const auto& s : strings) {
    int f = 0;
    for (std::size_t q = 0; q < s.size(); ++q) f += q < x.size() ? x[q] == s[q] : expected[q] == s[q];
    ex = std::min(ex, f);
  }
  return ex;
}

}  // namespace

TEST_SUITE("heuristic") {
  TEST_CASE("expected solution") {
    const auto two = fixtures::two_string_example();
    CHECK(two.alphabet().decode(expected_solution(two).symbols) == "abaaabaaba");

    const auto one = Instance::from_strings({"GATTACA"}, Alphabet::dna());
    CHECK(expected_solution(one).symbols == one.string(0));

    const auto table = fixtures::protein_table_example();
    CHECK(table.alphabet().symbol(expected_solution(table).symbols[5]) == 'K');
  }

  TEST_CASE("suffix scores") {
    const Alphabet a("abce");
    const Eigen::VectorXi s = suffix_scores(a.encode("abbc"), a.encode("acbe"));
    CHECK(s == (Eigen::VectorXi(5) << 2, 1, 1, 0, 0).finished());

    const Alphabet dna = Alphabet::dna();
    CHECK(suffix_scores(dna.encode("ACGT"), dna.encode("ACGT")) == (Eigen::VectorXi(5) << 4, 3, 2, 1, 0).finished());
    CHECK(suffix_scores(dna.encode("AAAA"), dna.encode("CCCC")).isZero());
    CHECK_THROWS_AS(suffix_scores(dna.encode("A"), dna.encode("AC")), LengthMismatchError);
  }

  TEST_CASE("suffix tables are monotone with zero tail") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto inst = fixtures::random_instance(seed, 6, 25, 4);
      const auto tables = suffix_score_tables(inst, expected_solution(inst));
      const auto& m = tables.matrix();
      CHECK(m.col(m.cols() - 1).isZero());
      const Eigen::MatrixXi step = m.leftCols(m.cols() - 1) - m.rightCols(m.cols() - 1);
      CHECK((step.array() >= 0).all());
      CHECK((step.array() <= 1).all());
    }
  }

  TEST_CASE("EX of the partial solution ababa") {
    const auto inst = fixtures::two_string_example();
    const auto tables = suffix_score_tables(inst, expected_solution(inst));
    const auto node = node_from_prefix(inst.alphabet().encode("ababa"), inst, tables);
    CHECK(node.matches == (Eigen::VectorXi(2) << 4, 5).finished());
    const Eigen::VectorXi fitness = node.matches + tables.suffix(5);
    CHECK(fitness == (Eigen::VectorXi(2) << 8, 9).finished());
    CHECK(ex_score(node, tables) == 8);
    CHECK(node.ex == 8);
  }

  TEST_CASE("EX at the root and at full length") {
    const auto inst = fixtures::random_instance(3, 7, 30, 4);
    const auto tables = suffix_score_tables(inst, expected_solution(inst));
    const auto root = root_node(inst, tables);
    CHECK(root.ex == tables.suffix(0).minCoeff());

    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> sym(0, 3);
    for (int t = 0; t < 50; ++t) {
      SymbolString x(inst.length());
      for (auto& c : x) c = static_cast<Symbol>(sym(rng));
      const auto node = node_from_prefix(x, inst, tables);
      CHECK(node.ex == static_cast<int>(inst.length()) - hamming_to_set(x, inst));
    }
  }

  TEST_CASE("variance") {
    const Eigen::VectorXi d = (Eigen::VectorXi(4) << 3, 4, 2, 2).finished();
    CHECK(variance_of(d) == doctest::Approx(2.75 / 3.0).epsilon(1e-12));
    CHECK(variance_of(Eigen::VectorXi::Constant(5, 3)) == 0.0);
    CHECK(variance_of(Eigen::VectorXi::Constant(1, 9)) == 0.0);

    // Same value through the node path: distances [3,4,2,2] at length 5.
    const auto inst = fixtures::dna_local_search_example();
    const auto tables = suffix_score_tables(inst, expected_solution(inst));
    const auto node = node_from_prefix(inst.alphabet().encode("GAACG"), inst, tables);
    CHECK(variance_score(node) == doctest::Approx(2.75 / 3.0).epsilon(1e-12));
  }

  TEST_CASE("variance is zero iff all distances agree") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> v(0, 6);
    for (int t = 0; t < 1000; ++t) {
      Eigen::VectorXi d(2 + t % 6);
      for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = v(rng);
      const bool equal = (d.array() == d(0)).all();
      REQUIRE(variance_of(d) >= 0.0);
      REQUIRE((variance_of(d) == 0.0) == equal);
      REQUIRE(variance_key(d) >= 0);
    }
  }

  TEST_CASE("extend_node") {
    const auto inst = fixtures::two_string_example();
    const auto tables = suffix_score_tables(inst, expected_solution(inst));
    const auto root = root_node(inst, tables);
    const auto a = extend_node(root, inst.alphabet().code('a'), inst, tables);
    CHECK(a.matches == (Eigen::VectorXi(2) << 1, 1).finished());
    const auto b = extend_node(root, inst.alphabet().code('b'), inst, tables);
    CHECK(b.matches.isZero());

    auto full = root;
    for (std::size_t l = 0; l < inst.length(); ++l) full = extend_node(full, 0, inst, tables);
    CHECK_THROWS_AS(extend_node(full, 0, inst, tables), std::logic_error);
  }

  TEST_CASE("incremental extension matches scratch recomputation") {
    std::mt19937_64 rng(42);
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 1000; ++seed) {
      const auto inst = fixtures::random_instance(seed, 2 + seed % 9, 5 + seed % 20, seed % 2 ? 4 : 20);
      const auto strings = fixtures::texts(inst);
      const auto expected = expected_solution(inst);
      const std::string expected_text = inst.alphabet().decode(expected.symbols);
      const auto tables = suffix_score_tables(inst, expected);
      std::uniform_int_distribution<int> sym(0, static_cast<int>(inst.alphabet_size()) - 1);
      auto node = root_node(inst, tables);
      while (node.length() < inst.length()) {
        node = extend_node(node, static_cast<Symbol>(sym(rng)), inst, tables);
        const std::string x = inst.alphabet().decode(node.symbols);
        for (std::size_t i = 0; i < inst.count(); ++i)
          REQUIRE(node.matches(static_cast<Eigen::Index>(i)) ==
                  static_cast<int>(x.size()) - fixtures::ref_hamming(x, strings[i].substr(0, x.size())));
        REQUIRE(node.ex == ref_ex(x, strings, expected_text));
        REQUIRE(node.ex <= static_cast<int>(inst.length()));
        ++checked;
      }
    }
  }
}
