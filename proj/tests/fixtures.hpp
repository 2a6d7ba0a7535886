#pragma once

// Worked-example instances and test-only reference computations. The
// reference functions here work on plain strings and never call into the
// solver code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "csp/core.hpp"
#include "csp/instance_io.hpp"

namespace fixtures {

inline csp::Instance two_string_example() { return csp::Instance::from_strings({"abaaabbaba", "abababaabb"}); }

inline const std::vector<std::string>& protein_table_strings() {
  static const std::vector<std::string> rows = {"MKDLEXHXAL", "XXTDYKNSMI", "MFWHTEHYHI", "DHGCPCVGHW",
                                                "CYLATKQIIX", "MAMSSXNGHI", "QKSCYKLSVQ", "CHWDTEHSHW"};
  return rows;
}

inline csp::Instance protein_table_example() { return csp::Instance::from_strings(protein_table_strings()); }

inline csp::Instance dna_local_search_example() {
  return csp::Instance::from_strings({"CAGTG", "CGATA", "GATCA", "CTACG"}, csp::Alphabet::dna());
}

inline csp::Instance random_instance(std::uint64_t seed, std::size_t n, std::size_t L, std::size_t m) {
  csp::GeneratorSpec spec;
  spec.count = n;
  spec.length = L;
  spec.alphabet = csp::Alphabet::of_size(m);
  spec.seed = seed;
  return csp::generate_uniform(spec);
}

inline int ref_hamming(const std::string& a, const std::string& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

/// Max distance of `x` to the |x|-prefixes of `strings`.
inline int ref_set_distance(const std::string& x, const std::vector<std::string>& strings) {
  int d = 0;
  for (const auto& s : strings) d = std::max(d, ref_hamming(x, s.substr(0, x.size())));
  return d;
}

/// Plain exhaustive enumeration over `symbols`^L, no pruning.
inline int ref_optimum(const std::vector<std::string>& strings, const std::string& symbols) {
  const std::size_t L = strings.front().size();
  std::vector<std::size_t> digits(L, 0);
  std::string x(L, symbols[0]);
  int best = static_cast<int>(L) + 1;
  while (true) {
    best = std::min(best, ref_set_distance(x, strings));
    std::size_t k = 0;
    while (k < L && ++digits[k] == symbols.size()) {
      digits[k] = 0;
      x[k] = symbols[0];
      ++k;
    }
    if (k == L) break;
    x[k] = symbols[digits[k]];
  }
  return best;
}

inline std::vector<std::string> texts(const csp::Instance& inst) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < inst.count(); ++i) out.push_back(inst.text(i));
  return out;
}

}  // namespace fixtures
