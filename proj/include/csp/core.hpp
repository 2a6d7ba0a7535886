#pragma once

// Domain types for Closest String instances and the Hamming primitives used
// by every solver stage.
//
// Levels are 0-based throughout the library: level l refers to column l of
// the instance (the l-th character of every input string).

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <ranges>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace csp {

using Symbol = std::uint8_t;
using SymbolString = std::vector<Symbol>;

/// Column-major n x L code matrix: column l holds level l of every string.
using CodeMatrix = Eigen::Matrix<Symbol, Eigen::Dynamic, Eigen::Dynamic>;
/// Per-level symbol counts, m x L.
using FrequencyMatrix = Eigen::MatrixXi;

class LengthMismatchError : public std::invalid_argument {
 public:
  LengthMismatchError(std::size_t a, std::size_t b);
};

class InvalidInstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered set of distinct textual symbols. The position of a symbol in the
/// alphabet is its code.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view symbols);

  static Alphabet dna();
  static Alphabet protein();
  /// DNA for m = 4, protein for m = 20, otherwise the first m capital letters.
  static Alphabet of_size(std::size_t m);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  char symbol(Symbol code) const { return symbols_[code]; }
  const std::string& symbols() const { return symbols_; }

  bool contains(char c) const { return lookup_[static_cast<unsigned char>(c)] >= 0; }
  /// Throws std::out_of_range for characters outside the alphabet.
  Symbol code(char c) const;

  SymbolString encode(std::string_view text) const;
  std::string decode(const SymbolString& codes) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::string symbols_;
  std::array<int, 256> lookup_ = make_empty_lookup();

  static std::array<int, 256> make_empty_lookup() {
    std::array<int, 256> t{};
    t.fill(-1);
    return t;
  }
};

/// Immutable set of n equal-length strings over an alphabet, with the
/// per-level frequency table f_l(sigma) built once at construction.
class Instance {
 public:
  Instance(std::vector<SymbolString> strings, Alphabet alphabet);

  /// Encodes textual strings. When `alphabet` is empty it is inferred as the
  /// sorted set of observed characters.
  static Instance from_strings(const std::vector<std::string>& strings, Alphabet alphabet = {});

  std::size_t count() const { return strings_.size(); }   // n
  std::size_t length() const { return length_; }          // L
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t alphabet_size() const { return alphabet_.size(); }  // m

  const SymbolString& string(std::size_t i) const { return strings_[i]; }
  const std::vector<SymbolString>& strings() const { return strings_; }
  std::string text(std::size_t i) const { return alphabet_.decode(strings_[i]); }

  const CodeMatrix& codes() const { return codes_; }
  auto level(std::size_t l) const { return codes_.col(static_cast<Eigen::Index>(l)); }
  const FrequencyMatrix& frequencies() const { return freq_; }
  int frequency(std::size_t l, Symbol s) const {
    return freq_(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(l));
  }

  bool operator==(const Instance& other) const {
    return alphabet_ == other.alphabet_ && strings_ == other.strings_;
  }

 private:
  std::vector<SymbolString> strings_;
  Alphabet alphabet_;
  std::size_t length_ = 0;
  CodeMatrix codes_;
  FrequencyMatrix freq_;
};

struct Solution {
  SymbolString symbols;
  int distance = 0;
};

template <typename A, typename B>
concept SymbolRangePair = std::ranges::random_access_range<A> && std::ranges::random_access_range<B> &&
                          std::ranges::sized_range<A> && std::ranges::sized_range<B>;

/// Number of positions at which `a` and `b` differ.
template <typename A, typename B>
  requires SymbolRangePair<A, B>
int hamming_distance(const A& a, const B& b) {
  const auto n = std::ranges::size(a);
  if (n != std::ranges::size(b)) throw LengthMismatchError(n, std::ranges::size(b));
  int d = 0;
  auto ia = std::ranges::begin(a);
  auto ib = std::ranges::begin(b);
  for (std::size_t i = 0; i < n; ++i) d += (ia[i] != ib[i]) ? 1 : 0;
  return d;
}

/// Number of positions at which `a` and `b` agree (hd^c).
template <typename A, typename B>
  requires SymbolRangePair<A, B>
int complement_matches(const A& a, const B& b) {
  return static_cast<int>(std::ranges::size(a)) - hamming_distance(a, b);
}

/// Per-string Hamming distances between `x` and the |x|-prefix of each input.
Eigen::VectorXi distance_vector(const SymbolString& x, const Instance& inst);

/// max_i hd(x, s_i[0..|x|)). `x` may be a partial solution.
int hamming_to_set(const SymbolString& x, const Instance& inst);

/// f_l(sigma) for every code sigma, indexed by code.
Eigen::VectorXi level_frequencies(const Instance& inst, std::size_t l);

Solution make_solution(SymbolString symbols, const Instance& inst);

}  // namespace csp
