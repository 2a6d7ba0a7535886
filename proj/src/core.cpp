#include "csp/core.hpp"

#include <algorithm>
#include <set>

namespace csp {

LengthMismatchError::LengthMismatchError(std::size_t a, std::size_t b)
    : std::invalid_argument("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.size() > 255) throw std::invalid_argument("alphabet larger than 255 symbols");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto& slot = lookup_[static_cast<unsigned char>(symbols_[i])];
    if (slot >= 0) throw std::invalid_argument(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
    slot = static_cast<int>(i);
  }
}

Alphabet Alphabet::dna() { return Alphabet("ACGT"); }

Alphabet Alphabet::protein() { return Alphabet("ACDEFGHIKLMNPQRSTVWY"); }

Alphabet Alphabet::of_size(std::size_t m) {
  if (m == 4) return dna();
  if (m == 20) return protein();
  if (m == 0 || m > 26) throw std::invalid_argument("alphabet size must be in 1..26");
  std::string s;
  for (std::size_t i = 0; i < m; ++i) s.push_back(static_cast<char>('A' + i));
  return Alphabet(s);
}

Symbol Alphabet::code(char c) const {
  const int v = lookup_[static_cast<unsigned char>(c)];
  if (v < 0) throw std::out_of_range(std::string("symbol '") + c + "' not in alphabet");
  return static_cast<Symbol>(v);
}

SymbolString Alphabet::encode(std::string_view text) const {
  SymbolString out;
  out.reserve(text.size());
  for (char c : text) out.push_back(code(c));
  return out;
}

std::string Alphabet::decode(const SymbolString& codes) const {
  std::string out;
  out.reserve(codes.size());
  for (Symbol s : codes) out.push_back(symbols_.at(s));
  return out;
}

Instance::Instance(std::vector<SymbolString> strings, Alphabet alphabet)
    : strings_(std::move(strings)), alphabet_(std::move(alphabet)) {
  if (strings_.empty()) throw InvalidInstanceError("instance has no strings");
  if (alphabet_.empty()) throw InvalidInstanceError("instance alphabet is empty");
  length_ = strings_.front().size();
  if (length_ == 0) throw InvalidInstanceError("instance strings have length zero");

  const auto n = static_cast<Eigen::Index>(strings_.size());
  const auto L = static_cast<Eigen::Index>(length_);
  const auto m = static_cast<Eigen::Index>(alphabet_.size());
  codes_.resize(n, L);
  freq_ = FrequencyMatrix::Zero(m, L);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& s = strings_[static_cast<std::size_t>(i)];
    if (s.size() != length_)
      throw InvalidInstanceError("string " + std::to_string(i + 1) + " has length " + std::to_string(s.size()) +
                                 ", expected " + std::to_string(length_));
    for (Eigen::Index l = 0; l < L; ++l) {
      const Symbol c = s[static_cast<std::size_t>(l)];
      if (c >= alphabet_.size())
        throw InvalidInstanceError("string " + std::to_string(i + 1) + " has a symbol code outside the alphabet");
      codes_(i, l) = c;
      ++freq_(c, l);
    }
  }
}

Instance Instance::from_strings(const std::vector<std::string>& strings, Alphabet alphabet) {
  if (alphabet.empty()) {
    std::set<char> seen;
    for (const auto& s : strings) seen.insert(s.begin(), s.end());
    alphabet = Alphabet(std::string(seen.begin(), seen.end()));
  }
  std::vector<SymbolString> codes;
  codes.reserve(strings.size());
  for (const auto& s : strings) codes.push_back(alphabet.encode(s));
  return Instance(std::move(codes), std::move(alphabet));
}

Eigen::VectorXi distance_vector(const SymbolString& x, const Instance& inst) {
  if (x.size() > inst.length())
    throw LengthMismatchError(x.size(), inst.length());
  Eigen::VectorXi d = Eigen::VectorXi::Zero(static_cast<Eigen::Index>(inst.count()));
  for (std::size_t l = 0; l < x.size(); ++l)
    d += (inst.level(l).array() != x[l]).cast<int>().matrix();
  return d;
}

int hamming_to_set(const SymbolString& x, const Instance& inst) {
  if (x.empty()) {
    return 0;
  }
  return distance_vector(x, inst).maxCoeff();
}

Eigen::VectorXi level_frequencies(const Instance& inst, std::size_t l) {
  if (l >= inst.length())
    throw std::out_of_range("level " + std::to_string(l) + " outside 0.." + std::to_string(inst.length() - 1));
  return inst.frequencies().col(static_cast<Eigen::Index>(l));
}

Solution make_solution(SymbolString symbols, const Instance& inst) {
  if (symbols.size() != inst.length()) throw LengthMismatchError(symbols.size(), inst.length());
  const int d = hamming_to_set(symbols, inst);
  return Solution{std::move(symbols), d};
}

}  // namespace csp
