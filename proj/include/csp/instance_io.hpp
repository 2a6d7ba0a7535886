#pragma once

// Instance files and the uniform random generator.
//
// Plain format: one string per line; blank lines and lines starting with
// '#' are ignored, except a "# alphabet: <symbols|dna|protein>" line which
// declares the alphabet. FASTA format: records introduced by '>' lines, with
// sequences that may wrap; ';' lines are comments and ";alphabet: ..."
// declares the alphabet. Without a declaration the alphabet is the sorted set
// of observed symbols.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "csp/core.hpp"

namespace csp {

enum class InstanceFormat { plain, fasta };

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// "dna", "protein" (case-insensitive) or a literal symbol list.
Alphabet parse_alphabet(std::string_view spec);

/// Input is upper-cased when the declared alphabet has no lower-case symbols.
Instance parse_plain(std::string_view text, const std::optional<Alphabet>& declared = std::nullopt);
Instance parse_fasta(std::string_view text, const std::optional<Alphabet>& declared = std::nullopt);

std::string write_plain(const Instance& inst);
std::string write_fasta(const Instance& inst);

/// FASTA for .fa/.fasta/.fas/.fna/.faa files or text starting with '>',
/// plain otherwise.
Instance read_instance(const std::filesystem::path& path, const std::optional<Alphabet>& declared = std::nullopt);
void write_instance(const std::filesystem::path& path, const Instance& inst, InstanceFormat format);
InstanceFormat format_for_path(const std::filesystem::path& path);

struct GeneratorSpec {
  std::size_t count = 10;    // n
  std::size_t length = 100;  // L
  Alphabet alphabet = Alphabet::dna();
  std::uint64_t seed = 0;

  void validate() const;
};

/// Every symbol drawn independently and uniformly; deterministic per seed.
Instance generate_uniform(const GeneratorSpec& spec);

}  // namespace csp
