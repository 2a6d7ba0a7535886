#include "csp/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

namespace csp {

namespace {

struct Record {
  std::string text;
  std::size_t line;  // first line of the record's sequence (1-based)
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool case_insensitive(const Alphabet& alphabet) {
  return std::none_of(alphabet.symbols().begin(), alphabet.symbols().end(),
                      [](unsigned char c) { return std::islower(c); });
}

// Returns the alphabet declared by a comment body such as "alphabet: ACGT".
std::optional<Alphabet> alphabet_directive(std::string_view comment) {
  comment = trim(comment);
  constexpr std::string_view key = "alphabet:";
  if (comment.size() < key.size() || lower(comment.substr(0, key.size())) != key) return std::nullopt;
  return parse_alphabet(trim(comment.substr(key.size())));
}

template <typename Lines>
void for_each_line(std::string_view text, Lines&& fn) {
  std::size_t number = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++number, line);
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
}

Instance build(std::vector<Record> records, std::optional<Alphabet> declared) {
  if (records.empty()) throw ParseError("no sequences found", 0);
  const std::size_t L = records.front().text.size();
  for (const auto& r : records)
    if (r.text.size() != L)
      throw ParseError("sequence has length " + std::to_string(r.text.size()) + ", expected " + std::to_string(L),
                       r.line);

  if (declared) {
    const bool fold = case_insensitive(*declared);
    for (auto& r : records) {
      for (std::size_t k = 0; k < r.text.size(); ++k) {
        char& c = r.text[k];
        if (fold) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (!declared->contains(c))
          throw ParseError(std::string("symbol '") + c + "' is not in the alphabet", r.line, k + 1);
      }
    }
  }

  std::vector<std::string> strings;
  strings.reserve(records.size());
  for (auto& r : records) strings.push_back(std::move(r.text));
  return Instance::from_strings(strings, declared.value_or(Alphabet{}));
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) +
                                         (column ? ", column " + std::to_string(column) : std::string()) + ": " +
                                         message),
      line_(line),
      column_(column) {}

Alphabet parse_alphabet(std::string_view spec) {
  const std::string name = lower(trim(spec));
  if (name == "dna") return Alphabet::dna();
  if (name == "protein") return Alphabet::protein();
  if (name.empty()) throw std::invalid_argument("empty alphabet");
  return Alphabet(trim(spec));
}

Instance parse_plain(std::string_view text, const std::optional<Alphabet>& declared) {
  std::optional<Alphabet> alphabet = declared;
  std::vector<Record> records;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    line = trim(line);
    if (line.empty()) return;
    if (line.front() == '#') {
      if (auto a = alphabet_directive(line.substr(1)); a && !declared) alphabet = std::move(a);
      return;
    }
    records.push_back({std::string(line), number});
  });
  return build(std::move(records), std::move(alphabet));
}

Instance parse_fasta(std::string_view text, const std::optional<Alphabet>& declared) {
  std::optional<Alphabet> alphabet = declared;
  std::vector<Record> records;
  std::size_t header_line = 0;
  bool open = false;
  auto close = [&]() {
    if (open && records.back().text.empty()) throw ParseError("empty sequence record", header_line);
  };
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    line = trim(line);
    if (line.empty()) return;
    if (line.front() == ';') {
      if (auto a = alphabet_directive(line.substr(1)); a && !declared) alphabet = std::move(a);
      return;
    }
    if (line.front() == '>') {
      close();
      records.push_back({std::string(), number + 1});
      header_line = number;
      open = true;
      return;
    }
    if (!open) throw ParseError("sequence data before the first '>' header", number);
    records.back().text.append(line);
  });
  close();
  return build(std::move(records), std::move(alphabet));
}

std::string write_plain(const Instance& inst) {
  std::ostringstream out;
  out << "# alphabet: " << inst.alphabet().symbols() << '\n';
  for (std::size_t i = 0; i < inst.count(); ++i) out << inst.text(i) << '\n';
  return out.str();
}

std::string write_fasta(const Instance& inst) {
  constexpr std::size_t width = 60;
  std::ostringstream out;
  out << ";alphabet: " << inst.alphabet().symbols() << '\n';
  for (std::size_t i = 0; i < inst.count(); ++i) {
    out << ">s" << (i + 1) << '\n';
    const std::string s = inst.text(i);
    for (std::size_t k = 0; k < s.size(); k += width) out << s.substr(k, width) << '\n';
  }
  return out.str();
}

InstanceFormat format_for_path(const std::filesystem::path& path) {
  const std::string ext = lower(path.extension().string());
  if (ext == ".fa" || ext == ".fasta" || ext == ".fas" || ext == ".fna" || ext == ".faa") return InstanceFormat::fasta;
  return InstanceFormat::plain;
}

Instance read_instance(const std::filesystem::path& path, const std::optional<Alphabet>& declared) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = trim(text);
  if (format_for_path(path) == InstanceFormat::fasta || (!first.empty() && first.front() == '>'))
    return parse_fasta(text, declared);
  return parse_plain(text, declared);
}

void write_instance(const std::filesystem::path& path, const Instance& inst, InstanceFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << (format == InstanceFormat::fasta ? write_fasta(inst) : write_plain(inst));
}

void GeneratorSpec::validate() const {
  if (count < 1) throw std::invalid_argument("generator needs n >= 1");
  if (length < 1) throw std::invalid_argument("generator needs L >= 1");
  if (alphabet.size() < 2) throw std::invalid_argument("generator needs an alphabet of at least 2 symbols");
}

Instance generate_uniform(const GeneratorSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> draw(0, static_cast<int>(spec.alphabet.size()) - 1);
  std::vector<SymbolString> strings(spec.count, SymbolString(spec.length));
  for (auto& s : strings)
    for (auto& c : s) c = static_cast<Symbol>(draw(rng));
  return Instance(std::move(strings), spec.alphabet);
}

}  // namespace csp
