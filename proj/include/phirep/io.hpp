#pragma once

// Plain-text automaton files and OEIS b-files.

#include "phirep/analyses.hpp"
#include "phirep/automaton.hpp"
#include "phirep/zphi.hpp"

#include <climits>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phirep {

class FormatError : public std::runtime_error {
public:
  FormatError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Either an acceptor or an automaton with output, as stored on disk.
struct AutomatonFile {
  bool has_output = false;
  Dfa dfa;
  Dfao dfao;
};

/// Layout:
///   tracks k
///   alphabets {0,1} ... (one per track)
///   flags deterministic [output]
///   names a b ...        (optional)
///   initial q
///   state <id> <accept|reject|output=v>
///   trans <src> <d1,...,dk> <dst>
void write_automaton(std::ostream& os, const Dfa& a);
void write_automaton(std::ostream& os, const Dfao& a);
std::string automaton_text(const Dfa& a);
std::string automaton_text(const Dfao& a);
AutomatonFile read_automaton(std::istream& is);
AutomatonFile parse_automaton(std::string_view text);

struct BFile {
  std::string id;
  std::vector<std::pair<long long, BigInt>> entries;
};

/// '#' comments and blank lines are skipped; every other line must be
/// "index value" with strictly increasing indices.
BFile parse_bfile(std::istream& is, std::string id = {});
/// Nothing when the file does not exist.
std::optional<BFile> load_bfile(const std::filesystem::path& path, std::string id = {});

/// Default location of the b-file for an id such as "A362970": the
/// directory in PHIREP_BFILE_DIR (or the working directory) joined with
/// "b362970.txt".
std::filesystem::path default_bfile_path(const std::string& seq_id);

/// A sequence generator: values at indices, or the terms of a set in
/// increasing order when `is_set` is true (the b-file index then counts
/// terms from the first entry).
struct SequenceGenerator {
  std::string id;
  std::string description;
  bool is_set = false;
  std::function<BigInt(long long)> value;
  std::function<std::vector<long long>(std::size_t count)> terms;
};

const std::vector<SequenceGenerator>& sequence_generators();
const SequenceGenerator* find_generator(const std::string& seq_id);

/// Compares a b-file against the generator on the entries with indices in
/// [from, to] (all entries by default). A missing or empty file is reported
/// as skipped.
SequenceReport bfile_check(const std::string& seq_id, const std::filesystem::path& path,
                           long long from = LLONG_MIN, long long to = LLONG_MAX);
SequenceReport bfile_check(const SequenceGenerator& gen, const BFile& file, long long from = LLONG_MIN,
                           long long to = LLONG_MAX);

}  // namespace phirep
