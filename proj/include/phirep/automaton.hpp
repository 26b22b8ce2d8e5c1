#pragma once

// Synchronized multi-track automata over {0,1}^k, read most significant
// digit first. Shorter tracks are padded with leading zeros.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace phirep {

/// A k-tuple of bits; track 0 is the most significant bit so that the
/// numeric order of symbols is the lexicographic order of tuples.
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

inline constexpr int kNoState = -1;
inline constexpr int kMaxTracks = 12;

Symbol encode_symbol(const std::vector<int>& digits);
int symbol_digit(Symbol a, int track, int tracks);
/// Zips digit strings into a word, left-padding with zeros to a common length.
Word make_word(const std::vector<std::string>& tracks);
std::vector<std::string> split_word(const Word& w, int tracks);

/// Deterministic automaton with a partial transition map; missing
/// transitions go to an implicit dead state.
struct Dfa {
  int tracks = 1;
  int initial = 0;
  std::vector<int> delta;  // state * alphabet_size() + symbol
  std::vector<char> accepting;
  /// Optional variable names, one per track.
  std::vector<std::string> names;

  Dfa() = default;
  explicit Dfa(int k);

  static Dfa empty(int k);
  static Dfa universal(int k);

  int alphabet_size() const { return 1 << tracks; }
  int state_count() const { return static_cast<int>(accepting.size()); }
  int add_state(bool accept);
  int next(int s, Symbol a) const { return delta[static_cast<std::size_t>(s) * alphabet_size() + a]; }
  void set(int s, Symbol a, int t) { delta[static_cast<std::size_t>(s) * alphabet_size() + a] = t; }
  int run(const Word& w) const;
};

/// Nondeterministic automaton with epsilon moves, used for regex compilation,
/// projection and the two-start-state arithmetic constructions.
struct Nfa {
  int tracks = 1;
  std::vector<std::vector<std::pair<Symbol, int>>> edges;
  std::vector<std::vector<int>> eps;
  std::vector<char> accepting;
  std::vector<int> initial;

  Nfa() = default;
  explicit Nfa(int k) : tracks(k) {}
  int add_state(bool accept = false);
  void add_edge(int s, Symbol a, int t) { edges[static_cast<std::size_t>(s)].push_back({a, t}); }
  void add_eps(int s, int t) { eps[static_cast<std::size_t>(s)].push_back(t); }
  int state_count() const { return static_cast<int>(accepting.size()); }
};

class SubsetLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kSubsetCap = 1'000'000;

Dfa determinize(const Nfa& n, std::size_t cap = kSubsetCap);

/// Hopcroft minimization. The result is trimmed (no dead state) and its
/// states are numbered in breadth-first order by increasing symbol, so two
/// equivalent automata minimize to identical objects.
Dfa minimize(const Dfa& a);

/// Coarsest partition of a complete automaton refining `label`; returns a
/// block index per state. `delta` must be total (no kNoState entries).
std::vector<int> refine_partition(int states, int alphabet, const std::vector<int>& delta,
                                  const std::vector<int>& label);

enum class BoolOp { And, Or, Diff };

Dfa product(const Dfa& a, const Dfa& b, BoolOp op);
Dfa complement(const Dfa& a);

/// Keeps the listed tracks (in the given order, so this also permutes) and
/// existentially quantifies the rest. Dropped tracks may extend further to
/// the left than the kept ones; the result is closed under adding and
/// removing leading zero tuples.
Dfa project(const Dfa& a, const std::vector<int>& keep);

/// Makes membership invariant under adding or removing leading zero tuples.
Dfa fix_leading_zeros(const Dfa& a);

/// Embeds `a` into an automaton on `new_tracks` tracks, old track j becoming
/// track where[j]; the other tracks are unconstrained.
Dfa remap_tracks(const Dfa& a, int new_tracks, const std::vector<int>& where);

bool accepts(const Dfa& a, const Word& w);
bool accepts(const Dfa& a, const std::vector<std::string>& tracks);
bool equivalent(const Dfa& a, const Dfa& b);
bool is_empty(const Dfa& a);
/// Accepted words of length <= max_len, shortest first, then by symbols.
std::vector<Word> enumerate_accepted(const Dfa& a, int max_len);

/// Compiles a regular expression over tuple literals such as [0,1], with
/// |, *, parentheses and () for the empty word. Bare digits are allowed for
/// one-track expressions.
Dfa compile_regex(std::string_view spec, int tracks);

class RegexError : public std::invalid_argument {
public:
  RegexError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), position_(pos) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Deterministic automaton with output; the transition map is total.
struct Dfao {
  int tracks = 1;
  int initial = 0;
  std::vector<int> delta;
  std::vector<long long> output;

  int alphabet_size() const { return 1 << tracks; }
  int state_count() const { return static_cast<int>(output.size()); }
  int next(int s, Symbol a) const { return delta[static_cast<std::size_t>(s) * alphabet_size() + a]; }
  long long eval(const Word& w) const;
};

Dfao minimize(const Dfao& a);

std::string to_dot(const Dfa& a, const std::string& name = "A");
std::string to_dot(const Dfao& a, const std::string& name = "A");

}  // namespace phirep
