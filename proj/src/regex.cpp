#include "phirep/automaton.hpp"

#include <cctype>

namespace phirep {

namespace {

// Thompson construction; each fragment is an (entry, exit) pair of states.
class RegexParser {
public:
  RegexParser(std::string_view text, int tracks) : text_(text), tracks_(tracks), nfa_(tracks) {}

  Nfa run() {
    auto [s, e] = alternation();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    nfa_.accepting[static_cast<std::size_t>(e)] = 1;
    nfa_.initial = {s};
    return std::move(nfa_);
  }

private:
  using Frag = std::pair<int, int>;

  [[noreturn]] void fail(const std::string& msg) const { throw RegexError("regex: " + msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Frag empty_frag() {
    int s = nfa_.add_state();
    int e = nfa_.add_state();
    nfa_.add_eps(s, e);
    return {s, e};
  }

  Frag alternation() {
    Frag f = concatenation();
    if (!peek('|')) return f;
    int s = nfa_.add_state();
    int e = nfa_.add_state();
    nfa_.add_eps(s, f.first);
    nfa_.add_eps(f.second, e);
    while (peek('|')) {
      ++pos_;
      Frag g = concatenation();
      nfa_.add_eps(s, g.first);
      nfa_.add_eps(g.second, e);
    }
    return {s, e};
  }

  Frag concatenation() {
    Frag f = empty_frag();
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == '|' || text_[pos_] == ')') break;
      Frag g = repetition();
      nfa_.add_eps(f.second, g.first);
      f.second = g.second;
    }
    return f;
  }

  Frag repetition() {
    Frag f = atom();
    while (peek('*')) {
      ++pos_;
      int s = nfa_.add_state();
      int e = nfa_.add_state();
      nfa_.add_eps(s, f.first);
      nfa_.add_eps(s, e);
      nfa_.add_eps(f.second, f.first);
      nfa_.add_eps(f.second, e);
      f = {s, e};
    }
    return f;
  }

  Frag symbol_frag(Symbol a) {
    int s = nfa_.add_state();
    int e = nfa_.add_state();
    nfa_.add_edge(s, a, e);
    return {s, e};
  }

  int digit() {
    skip_space();
    if (pos_ >= text_.size() || (text_[pos_] != '0' && text_[pos_] != '1')) fail("expected 0 or 1");
    return text_[pos_++] - '0';
  }

  Frag atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Frag f = peek(')') ? empty_frag() : alternation();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return f;
    }
    if (c == '[') {
      ++pos_;
      std::vector<int> digits{digit()};
      while (peek(',')) {
        ++pos_;
        digits.push_back(digit());
      }
      if (!peek(']')) fail("expected ']'");
      if (static_cast<int>(digits.size()) != tracks_)
        fail("tuple of arity " + std::to_string(digits.size()) + " in a " + std::to_string(tracks_) + "-track expression");
      ++pos_;
      return symbol_frag(encode_symbol(digits));
    }
    if (c == '0' || c == '1') {
      if (tracks_ != 1) fail("bare digit in a multi-track expression");
      ++pos_;
      return symbol_frag(static_cast<Symbol>(c - '0'));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int tracks_;
  Nfa nfa_;
  std::size_t pos_ = 0;
};

}  // namespace

Dfa compile_regex(std::string_view spec, int tracks) {
  if (tracks < 1 || tracks > kMaxTracks) throw std::invalid_argument("compile_regex: unsupported track count");
  return minimize(determinize(RegexParser(spec, tracks).run()));
}

}  // namespace phirep
