#include "phirep/automaton.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <regex>
#include <set>

using namespace phirep;

namespace {

Dfa random_dfa(std::mt19937& rng, int states, int tracks, double density = 0.8) {
  Dfa d(tracks);
  for (int q = 0; q < states; ++q) d.add_state(rng() % 3 == 0);
  std::uniform_real_distribution<double> u(0, 1);
  for (int q = 0; q < states; ++q)
    for (int a = 0; a < d.alphabet_size(); ++a)
      if (u(rng) < density) d.set(q, static_cast<Symbol>(a), static_cast<int>(rng() % states));
  return d;
}

std::vector<Word> all_words(int tracks, int max_len) {
  std::vector<Word> out{{}};
  const int A = 1 << tracks;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == max_len) continue;
    for (int a = 0; a < A; ++a) {
      Word w = out[i];
      w.push_back(static_cast<Symbol>(a));
      out.push_back(w);
    }
  }
  return out;
}

// Plain Moore refinement on the completed automaton; returns the number of
// classes that are reachable and can still reach acceptance.
int moore_live_classes(const Dfa& a) {
  const int A = a.alphabet_size();
  const int n = a.state_count() + 1, sink = n - 1;
  auto nxt = [&](int q, int s) {
    if (q == sink) return sink;
    int t = a.next(q, static_cast<Symbol>(s));
    return t == kNoState ? sink : t;
  };
  std::vector<int> cls(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) cls[static_cast<std::size_t>(q)] = q != sink && a.accepting[static_cast<std::size_t>(q)];
  for (;;) {
    std::map<std::vector<int>, int> sig;
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
      std::vector<int> key{cls[static_cast<std::size_t>(q)]};
      for (int s = 0; s < A; ++s) key.push_back(cls[static_cast<std::size_t>(nxt(q, s))]);
      next[static_cast<std::size_t>(q)] = sig.emplace(key, static_cast<int>(sig.size())).first->second;
    }
    bool same = std::set<int>(next.begin(), next.end()).size() == std::set<int>(cls.begin(), cls.end()).size();
    cls = next;
    if (same) break;
  }
  // reachable
  std::vector<char> reach(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{a.initial};
  reach[static_cast<std::size_t>(a.initial)] = 1;
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (int s = 0; s < A; ++s) {
      int t = nxt(q, s);
      if (!reach[static_cast<std::size_t>(t)]) {
        reach[static_cast<std::size_t>(t)] = 1;
        stack.push_back(t);
      }
    }
  }
  std::set<int> live;
  int dead_class = cls[static_cast<std::size_t>(sink)];
  for (int q = 0; q < n; ++q)
    if (reach[static_cast<std::size_t>(q)] && cls[static_cast<std::size_t>(q)] != dead_class)
      live.insert(cls[static_cast<std::size_t>(q)]);
  return static_cast<int>(live.size());
}

}  // namespace

TEST_CASE("symbols put track 0 in the most significant bit") {
  CHECK(encode_symbol({1, 0}) == 2);
  CHECK(symbol_digit(2, 0, 2) == 1);
  CHECK(symbol_digit(2, 1, 2) == 0);
  Word w = make_word({"1", "010"});
  REQUIRE(w.size() == 3);
  CHECK(split_word(w, 2) == std::vector<std::string>{"001", "010"});
}

TEST_CASE("Hopcroft minimization matches Moore refinement and preserves languages") {
  std::mt19937 rng(1);
  auto words = all_words(1, 8);
  auto words2 = all_words(2, 4);
  for (int i = 0; i < 200; ++i) {
    int tracks = i % 2 + 1;
    Dfa a = random_dfa(rng, 2 + static_cast<int>(rng() % 7), tracks);
    Dfa m = minimize(a);
    CHECK(m.state_count() == std::max(1, moore_live_classes(a)));
    for (const auto& w : tracks == 1 ? words : words2) CHECK(accepts(a, w) == accepts(m, w));
    CHECK(minimize(m).delta == m.delta);
  }
}

TEST_CASE("minimization is canonical") {
  std::mt19937 rng(2);
  for (int i = 0; i < 50; ++i) {
    Dfa a = random_dfa(rng, 6, 1);
    // Same language with a renumbered copy.
    Dfa b(1);
    const int n = a.state_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) perm[static_cast<std::size_t>(q)] = n - 1 - q;
    for (int q = 0; q < n; ++q) b.add_state(a.accepting[static_cast<std::size_t>(n - 1 - q)]);
    b.initial = perm[static_cast<std::size_t>(a.initial)];
    for (int q = 0; q < n; ++q)
      for (int s = 0; s < 2; ++s) {
        int t = a.next(q, static_cast<Symbol>(s));
        if (t != kNoState) b.set(perm[static_cast<std::size_t>(q)], static_cast<Symbol>(s), perm[static_cast<std::size_t>(t)]);
      }
    Dfa ma = minimize(a), mb = minimize(b);
    CHECK(ma.delta == mb.delta);
    CHECK(ma.accepting == mb.accepting);
    CHECK(equivalent(a, b));
  }
}

TEST_CASE("products and complement against word-by-word evaluation") {
  std::mt19937 rng(3);
  auto words = all_words(2, 4);
  for (int i = 0; i < 60; ++i) {
    Dfa a = random_dfa(rng, 4, 2), b = random_dfa(rng, 4, 2);
    Dfa p_and = product(a, b, BoolOp::And), p_or = product(a, b, BoolOp::Or), p_diff = product(a, b, BoolOp::Diff);
    Dfa c = complement(a);
    for (const auto& w : words) {
      bool x = accepts(a, w), y = accepts(b, w);
      CHECK(accepts(p_and, w) == (x && y));
      CHECK(accepts(p_or, w) == (x || y));
      CHECK(accepts(p_diff, w) == (x && !y));
      CHECK(accepts(c, w) == !x);
    }
  }
}

TEST_CASE("projection against brute force over the dropped track") {
  std::mt19937 rng(4);
  auto words = all_words(1, 6);
  for (int i = 0; i < 80; ++i) {
    Dfa a = random_dfa(rng, 4, 2);
    Dfa p = project(a, {0});
    // Subsets reachable on (0, *) prefixes of any length.
    std::vector<std::set<int>> starts;
    std::set<int> cur{a.initial};
    while (std::find(starts.begin(), starts.end(), cur) == starts.end()) {
      starts.push_back(cur);
      std::set<int> nx;
      for (int q : cur)
        for (int y = 0; y < 2; ++y)
          if (int t = a.next(q, encode_symbol({0, y})); t != kNoState) nx.insert(t);
      cur = nx;
    }
    for (const auto& w : words) {
      // Leading zeros of w do not matter: strip them and prepend freely.
      std::size_t k = 0;
      while (k < w.size() && w[k] == 0) ++k;
      bool want = false;
      for (const auto& s0 : starts) {
        std::set<int> s = s0;
        for (std::size_t j = k; j < w.size(); ++j) {
          std::set<int> nx;
          for (int q : s)
            for (int y = 0; y < 2; ++y)
              if (int t = a.next(q, encode_symbol({static_cast<int>(w[j]), y})); t != kNoState) nx.insert(t);
          s = nx;
        }
        for (int q : s) want = want || a.accepting[static_cast<std::size_t>(q)];
      }
      CHECK(accepts(p, w) == want);
    }
  }
}

TEST_CASE("fix_leading_zeros closes under padding") {
  std::mt19937 rng(5);
  auto words = all_words(1, 6);
  for (int i = 0; i < 50; ++i) {
    Dfa a = random_dfa(rng, 4, 1);
    Dfa f = fix_leading_zeros(a);
    for (const auto& w : words) {
      Word z = w;
      z.insert(z.begin(), 0);
      CHECK(accepts(f, w) == accepts(f, z));
      if (accepts(a, w)) CHECK(accepts(f, w));
    }
  }
}

TEST_CASE("regular expressions against std::regex on one track") {
  const std::pair<const char*, const char*> cases[] = {
      {"(0|1)*11(0|1)*", "[01]*11[01]*"}, {"0*10*", "0*10*"},           {"(0|1)*1(00)*1", "[01]*1(00)*1"},
      {"()|1(01)*", "|1(01)*"},           {"(0*)|(0*1(0|1)((0|1)(0|1))*)", "(0*)|(0*1[01]([01][01])*)"},
  };
  auto words = all_words(1, 9);
  for (const auto& [ours, std_spec] : cases) {
    Dfa d = compile_regex(ours, 1);
    std::regex re(std_spec);
    for (const auto& w : words) {
      std::string s;
      for (Symbol a : w) s += static_cast<char>('0' + a);
      CHECK_MESSAGE(accepts(d, w) == std::regex_match(s, re), ours << " on " << s);
    }
  }
  CHECK_THROWS_AS(compile_regex("[0,1", 2), RegexError);
  CHECK_THROWS_AS(compile_regex("(0", 1), RegexError);
}

TEST_CASE("subset construction for an NFA with epsilon moves") {
  // Words over {0,1} whose third symbol from the end is 1.
  Nfa n(1);
  for (int i = 0; i < 4; ++i) n.add_state(i == 3);
  n.initial = {0};
  n.add_edge(0, 0, 0);
  n.add_edge(0, 1, 0);
  n.add_edge(0, 1, 1);
  for (int i = 1; i < 3; ++i) {
    n.add_edge(i, 0, i + 1);
    n.add_edge(i, 1, i + 1);
  }
  Dfa d = minimize(determinize(n));
  CHECK(d.state_count() == 8);
  for (const auto& w : all_words(1, 7)) CHECK(accepts(d, w) == (w.size() >= 3 && w[w.size() - 3] == 1));
  CHECK_THROWS_AS(determinize(n, 2), SubsetLimitError);
}

TEST_CASE("enumeration and emptiness") {
  Dfa d = compile_regex("1(0|1)", 1);
  auto ws = enumerate_accepted(d, 3);
  CHECK(ws.size() == 2);
  CHECK(is_empty(product(d, complement(d), BoolOp::And)));
  CHECK_FALSE(is_empty(d));
}

TEST_CASE("DOT output is balanced and quoted") {
  Dfa d = compile_regex("[0,1]*[1,1]", 2);
  std::string dot = to_dot(minimize(d), "T");
  CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));
  CHECK(std::count(dot.begin(), dot.end(), '"') % 2 == 0);
  CHECK(dot.find("digraph") != std::string::npos);
}
