#include "phirep/weighted.hpp"

#include <algorithm>

namespace phirep {

WeightedAutomaton weighted_from_automaton(const Dfa& a, const std::function<long long(Symbol)>& rule) {
  WeightedAutomaton wa{a, std::vector<long long>(a.delta.size(), 0)};
  const int A = a.alphabet_size();
  for (std::size_t i = 0; i < a.delta.size(); ++i) wa.weight[i] = rule(static_cast<Symbol>(static_cast<int>(i) % A));
  return wa;
}

WeightedAutomaton weighted_by_digits(const Dfa& a, const std::vector<long long>& coeff) {
  if (static_cast<int>(coeff.size()) != a.tracks) throw std::invalid_argument("weighted_by_digits: arity mismatch");
  return weighted_from_automaton(a, [&](Symbol s) {
    long long w = 0;
    for (int j = 0; j < a.tracks; ++j) w += coeff[static_cast<std::size_t>(j)] * symbol_digit(s, j, a.tracks);
    return w;
  });
}

namespace {

struct Edge {
  int from;
  int to;
  long long w;
};

std::vector<Edge> edges(const WeightedAutomaton& wa, bool reversed) {
  std::vector<Edge> out;
  const Dfa& a = wa.dfa;
  for (int q = 0; q < a.state_count(); ++q)
    for (int s = 0; s < a.alphabet_size(); ++s) {
      int t = a.next(q, static_cast<Symbol>(s));
      if (t == kNoState) continue;
      long long w = wa.at(q, static_cast<Symbol>(s));
      out.push_back(reversed ? Edge{t, q, w} : Edge{q, t, w});
    }
  return out;
}

std::vector<long long> bellman_ford(int n, const std::vector<Edge>& es, const std::vector<int>& sources) {
  std::vector<long long> d(static_cast<std::size_t>(n), kUnreachable);
  for (int s : sources) d[static_cast<std::size_t>(s)] = 0;
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (const auto& e : es) {
      long long df = d[static_cast<std::size_t>(e.from)];
      if (df == kUnreachable) continue;
      if (df + e.w < d[static_cast<std::size_t>(e.to)]) {
        d[static_cast<std::size_t>(e.to)] = df + e.w;
        changed = true;
      }
    }
    if (!changed) return d;
  }
  throw NegativeCycleError("negative-weight cycle reachable");
}

}  // namespace

std::vector<long long> min_weight_from_start(const WeightedAutomaton& wa) {
  return bellman_ford(wa.dfa.state_count(), edges(wa, false), {wa.dfa.initial});
}

std::vector<long long> min_weight_to_accept(const WeightedAutomaton& wa) {
  std::vector<int> acc;
  for (int q = 0; q < wa.dfa.state_count(); ++q)
    if (wa.dfa.accepting[static_cast<std::size_t>(q)]) acc.push_back(q);
  return bellman_ford(wa.dfa.state_count(), edges(wa, true), acc);
}

bool verify_nonneg_paths(const WeightedAutomaton& wa) {
  auto d = min_weight_from_start(wa);
  return std::all_of(d.begin(), d.end(), [](long long x) { return x == kUnreachable || x >= 0; });
}

Dfa zero_weight_subautomaton(const WeightedAutomaton& wa) {
  const Dfa& a = wa.dfa;
  auto lo = min_weight_from_start(wa);
  auto hi = min_weight_to_accept(wa);
  auto kept = [&](int q) {
    auto i = static_cast<std::size_t>(q);
    return lo[i] != kUnreachable && hi[i] != kUnreachable && lo[i] + hi[i] == 0;
  };
  Dfa out = Dfa::empty(a.tracks);
  out.names = a.names;
  if (!kept(a.initial)) return out;
  out = Dfa(a.tracks);
  out.names = a.names;
  std::vector<int> id(static_cast<std::size_t>(a.state_count()), kNoState);
  for (int q = 0; q < a.state_count(); ++q)
    if (kept(q)) id[static_cast<std::size_t>(q)] = out.add_state(a.accepting[static_cast<std::size_t>(q)] && lo[static_cast<std::size_t>(q)] == 0);
  out.initial = id[static_cast<std::size_t>(a.initial)];
  for (int q = 0; q < a.state_count(); ++q) {
    if (!kept(q)) continue;
    for (int s = 0; s < a.alphabet_size(); ++s) {
      int t = a.next(q, static_cast<Symbol>(s));
      if (t == kNoState || !kept(t)) continue;
      if (lo[static_cast<std::size_t>(q)] + wa.at(q, static_cast<Symbol>(s)) != lo[static_cast<std::size_t>(t)]) continue;
      out.set(id[static_cast<std::size_t>(q)], static_cast<Symbol>(s), id[static_cast<std::size_t>(t)]);
    }
  }
  Dfa m = minimize(out);
  m.names = a.names;
  return m;
}

CycleCensus simple_cycle_census(const WeightedAutomaton& wa, std::size_t limit) {
  const Dfa& a = wa.dfa;
  const int n = a.state_count();
  CycleCensus c;
  bool any = false;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  // Cycles are rooted at their least state; the search from root r only
  // visits states > r.
  for (int r = 0; r < n && !c.truncated; ++r) {
    auto dfs = [&](auto& self, int q, long long w, std::size_t len) -> void {
      for (int s = 0; s < a.alphabet_size() && !c.truncated; ++s) {
        int t = a.next(q, static_cast<Symbol>(s));
        if (t == kNoState || t < r) continue;
        long long nw = w + wa.at(q, static_cast<Symbol>(s));
        if (t == r) {
          ++c.cycles;
          if (nw == 0) {
            ++c.zero_weight;
            c.zero_weight_rooted += len;
          }
          c.min_weight = any ? std::min(c.min_weight, nw) : nw;
          any = true;
          if (c.cycles >= limit) c.truncated = true;
          continue;
        }
        if (on_path[static_cast<std::size_t>(t)]) continue;
        on_path[static_cast<std::size_t>(t)] = 1;
        self(self, t, nw, len + 1);
        on_path[static_cast<std::size_t>(t)] = 0;
      }
    };
    on_path[static_cast<std::size_t>(r)] = 1;
    dfs(dfs, r, 0, 1);
    on_path[static_cast<std::size_t>(r)] = 0;
  }
  return c;
}

}  // namespace phirep
