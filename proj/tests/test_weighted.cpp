#include "phirep/weighted.hpp"

#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>

using namespace phirep;

namespace {

Dfa random_dfa(std::mt19937& rng, int states) {
  Dfa d(1);
  for (int q = 0; q < states; ++q) d.add_state(rng() % 3 == 0);
  for (int q = 0; q < states; ++q)
    for (Symbol a : {0u, 1u})
      if (rng() % 5 != 0) d.set(q, a, static_cast<int>(rng() % states));
  return d;
}

// Edge weights c(e) + pot(to) - pot(from) with c >= 0 and pot zero on the
// initial and accepting states: accepted walks are non-negative while
// prefixes may go negative.
WeightedAutomaton potential_weights(std::mt19937& rng, const Dfa& d) {
  std::vector<long long> pot(static_cast<std::size_t>(d.state_count()));
  for (int q = 0; q < d.state_count(); ++q)
    pot[static_cast<std::size_t>(q)] =
        q == d.initial || d.accepting[static_cast<std::size_t>(q)] ? 0 : static_cast<long long>(rng() % 7) - 3;
  WeightedAutomaton wa = weighted_from_automaton(d, [](Symbol) { return 0; });
  for (int q = 0; q < d.state_count(); ++q)
    for (Symbol a : {0u, 1u})
      if (int t = d.next(q, a); t != kNoState)
        wa.weight[static_cast<std::size_t>(q) * 2 + a] =
            static_cast<long long>(rng() % 3) + pot[static_cast<std::size_t>(t)] - pot[static_cast<std::size_t>(q)];
  return wa;
}

// Least weight over walks of length <= k from the start, for growing k.
// Returns nothing when the relaxation has not settled after n rounds.
std::optional<std::vector<long long>> brute_min(const WeightedAutomaton& wa) {
  const Dfa& d = wa.dfa;
  const int n = d.state_count();
  std::vector<long long> best(static_cast<std::size_t>(n), kUnreachable);
  best[static_cast<std::size_t>(d.initial)] = 0;
  for (int round = 0; round <= n; ++round) {
    auto next = best;
    for (int q = 0; q < n; ++q) {
      if (best[static_cast<std::size_t>(q)] == kUnreachable) continue;
      for (Symbol a : {0u, 1u})
        if (int t = d.next(q, a); t != kNoState)
          next[static_cast<std::size_t>(t)] =
              std::min(next[static_cast<std::size_t>(t)], best[static_cast<std::size_t>(q)] + wa.at(q, a));
    }
    if (next == best) return best;
    best = next;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("shortest walks against round-by-round relaxation") {
  std::mt19937 rng(23);
  int negative = 0;
  for (int t = 0; t < 300; ++t) {
    Dfa d = random_dfa(rng, 2 + static_cast<int>(rng() % 6));
    WeightedAutomaton wa = weighted_from_automaton(d, [](Symbol) { return 0; });
    for (auto& w : wa.weight) w = static_cast<long long>(rng() % 5) - 1;
    auto want = brute_min(wa);
    if (!want) {
      ++negative;
      CHECK_THROWS_AS(min_weight_from_start(wa), NegativeCycleError);
      continue;
    }
    CHECK(min_weight_from_start(wa) == *want);
  }
  CHECK(negative > 0);
}

TEST_CASE("weight-0 subautomaton accepts exactly the weight-0 accepted words") {
  std::mt19937 rng(29);
  for (int t = 0; t < 200; ++t) {
    Dfa d = random_dfa(rng, 2 + static_cast<int>(rng() % 6));
    WeightedAutomaton wa = potential_weights(rng, d);
    auto lo = brute_min(wa).value();
    CHECK(verify_nonneg_paths(wa) == std::all_of(lo.begin(), lo.end(), [](long long x) { return x >= 0; }));
    Dfa z = zero_weight_subautomaton(wa);
    for (int len = 0; len <= 9; ++len)
      for (unsigned v = 0; v < (1u << len); ++v) {
        Word w;
        for (int j = len - 1; j >= 0; --j) w.push_back((v >> j) & 1);
        int q = d.initial;
        long long sum = 0;
        for (Symbol a : w) {
          if (q == kNoState) break;
          int nx = d.next(q, a);
          if (nx != kNoState) sum += wa.at(q, a);
          q = nx;
        }
        bool want = q != kNoState && d.accepting[static_cast<std::size_t>(q)] && sum == 0;
        CHECK(accepts(z, w) == want);
      }
  }
}

TEST_CASE("simple cycle census on a two-state graph") {
  Dfa d(1);
  d.add_state(true);
  d.add_state(false);
  d.initial = 0;
  d.set(0, 0, 0);
  d.set(0, 1, 1);
  d.set(1, 0, 0);
  d.set(1, 1, 1);
  WeightedAutomaton wa = weighted_from_automaton(d, [](Symbol) { return 0; });
  wa.weight = {0, 1, -1, 2};
  CycleCensus c = simple_cycle_census(wa);
  CHECK(c.cycles == 3);
  CHECK(c.zero_weight == 2);
  CHECK(c.zero_weight_rooted == 3);
  CHECK(c.min_weight == 0);
  CHECK_FALSE(c.truncated);
  CHECK(simple_cycle_census(wa, 2).truncated);
  CHECK(verify_nonneg_paths(wa));
}

TEST_CASE("digit weights") {
  Dfa d(2);
  d.add_state(true);
  for (Symbol s = 0; s < 4; ++s) d.set(0, s, 0);
  WeightedAutomaton wa = weighted_by_digits(d, {2, -1});
  CHECK(wa.at(0, encode_symbol({1, 0})) == 2);
  CHECK(wa.at(0, encode_symbol({0, 1})) == -1);
  CHECK(wa.at(0, encode_symbol({1, 1})) == 1);
  CHECK_THROWS_AS(min_weight_from_start(wa), NegativeCycleError);
  CHECK_THROWS_AS(weighted_by_digits(d, {1}), std::invalid_argument);
}
