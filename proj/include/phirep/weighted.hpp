#pragma once

// Integer edge weights on a DFA: shortest-path checks and the automaton of
// weight-0 accepting paths.

#include "phirep/automaton.hpp"

#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace phirep {

struct WeightedAutomaton {
  Dfa dfa;
  std::vector<long long> weight;  // parallel to dfa.delta

  long long at(int q, Symbol a) const {
    return weight[static_cast<std::size_t>(q) * dfa.alphabet_size() + a];
  }
};

constexpr long long kUnreachable = std::numeric_limits<long long>::max();

class NegativeCycleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

WeightedAutomaton weighted_from_automaton(const Dfa& a, const std::function<long long(Symbol)>& rule);
/// Weight sum_j coeff[j] * digit_j of each symbol.
WeightedAutomaton weighted_by_digits(const Dfa& a, const std::vector<long long>& coeff);

/// Least walk weight from the initial state to each state (Bellman-Ford);
/// kUnreachable where no walk exists. Throws NegativeCycleError when a
/// negative cycle is reachable.
std::vector<long long> min_weight_from_start(const WeightedAutomaton& wa);
/// Least walk weight from each state to an accepting state.
std::vector<long long> min_weight_to_accept(const WeightedAutomaton& wa);

/// True iff every walk from the initial state has non-negative weight.
/// Throws NegativeCycleError if a reachable negative cycle exists.
bool verify_nonneg_paths(const WeightedAutomaton& wa);

/// States on a weight-0 accepting path with their tight edges; assumes no
/// accepting path has negative weight. Accepts exactly the weight-0
/// accepted words of the original.
Dfa zero_weight_subautomaton(const WeightedAutomaton& wa);

struct CycleCensus {
  std::size_t cycles = 0;       // simple cycles, parallel edges counted separately
  std::size_t zero_weight = 0;
  std::size_t zero_weight_rooted = 0;  // zero-weight cycles counted once per starting state
  long long min_weight = 0;
  bool truncated = false;
};

/// Enumerates simple cycles (no repeated state) up to `limit` of them.
CycleCensus simple_cycle_census(const WeightedAutomaton& wa, std::size_t limit = 10000000);

}  // namespace phirep
