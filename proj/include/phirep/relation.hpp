#pragma once

// First-order plumbing over automata whose tracks carry variable names:
// conjunction, disjunction, negation and quantification, plus a builder for
// linear equations over Zeckendorf and negaFibonacci tracks.

#include "phirep/automaton.hpp"

#include <string>
#include <vector>

namespace phirep {

enum class NumSys { zeck, negafib };

/// Copy of `a` with its tracks named `names` (sizes must match).
Dfa named(Dfa a, std::vector<std::string> names);
/// Regular expression compiled directly onto named tracks.
Dfa named_regex(std::string_view spec, std::vector<std::string> names);

Dfa conj(const Dfa& a, const Dfa& b);
Dfa disj(const Dfa& a, const Dfa& b);
/// Complement over all words on the same tracks.
Dfa negate(const Dfa& a);
Dfa exists(const Dfa& a, const std::vector<std::string>& vars);
/// Reorders tracks to `order`, adding unconstrained tracks for new names.
Dfa select(const Dfa& a, const std::vector<std::string>& order);
/// Renames a track; if `to` is already present the two are identified.
Dfa rename(const Dfa& a, const std::string& from, const std::string& to);
/// Positional substitution of a named automaton's tracks by `args`
/// (repeated arguments are identified).
Dfa instantiate(const Dfa& a, const std::vector<std::string>& args);

/// Words without 11 on a single named track: the valid representations in
/// both the Zeckendorf and negaFibonacci systems.
Dfa canonical(const std::string& var);
Dfa canonical_all(const std::vector<std::string>& vars);
/// Existential quantification restricted to valid representations.
Dfa exists_canon(const Dfa& a, const std::vector<std::string>& vars);

/// One term of a linear form. For a Zeckendorf track with digits a_j
/// (a_0 least significant) the term is p*V + q*V' with V = sum a_j F_{j+2}
/// and V' = sum a_j F_{j+1}; for a negaFibonacci track with digits a_i
/// (a_1 least significant) it is p*R + q*S with R = sum a_i F_{-i} and
/// S = sum a_i F_{-i+1}. Plain values use (p, q) = (coef, 0).
struct LinearTerm {
  std::string var;
  NumSys sys = NumSys::zeck;
  long long p = 1;
  long long q = 0;
};

/// Automaton accepting the tuples of words with sum of terms = rhs. Words
/// are arbitrary unless `canonical_tracks` is set, in which case every
/// track is additionally restricted to valid (no 11) representations.
Dfa linear_relation(const std::vector<LinearTerm>& terms, long long rhs, bool canonical_tracks);

/// z = x + y in one numeration system, all tracks canonical.
Dfa sum_relation(const std::string& z, const std::string& x, const std::string& y, NumSys sys);
/// x = c in the given system (canonical).
Dfa constant_relation(const std::string& x, long long c, NumSys sys);
/// x = y, with x Zeckendorf and y negaFibonacci, both canonical.
Dfa cross_equal(const std::string& x, const std::string& y, bool negated = false);
/// Canonical negaFibonacci word with a negative value.
Dfa negafib_negative(const std::string& x);

}  // namespace phirep
