#pragma once

// Automata converting Zeckendorf (or negaFibonacci) inputs to folded
// phi-representations. Track order: (n, x, y) and (m, n, x, y), where x is
// the left part and y the right part read backwards.

#include "phirep/automaton.hpp"
#include "phirep/zphi.hpp"

#include <optional>
#include <string>
#include <vector>

namespace phirep {

// Intermediate stages, each with named tracks.
Dfa build_phipartleft();   // (x, z): z = phi-coefficient of [x.]_phi, Zeckendorf
Dfa build_intpartleft();   // (x, z): z = integer part of [x.]_phi, Zeckendorf
Dfa build_phipartright();  // (x, z): z = phi-coefficient of [.x^R]_phi, negaFibonacci
Dfa build_intpartright();  // (x, z): z = integer part of [.x^R]_phi, negaFibonacci
Dfa build_frougny1();      // (x, y): the phi-coefficients cancel
Dfa build_frougny2();      // (n, x, y): the integer parts add up to n

/// All (n, x, y) with n = [x.y^R]_phi, x and y unrestricted.
Dfa build_frougny();
/// The canonical subset of frougny.
Dfa build_saka();
/// (m, n, x, y) with m*phi + n = [x.y^R]_phi, m and n negaFibonacci.
Dfa build_genfrou();
Dfa build_canfrou();

/// The same languages assembled straight from linear relations on the
/// coefficient decomposition; used as an independent cross-check.
Dfa build_frougny_direct();
Dfa build_genfrou_direct();

/// Cached instances.
const Dfa& frougny();
const Dfa& saka();
const Dfa& genfrou();
const Dfa& canfrou();

/// Completes the free tracks of `a` given the words on `fixed` tracks,
/// allowing up to `extra` additional leading zero tuples. Returns the
/// lexicographically least completion (as digit strings, one per free
/// track in track order), or nothing.
std::optional<std::vector<std::string>> find_completion(const Dfa& a, const std::vector<int>& fixed,
                                                        const std::vector<std::string>& values, int extra);

/// Canonical expansion of n read off the saka automaton.
PhiExpansion phi_rep_via_automaton(long long n);
/// Canonical expansion of m*phi + n read off canfrou.
std::optional<PhiExpansion> phi_rep_via_automaton(long long m, long long n);

}  // namespace phirep
