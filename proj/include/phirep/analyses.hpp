#pragma once

// Counting functions, digit statistics and expansion families derived from
// the Frougny-Sakarovitch automata, with direct oracles for each.

#include "phirep/automaton.hpp"
#include "phirep/linrep.hpp"
#include "phirep/polynomial.hpp"
#include "phirep/weighted.hpp"
#include "phirep/zphi.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace phirep {

/// A counting function as produced from an automaton and after minimization.
struct CountRep {
  LinRep raw;
  LinRep minimal;
};

/// Value of a one-track representation at (n)_F as an integer.
long long eval_at(const LinRep& a, long long n);

/// n-track automaton values: accepted n in [0, max_n], ascending, at most
/// `max_count` of them.
std::vector<long long> accepted_values(const Dfa& a, long long max_n, std::size_t max_count = SIZE_MAX);
bool accepts_zeck(const Dfa& a, long long n);
/// Total DFAO with output 1 on accepted words and 0 elsewhere.
Dfao indicator_dfao(const Dfa& a);

// ---------------------------------------------------------------- counts

/// p(n): distinct left parts over all finite expansions of n.
const CountRep& left_parts_count();

struct DigitSums {
  CountRep left;   // s_L
  CountRep right;  // s_R
  CountRep total;  // s = s_L + s_R; raw is the sum of the two minimal ones
};
const DigitSums& digit_sums();

/// s_R(n+1) as a function of n.
const CountRep& digit_sum_right_next();
/// d(n) = s_R(n+1) - s_R(n) via the semigroup construction.
const Dfao& digit_sum_right_difference();

/// Parity of s(n): n-track automaton accepting odd digit sums.
const Dfa& digit_sum_mod2();

/// ell(n): length of the left part.
const CountRep& length_left();
/// ell(n) - ell(n-1), with ell(-1) = 0.
const Dfao& length_first_difference();

// ---------------------------------------------------------------- Gerdemann

struct GerdemannResult {
  bool nonneg = false;
  Dfa zero_paths;  // (n, x, y) weight-0 accepting paths of saka
  Dfa zero_set;    // n-track projection
  CycleCensus census;
};
/// Weights b + c - a on the transitions [a, b, c] of saka.
const GerdemannResult& gerdemann();

// ---------------------------------------------------------------- bits

/// d_i(n) of the canonical expansion.
int phi_digit(long long n, long i);
/// floor(n (3 - phi) / 5) for n >= 0.
long long floor_alpha_times(long long n);
/// w(n) = floor((n+1) alpha) - floor(n alpha).
int sturmian_w(long long n);

struct Discrepancy {
  long long n = 0;
  std::string computed;
  std::string expected;
  std::string source;
};

struct SequenceReport {
  std::string name;
  std::string oeis;
  long long from = 0;
  long long to = -1;
  std::vector<Discrepancy> discrepancies;
  bool skipped = false;
  std::string note;

  bool ok() const { return !skipped && discrepancies.empty(); }
};

/// d_{-1}(n) = 1 exactly when n has two Lucas representations, n <= max_n.
SequenceReport lucas_link_check(long long max_n);
/// Fraction of n < limit with d_{-1}(n) = 1.
double dm1_frequency(long long limit);
/// 1 / (3 phi + 1).
double dm1_limit_frequency();

// ---------------------------------------------------------------- vertical runs

/// v(i) as stated for the canonical expansion.
long long vertical_run_formula(int i);

struct RunScan {
  std::set<long long> lengths;
  long long window = 0;
  bool complete = false;  // at least one run closed inside the window
};
/// Lengths of maximal runs of 1's in column i of d_i(n), scanning n over
/// [0, window) with window 4 L_{|i|+2}.
RunScan vertical_runs(int i);
/// The same lengths read from the run-length relation built with automata.
std::set<long long> vertical_runs_automaton(int i, long long max_len);
/// DVL analogues.
RunScan dvl_vertical_runs(int i);
std::set<long long> dvl_vertical_runs_automaton(int i, long long max_len);

// ---------------------------------------------------------------- families

struct PalindromeSets {
  Dfa palcanon;  // canonical x.x^R
  Dfa pal;       // x.x^R with x 11-free (the 11 may straddle the point)
  Dfa pal_any;   // x.x^R with x arbitrary
  Dfa shevelev;  // canonical xa.x^R
  Dfa antip;     // any x.complement(x^R)
};
const PalindromeSets& palindrome_sets();
/// True when no palindromic expansion with 11-free quantified parts has 11
/// in its left part.
bool pal_noncanonical_gap_check();
/// n <= max_n having a palindromic expansion x.x^R with 11 inside x.
std::vector<long long> pal_with_11_values(long long max_n);
/// The (n, x, y) relation behind antip, for re-deriving expansions.
const Dfa& antipalindrome_relation();

/// n-track automaton for {n : (n)_phi has exactly t ones}, 0 <= t <= 5.
const Dfa& fixed_ones_automaton(int t);

/// kappa(n): number of Knott expansions.
const CountRep& knott_count();

struct KnottGrowth {
  std::vector<Rational> s_kappa;  // s_kappa[i] for 2 <= i (0 and 1 unused)
  Poly gamma0_min_poly;           // of gamma(0) in the minimal kappa representation
  Poly sum_min_poly;              // of gamma(0) + gamma(1)
  std::vector<Factor> sum_factors;
  RootInterval zeta;
  double rho = 0;
};
/// s_kappa(i) = sum of kappa(n) over F_i <= n < F_{i+1}, for i <= max_i.
KnottGrowth knott_growth(int max_i = 41);

/// N(n): expansions whose right part is as long as the canonical one.
const CountRep& natural_count();

/// (n, x, y): the DVL expansion of n is x.y^R.
const Dfa& dvl_automaton();
std::optional<PhiExpansion> dvl_expansion(long long n);

/// (m, n) in negaFibonacci with left and right parts of (m phi + n)_phi of
/// equal nonzero length.
const Dfa& equal_length_set();

}  // namespace phirep
