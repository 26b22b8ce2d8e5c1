#include "phirep/analyses.hpp"

#include "phirep/frougny.hpp"
#include "phirep/primitives.hpp"
#include "phirep/relation.hpp"
#include "phirep/sweep.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace phirep {

namespace {

Dfa prim(Primitive p, const std::vector<std::string>& args, int t = 0) { return instantiate(primitive(p, t), args); }

// m = n + 1 on canonical Zeckendorf words.
Dfa successor(const std::string& m, const std::string& n) {
  return linear_relation({{m, NumSys::zeck, 1, 0}, {n, NumSys::zeck, -1, 0}}, 1, true);
}

// j < i on canonical Zeckendorf words.
Dfa less_than(const std::string& j, const std::string& i) {
  Dfa r = linear_relation({{i, NumSys::zeck, 1, 0}, {j, NumSys::zeck, -1, 0}, {"#d", NumSys::zeck, -1, 0}}, 1, true);
  return exists(r, {"#d"});
}

Dfa nonzero(const std::string& v) { return named_regex("0*1(0|1)*", {v}); }

CountRep count_over(const Dfa& rel, const std::string& input, const std::vector<std::string>& counted) {
  std::vector<std::string> order{input};
  order.insert(order.end(), counted.begin(), counted.end());
  std::vector<int> idx;
  for (std::size_t i = 1; i < order.size(); ++i) idx.push_back(static_cast<int>(i));
  CountRep c;
  c.raw = count_linrep(select(rel, order), idx);
  c.minimal = linrep_minimize(c.raw);
  return c;
}

CountRep from_raw(LinRep raw) {
  CountRep c;
  c.minimal = linrep_minimize(raw);
  c.raw = std::move(raw);
  return c;
}

Dfa saka_n() { return instantiate(saka(), {"n", "x", "y"}); }
Dfa frougny_n() { return instantiate(frougny(), {"n", "x", "y"}); }

// (n, t): countl / countr style relations on saka.
Dfa saka_match(const std::string& part, Primitive p) {
  return exists(conj(saka_n(), prim(p, {part, "t"})), {"x", "y"});
}

Dfa shift_back(const Dfa& rel_mt) {
  // rel over (m, t) with m = n - 1 turned into a relation over (n, t).
  return exists(conj(instantiate(rel_mt, {"m", "t"}), successor("n", "m")), {"m"});
}

}  // namespace

long long eval_at(const LinRep& a, long long n) {
  Rational r = a.eval_zeck(n);
  if (denominator(r) != 1) throw std::logic_error("eval_at: non-integer value");
  return static_cast<long long>(numerator(r));
}

bool accepts_zeck(const Dfa& a, long long n) { return accepts(a, {zeck_encode(n).str()}); }

std::vector<long long> accepted_values(const Dfa& a, long long max_n, std::size_t max_count) {
  std::vector<long long> out;
  for (long long n = 0; n <= max_n && out.size() < max_count; ++n)
    if (accepts_zeck(a, n)) out.push_back(n);
  return out;
}

Dfao indicator_dfao(const Dfa& a) {
  Dfao d;
  d.tracks = a.tracks;
  d.initial = a.initial;
  const int A = a.alphabet_size();
  const int dead = a.state_count();
  for (int q = 0; q <= dead; ++q) {
    d.output.push_back(q < dead && a.accepting[static_cast<std::size_t>(q)] ? 1 : 0);
    for (int s = 0; s < A; ++s) {
      int t = q < dead ? a.next(q, static_cast<Symbol>(s)) : dead;
      d.delta.push_back(t == kNoState ? dead : t);
    }
  }
  return minimize(d);
}

// ---------------------------------------------------------------- counts

const CountRep& left_parts_count() {
  static const CountRep c = count_over(exists(frougny_n(), {"y"}), "n", {"x"});
  return c;
}

const DigitSums& digit_sums() {
  static const DigitSums d = [] {
    DigitSums s;
    s.left = count_over(saka_match("x", Primitive::MATCH1), "n", {"t"});
    s.right = count_over(saka_match("y", Primitive::MATCH1), "n", {"t"});
    s.total = from_raw(linrep_add(s.left.minimal, s.right.minimal));
    return s;
  }();
  return d;
}

const CountRep& digit_sum_right_next() {
  static const CountRep c = [] {
    Dfa countr = saka_match("y", Primitive::MATCH1);
    Dfa next = exists(conj(instantiate(countr, {"m", "t"}), successor("m", "n")), {"m"});
    return count_over(next, "n", {"t"});
  }();
  return c;
}

const Dfao& digit_sum_right_difference() {
  static const Dfao d = [] {
    LinRep diff = linrep_minimize(linrep_sub(digit_sum_right_next().minimal, digit_sums().right.minimal));
    return linrep_to_dfao(diff);
  }();
  return d;
}

const Dfa& digit_sum_mod2() {
  static const Dfa a = exists(conj(saka_n(), prim(Primitive::SUM2, {"x", "y"})), {"x", "y"});
  return a;
}

const CountRep& length_left() {
  static const CountRep c = count_over(saka_match("x", Primitive::ONEPOS), "n", {"t"});
  return c;
}

const Dfao& length_first_difference() {
  static const Dfao d = [] {
    Dfa cur = saka_match("x", Primitive::ONEPOS);
    CountRep prev = count_over(shift_back(cur), "n", {"t"});
    LinRep diff = linrep_minimize(linrep_sub(length_left().minimal, prev.minimal));
    return linrep_to_dfao(diff);
  }();
  return d;
}

// ---------------------------------------------------------------- Gerdemann

const GerdemannResult& gerdemann() {
  static const GerdemannResult g = [] {
    GerdemannResult r;
    Dfa s = select(saka(), {"n", "x", "y"});
    WeightedAutomaton wa = weighted_by_digits(s, {-1, 1, 1});
    r.nonneg = verify_nonneg_paths(wa);
    r.zero_paths = zero_weight_subautomaton(wa);
    r.zero_set = exists(r.zero_paths, {"x", "y"});
    r.census = simple_cycle_census(wa);
    return r;
  }();
  return g;
}

// ---------------------------------------------------------------- bits

int phi_digit(long long n, long i) { return phi_canonical(n).digit(i); }

long long floor_alpha_times(long long n) {
  if (n < 0) throw std::domain_error("floor_alpha_times: negative input");
  if (n == 0) return 0;
  long long fp = static_cast<long long>(floor_phi_times(BigInt(n)));
  return (3 * n - 1 - fp) / 5;
}

int sturmian_w(long long n) { return static_cast<int>(floor_alpha_times(n + 1) - floor_alpha_times(n)); }

SequenceReport lucas_link_check(long long max_n) {
  SequenceReport r;
  r.name = "d_{-1}(n) = 1 iff two Lucas representations";
  r.oeis = "A342089";
  r.from = 0;
  r.to = max_n;
  auto bad = find_failures(0, max_n, [](long long n) {
    bool two = lucas_reps(BigInt(n)).size() == 2;
    return (phi_digit(n, -1) == 1) == two;
  });
  for (long long n : bad)
    r.discrepancies.push_back({n, std::to_string(phi_digit(n, -1)),
                               std::to_string(lucas_reps(BigInt(n)).size() == 2 ? 1 : 0), "lucas_reps"});
  return r;
}

double dm1_frequency(long long limit) {
  long long ones = count_where(0, limit - 1, [](long long n) { return phi_digit(n, -1) == 1; });
  return static_cast<double>(ones) / static_cast<double>(limit);
}

double dm1_limit_frequency() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  return 1 / (3 * phi + 1);
}

// ---------------------------------------------------------------- vertical runs

long long vertical_run_formula(int i) {
  if (i == 0) return 1;
  if (i < 0) return static_cast<long long>(lucas(-i));
  return static_cast<long long>(lucas(i - 1)) + (i % 2 == 0 ? 1 : -1);
}

namespace {

RunScan scan_runs(int i, const std::function<long long(long long)>& digit) {
  RunScan s;
  s.window = 4 * static_cast<long long>(lucas(std::abs(i) + 2));
  std::vector<long long> col = sweep_values(0, s.window - 1, digit);
  long long start = -1;
  for (long long n = 0; n < s.window; ++n) {
    long long d = col[static_cast<std::size_t>(n)];
    if (d == 1 && start < 0) start = n;
    if (d == 0 && start >= 0) {
      s.lengths.insert(n - start);
      start = -1;
    }
  }
  s.complete = !s.lengths.empty();
  return s;
}

// (n, t): t = 10^p marks a digit of the expansion held by `base` that is 1.
Dfa match_position(const Dfa& base, bool left) {
  Dfa m = conj(base, prim(Primitive::MATCH1, {left ? "x" : "y", "t"}));
  m = conj(m, prim(Primitive::ISFIB, {"t"}));
  return exists(m, {"x", "y"});
}

// (i, t): a maximal run of exactly i ones in the marked column exists.
Dfa run_length_relation(const Dfa& mf) {
  Dfa at_k = instantiate(mf, {"k", "t"});
  // Some j < i has n + j outside the column.
  Dfa bad = conj(less_than("j", "i"), sum_relation("k", "n", "j", NumSys::zeck));
  bad = exists(conj(bad, negate(at_k)), {"j", "k"});
  Dfa inside = conj(negate(bad), canonical_all({"n", "i"}));
  inside = conj(inside, nonzero("i"));
  Dfa prev = exists(conj(instantiate(mf, {"m", "t"}), successor("n", "m")), {"m"});
  Dfa after = exists(conj(at_k, sum_relation("k", "n", "i", NumSys::zeck)), {"k"});
  Dfa run = conj(conj(inside, negate(prev)), negate(after));
  run = conj(run, prim(Primitive::ISFIB, {"t"}));
  return select(exists(run, {"n"}), {"i", "t"});
}

std::set<long long> read_run_lengths(const Dfa& rel, int i, long long max_len) {
  const int p = i >= 0 ? i : -i - 1;
  const std::string t = "1" + std::string(static_cast<std::size_t>(p), '0');
  std::set<long long> out;
  for (long long len = 1; len <= max_len; ++len)
    if (accepts(rel, {zeck_encode(len).str(), t})) out.insert(len);
  return out;
}

const Dfa& run_relation(bool dvl, bool left) {
  static std::mutex mu;
  static std::map<std::pair<bool, bool>, Dfa> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(dvl, left);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Dfa base = instantiate(dvl ? dvl_automaton() : saka(), {"n", "x", "y"});
    it = cache.emplace(key, run_length_relation(match_position(base, left))).first;
  }
  return it->second;
}

}  // namespace

RunScan vertical_runs(int i) {
  return scan_runs(i, [i](long long n) -> long long { return phi_digit(n, i); });
}

std::set<long long> vertical_runs_automaton(int i, long long max_len) {
  return read_run_lengths(run_relation(false, i >= 0), i, max_len);
}

RunScan dvl_vertical_runs(int i) {
  return scan_runs(i, [i](long long n) -> long long {
    auto e = dvl_expansion(n);
    if (!e) throw std::logic_error("no DVL expansion for " + std::to_string(n));
    return e->digit(i);
  });
}

std::set<long long> dvl_vertical_runs_automaton(int i, long long max_len) {
  return read_run_lengths(run_relation(true, i >= 0), i, max_len);
}

// ---------------------------------------------------------------- families

const PalindromeSets& palindrome_sets() {
  static const PalindromeSets p = [] {
    PalindromeSets s;
    s.palcanon = exists(conj(saka_n(), prim(Primitive::EQUAL, {"x", "y"})), {"x", "y"});
    // Quantified parts range over 11-free words, as in the msd_fib quantifier.
    s.pal = exists_canon(conj(frougny_n(), prim(Primitive::EQUAL, {"x", "y"})), {"x", "y"});
    s.pal_any = exists(conj(frougny_n(), prim(Primitive::EQUAL, {"x", "y"})), {"x", "y"});
    s.shevelev = exists(conj(saka_n(), prim(Primitive::SHIFTR, {"x", "y"})), {"x", "y"});
    s.antip = exists(antipalindrome_relation(), {"x", "y"});
    return s;
  }();
  return p;
}

const Dfa& antipalindrome_relation() {
  static const Dfa a = select(conj(frougny_n(), prim(Primitive::COMPL, {"x", "y"})), {"n", "x", "y"});
  return a;
}

bool pal_noncanonical_gap_check() {
  Dfa d = conj(conj(frougny_n(), prim(Primitive::EQUAL, {"x", "y"})), prim(Primitive::HAS11, {"x"}));
  return is_empty(exists_canon(d, {"x", "y"}));
}

std::vector<long long> pal_with_11_values(long long max_n) {
  Dfa d = conj(conj(frougny_n(), prim(Primitive::EQUAL, {"x", "y"})), prim(Primitive::HAS11, {"x"}));
  return accepted_values(exists(d, {"x", "y"}), max_n);
}

const Dfa& fixed_ones_automaton(int t) {
  if (t < 0 || t > 5) throw std::invalid_argument("fixed_ones_automaton: t must be in 0..5");
  static std::mutex mu;
  static std::map<int, Dfa> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) {
    std::optional<Dfa> split;
    for (int a = 0; a <= t; ++a) {
      Dfa c = conj(prim(Primitive::HAS_T_ONES, {"x"}, a), prim(Primitive::HAS_T_ONES, {"y"}, t - a));
      split = split ? disj(*split, c) : c;
    }
    it = cache.emplace(t, exists(conj(saka_n(), *split), {"x", "y"})).first;
  }
  return it->second;
}

const CountRep& knott_count() {
  static const CountRep c = count_over(conj(frougny_n(), prim(Primitive::KNOTT_COND, {"x", "y"})), "n", {"x", "y"});
  return c;
}

KnottGrowth knott_growth(int max_i) {
  const LinRep& k = knott_count().minimal;
  KnottGrowth g;
  Matrix sum = k.gamma[0] + k.gamma[1];
  g.s_kappa.assign(static_cast<std::size_t>(std::max(max_i, 1)) + 1, 0);
  Vec row = row_times(k.v, k.gamma[1]);
  for (int i = 2; i <= max_i; ++i) {
    g.s_kappa[static_cast<std::size_t>(i)] = dot(row, k.w);
    row = row_times(row, sum);
  }
  g.gamma0_min_poly = minimal_poly(k.gamma[0]);
  g.sum_min_poly = minimal_poly(sum);
  g.sum_factors = factor_small(g.sum_min_poly);
  auto roots = real_roots(Poly({2, -2, -2, 1}), Rational(1, 1000000000000000000LL));
  g.zeta = roots.back();
  const double phi = (1 + std::sqrt(5.0)) / 2;
  g.rho = g.zeta.approx() / phi;
  return g;
}

const CountRep& natural_count() {
  static const CountRep c = [] {
    Dfa canon = instantiate(saka(), {"n", "w", "x"});
    Dfa any = instantiate(frougny(), {"n", "y", "z"});
    // Right parts of equal length: leading 1's of the reversed parts align,
    // or both parts are empty.
    Dfa same = disj(prim(Primitive::FIRST1MATCH, {"x", "z"}), named_regex("[0,0]*", {"x", "z"}));
    Dfa rel = exists(conj(conj(canon, any), same), {"w", "x"});
    return count_over(rel, "n", {"y", "z"});
  }();
  return c;
}

const Dfa& dvl_automaton() {
  static const Dfa a = select(conj(frougny_n(), prim(Primitive::DVL_COND, {"x", "y"})), {"n", "x", "y"});
  return a;
}

std::optional<PhiExpansion> dvl_expansion(long long n) {
  auto c = find_completion(dvl_automaton(), {0}, {zeck_encode(n).str()}, 4);
  if (!c) return std::nullopt;
  return PhiExpansion::from_folded((*c)[0], (*c)[1]).normalized();
}

const Dfa& equal_length_set() {
  static const Dfa a = [] {
    Dfa c = instantiate(canfrou(), {"m", "n", "x", "y"});
    return select(exists(conj(c, prim(Primitive::FIRST1MATCH, {"x", "y"})), {"x", "y"}), {"m", "n"});
  }();
  return a;
}

}  // namespace phirep
