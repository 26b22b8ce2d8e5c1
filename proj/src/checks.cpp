#include "phirep/checks.hpp"

#include "phirep/analyses.hpp"
#include "phirep/frougny.hpp"
#include "phirep/sweep.hpp"
#include "phirep/zphi.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace phirep {

namespace reference {
const std::vector<std::string> small_expansions = {"1.", "10.01", "100.01", "101.01", "1000.1001", "1010.0001", "10000.0001"};
const std::vector<long long> left_parts = {1, 2, 2, 3, 3, 3, 3, 4, 5, 4, 5, 4, 4, 5, 6, 6, 5, 4, 5, 7};
const std::vector<long long> left_digit_sum = {0, 1, 1, 1, 2, 1, 2, 1, 2, 2, 2, 3, 1, 2, 2, 3, 2, 3, 1, 2};
const std::vector<long long> left_length = {0, 1, 2, 3, 3, 4, 4, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 7, 7};
const std::vector<long long> palcanon = {2, 14, 36, 38, 94, 96, 246, 248, 260};
const std::vector<long long> pal = {2, 6, 14, 36, 38, 94, 96, 100, 246, 248, 252, 260};
const std::vector<long long> shevelev = {0, 1, 3, 4, 7, 8, 10, 11, 18, 19, 21, 22, 25, 26, 28, 29, 47};
const std::vector<long long> antip = {1,  3,  4,  5,  6,  8,  11, 13, 14, 15, 16,
                                      21, 23, 29, 31, 33, 35, 37, 39, 41, 43, 45};
}  // namespace reference

namespace {

constexpr std::size_t kMaxReported = 20;

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Sweeps [from, to] in parallel and records the first failures in order.
void sweep(CheckResult& r, long long from, long long to, const std::function<std::string(long long)>& test) {
  if (to < from) return;
  std::vector<std::string> msg = [&] {
    std::vector<std::string> out(static_cast<std::size_t>(to - from + 1));
    auto bad = find_failures(from, to, [&](long long n) {
      std::string m = test(n);
      if (m.empty()) return true;
      out[static_cast<std::size_t>(n - from)] = std::move(m);
      return false;
    }, kMaxReported);
    std::vector<std::string> sel;
    for (long long n : bad) sel.push_back("n=" + std::to_string(n) + ": " + out[static_cast<std::size_t>(n - from)]);
    return sel;
  }();
  r.cases += static_cast<std::size_t>(to - from + 1);
  for (auto& m : msg) r.fail(std::move(m));
}

// Smallest L with phi^(L-1) > n, so every expansion of n has a left part
// of at most L digits.
int left_bound(long long n) {
  int L = 1;
  while (PhiInt::power(L - 1) <= PhiInt::integer(n)) ++L;
  return L;
}

std::set<std::string> left_parts_of(const std::vector<PhiExpansion>& reps) {
  std::set<std::string> s;
  for (const auto& e : reps) s.insert(e.left.strip_leading().str());
  return s;
}

LinRep counted(const Dfa& a, std::vector<int> tracks) { return linrep_minimize(count_linrep(a, tracks)); }

long long eval_int(const LinRep& a, const Word& w) {
  Rational r = a.eval(w);
  if (denominator(r) != 1) throw std::logic_error("non-integer count");
  return static_cast<long long>(numerator(r));
}

}  // namespace

void CheckResult::fail(std::string what) {
  if (failures.size() < kMaxReported) failures.push_back(std::move(what));
  else if (failures.size() == kMaxReported) failures.push_back("...");
}

bool CheckResult::expect(bool good, const std::string& what) {
  ++cases;
  if (!good) fail(what);
  return good;
}

// ---------------------------------------------------------------- checks

CheckResult check_small_values() {
  CheckResult r{.name = "small-values"};
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> got;
  for (long long n = 1; n <= 7; ++n) got.push_back(phi_canonical(n).to_string());
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  for (std::size_t i = 0; i < got.size(); ++i)
    r.expect(got[i] == reference::small_expansions[i],
             "n=" + std::to_string(i + 1) + ": got " + got[i] + ", expected " + reference::small_expansions[i]);
  r.notes.push_back("7 rows in " + str(ms) + " ms");
  if (ms >= 1.0) r.warnings.push_back("small-values took " + str(ms) + " ms");
  return r;
}

CheckResult check_saka_oracle(long long max_n) {
  CheckResult r{.name = "saka-oracle", .max = max_n};
  static const LinRep count = counted(saka(), {1, 2});
  r.notes.push_back("completions counted by a rank-" + std::to_string(count.rank()) + " representation");
  eval_int(count, make_word({"0"}));
  sweep(r, 0, max_n, [&](long long n) -> std::string {
    PhiExpansion e = phi_canonical(n);
    auto [x, y] = e.folded();
    std::string z = zeck_encode(n).str();
    std::size_t len = std::max({x.size(), z.size()});
    Word w = make_word({std::string(len - z.size(), '0') + z, std::string(len - x.size(), '0') + x,
                        std::string(len - y.size(), '0') + y});
    if (!accepts(saka(), w)) return "folded canonical expansion " + e.to_string() + " rejected";
    long long c = eval_int(count, make_word({z}));
    if (c != 1) return std::to_string(c) + " accepted expansions";
    return {};
  });
  return r;
}

CheckResult check_frougny_oracle(long long max_n, int bound) {
  CheckResult r{.name = "frougny-oracle", .max = max_n};
  const Dfa& f = frougny();
  if (zeck_encode(max_n).size() > static_cast<std::size_t>(bound)) {
    r.fail("max " + std::to_string(max_n) + " does not fit in " + std::to_string(bound) + " digits");
    return r;
  }
  sweep(r, 0, max_n, [&](long long n) -> std::string {
    BitWord z = zeck_encode(n).padded(static_cast<std::size_t>(bound));
    // Paths of length `bound` with the n track fixed.
    std::vector<long long> cnt(static_cast<std::size_t>(f.state_count()), 0), next(cnt.size());
    cnt[static_cast<std::size_t>(f.initial)] = 1;
    for (std::size_t i = 0; i < z.size(); ++i) {
      std::fill(next.begin(), next.end(), 0);
      for (int q = 0; q < f.state_count(); ++q) {
        long long c = cnt[static_cast<std::size_t>(q)];
        if (!c) continue;
        for (int xd = 0; xd < 2; ++xd)
          for (int yd = 0; yd < 2; ++yd) {
            int t = f.next(q, encode_symbol({z[i], xd, yd}));
            if (t != kNoState) next[static_cast<std::size_t>(t)] += c;
          }
      }
      std::swap(cnt, next);
    }
    long long accepted = 0;
    for (int q = 0; q < f.state_count(); ++q)
      if (f.accepting[static_cast<std::size_t>(q)]) accepted += cnt[static_cast<std::size_t>(q)];
    auto reps = enumerate_phi_reps(n, bound, bound, filters::any());
    if (static_cast<long long>(reps.size()) != accepted)
      return "automaton accepts " + std::to_string(accepted) + " words, enumeration finds " +
             std::to_string(reps.size());
    for (const auto& e : reps) {
      auto [x, y] = e.folded(static_cast<std::size_t>(bound));
      if (!accepts(f, {z.str(), x, y})) return "expansion " + e.to_string() + " rejected";
    }
    return {};
  });
  r.notes.push_back("bounds (" + std::to_string(bound) + "," + std::to_string(bound) + ")");
  return r;
}

CheckResult check_left_parts(long long max_n) {
  CheckResult r{.name = "leftparts", .max = max_n};
  const CountRep& p = left_parts_count();
  r.notes.push_back("rank " + std::to_string(p.raw.rank()) + " -> " + std::to_string(p.minimal.rank()));
  if (p.minimal.rank() != 28) r.warnings.push_back("minimal rank " + std::to_string(p.minimal.rank()) + ", expected 28");
  for (std::size_t n = 0; n < reference::left_parts.size(); ++n)
    r.expect(eval_at(p.minimal, static_cast<long long>(n)) == reference::left_parts[n],
             "p(" + std::to_string(n) + ") differs from the reference values");
  sweep(r, 0, max_n, [&](long long n) -> std::string {
    int L = left_bound(n);
    auto a = left_parts_of(enumerate_phi_reps(n, L, 18, filters::any()));
    auto b = left_parts_of(enumerate_phi_reps(n, L, 22, filters::any()));
    if (a != b) return "brute force not saturated";
    long long got = eval_at(p.minimal, n);
    if (got != static_cast<long long>(a.size()))
      return "p = " + std::to_string(got) + ", brute force " + std::to_string(a.size());
    if (got != eval_at(p.raw, n)) return "minimized representation differs";
    return {};
  });
  return r;
}

CheckResult check_gerdemann(long long max_n) {
  CheckResult r{.name = "gerdemann", .max = max_n};
  const GerdemannResult& g = gerdemann();
  r.expect(g.nonneg, "a path of negative weight exists");
  sweep(r, 0, max_n, [](long long n) -> std::string {
    int zf = zeck_encode(n).count_ones();
    int zp = phi_canonical(n).count_ones();
    if (zf > zp) return std::to_string(zf) + " Zeckendorf ones > " + std::to_string(zp) + " base-phi ones";
    return {};
  });
  sweep(r, 0, std::min<long long>(max_n, 10000), [&](long long n) -> std::string {
    bool eq = zeck_encode(n).count_ones() == phi_canonical(n).count_ones();
    if (accepts_zeck(g.zero_set, n) != eq) return eq ? "equality case rejected" : "accepted without equality";
    return {};
  });
  r.notes.push_back("zero-weight automaton: " + std::to_string(g.zero_set.state_count()) + " states");
  r.notes.push_back("simple cycles " + std::to_string(g.census.cycles) + ", weight 0: " +
                    std::to_string(g.census.zero_weight) + " (" + std::to_string(g.census.zero_weight_rooted) +
                    " by starting state)");
  return r;
}

CheckResult check_digit_sums(long long max_n) {
  CheckResult r{.name = "digit-sums", .max = max_n};
  const DigitSums& d = digit_sums();
  const std::pair<const char*, const CountRep*> reps[] = {{"s_L", &d.left}, {"s_R", &d.right}, {"s", &d.total}};
  const int expected[] = {19, 21, 21};
  for (int k = 0; k < 3; ++k) {
    int rank = reps[k].second->minimal.rank();
    r.notes.push_back(std::string(reps[k].first) + " rank " + std::to_string(reps[k].second->raw.rank()) + " -> " +
                      std::to_string(rank));
    if (rank != expected[k])
      r.warnings.push_back(std::string(reps[k].first) + " minimal rank " + std::to_string(rank) + ", expected " +
                           std::to_string(expected[k]));
  }
  for (std::size_t n = 0; n < reference::left_digit_sum.size(); ++n)
    r.expect(eval_at(d.left.minimal, static_cast<long long>(n)) == reference::left_digit_sum[n],
             "s_L(" + std::to_string(n) + ") differs from the reference values");
  sweep(r, 0, std::min<long long>(max_n, 3000), [&](long long n) -> std::string {
    PhiExpansion e = phi_canonical(n);
    long long l = e.left.count_ones(), rt = e.right.count_ones();
    if (eval_at(d.left.minimal, n) != l) return "s_L mismatch";
    if (eval_at(d.right.minimal, n) != rt) return "s_R mismatch";
    if (eval_at(d.total.minimal, n) != l + rt) return "s mismatch";
    if (eval_at(digit_sum_right_next().minimal, n) != phi_canonical(n + 1).right.count_ones())
      return "s_R(n+1) mismatch";
    if (accepts_zeck(digit_sum_mod2(), n) != ((l + rt) % 2 == 1)) return "parity mismatch";
    return {};
  });
  const Dfao& diff = digit_sum_right_difference();
  for (long long o : diff.output) r.expect(o >= -1 && o <= 1, "d(n) output " + std::to_string(o) + " outside {-1,0,1}");
  sweep(r, 0, max_n, [&](long long n) -> std::string {
    long long want = phi_canonical(n + 1).right.count_ones() - phi_canonical(n).right.count_ones();
    long long got = diff.eval(make_word({zeck_encode(n).str()}));
    if (got != want) return "d(n) = " + std::to_string(got) + ", direct " + std::to_string(want);
    return {};
  });
  r.notes.push_back("d(n) automaton: " + std::to_string(diff.state_count()) + " states; parity automaton: " +
                    std::to_string(digit_sum_mod2().state_count()) + " states");
  return r;
}

CheckResult check_length(long long max_n) {
  CheckResult r{.name = "length", .max = max_n};
  const CountRep& l = length_left();
  r.notes.push_back("rank " + std::to_string(l.raw.rank()) + " -> " + std::to_string(l.minimal.rank()));
  if (l.minimal.rank() != 9) r.warnings.push_back("minimal rank " + std::to_string(l.minimal.rank()) + ", expected 9");
  for (std::size_t n = 0; n < reference::left_length.size(); ++n)
    r.expect(eval_at(l.minimal, static_cast<long long>(n)) == reference::left_length[n],
             "ell(" + std::to_string(n) + ") differs from the reference values");
  sweep(r, 0, std::min<long long>(max_n, 10000), [&](long long n) -> std::string {
    long long want = static_cast<long long>(phi_canonical(n).left_length());
    if (eval_at(l.minimal, n) != want) return "ell mismatch";
    return {};
  });
  std::set<long long> expected{1};
  for (long long i = 0; lucas(2 * i) <= max_n; ++i) expected.insert(static_cast<long long>(lucas(2 * i)));
  for (long long i = 1; lucas(2 * i - 1) + 1 <= max_n; ++i) expected.insert(static_cast<long long>(lucas(2 * i - 1) + 1));
  const Dfao& diff = length_first_difference();
  sweep(r, 0, max_n, [&](long long n) -> std::string {
    long long direct = static_cast<long long>(phi_canonical(n).left_length()) -
                       (n ? static_cast<long long>(phi_canonical(n - 1).left_length()) : 0);
    long long got = diff.eval(make_word({zeck_encode(n).str()}));
    if (got != direct) return "first difference " + std::to_string(got) + ", direct " + std::to_string(direct);
    if ((got == 1) != expected.count(n)) return "increment set disagrees with the Lucas description";
    return {};
  });
  return r;
}

CheckResult check_bits(long long max_n) {
  CheckResult r{.name = "bits", .max = max_n};
  sweep(r, 0, max_n, [](long long n) -> std::string {
    if (n >= 1 && phi_digit(n + 1, 0) != sturmian_w(n)) return "d0(n+1) != w(n)";
    if (phi_digit(n, 1) != sturmian_w(n + 1)) return "d1(n) != w(n+1)";
    return {};
  });
  SequenceReport lucas = lucas_link_check(max_n);
  r.cases += static_cast<std::size_t>(max_n + 1);
  for (const auto& d : lucas.discrepancies)
    r.fail("n=" + std::to_string(d.n) + ": d_-1 = " + d.computed + ", two Lucas representations = " + d.expected);
  const long long limit = std::max<long long>(100000, max_n);
  double f = dm1_frequency(limit);
  r.expect(std::abs(f - 0.17082) <= 0.002, "frequency of d_-1 = 1 is " + str(f));
  r.notes.push_back("frequency of d_-1 = 1 below " + std::to_string(limit) + ": " + str(f) + " (limit " +
                    str(dm1_limit_frequency()) + ")");
  return r;
}

CheckResult check_vertical_runs(int max_abs_i) {
  CheckResult r{.name = "vertical-runs", .max = max_abs_i};
  for (int i = -max_abs_i; i <= max_abs_i; ++i) {
    RunScan s = vertical_runs(i);
    std::set<long long> want{vertical_run_formula(i)};
    std::ostringstream got;
    for (long long v : s.lengths) got << v << ' ';
    r.expect(s.complete && s.lengths == want,
             "i=" + std::to_string(i) + ": runs {" + got.str() + "}, formula " + std::to_string(*want.begin()));
  }
  for (int i = -3; i <= 5 && i <= max_abs_i; ++i) {
    auto a = vertical_runs_automaton(i, 64);
    r.expect(a == vertical_runs(i).lengths, "i=" + std::to_string(i) + ": automaton run lengths differ from scan");
  }
  return r;
}

CheckResult check_palindromes() {
  CheckResult r{.name = "palindromes"};
  const PalindromeSets& s = palindrome_sets();
  auto prefix = [&](const char* name, const Dfa& a, const std::vector<long long>& want, bool skip_zero) {
    std::vector<long long> got;
    for (long long n = skip_zero ? 1 : 0; got.size() < want.size() && n <= 100000; ++n)
      if (accepts_zeck(a, n)) got.push_back(n);
    r.expect(got == want, std::string(name) + ": got " + join(got) + ", expected " + join(want));
    r.notes.push_back(std::string(name) + ": " + std::to_string(a.state_count()) + " states");
  };
  prefix("palcanon", s.palcanon, reference::palcanon, true);
  prefix("pal", s.pal, reference::pal, true);
  prefix("shevelev", s.shevelev, reference::shevelev, false);
  prefix("antip", s.antip, reference::antip, true);
  r.expect(pal_noncanonical_gap_check(), "a palindromic expansion with 11 in the left part exists");
  auto extra = pal_with_11_values(100);
  r.notes.push_back("with unrestricted parts, 11 inside x occurs for n = " + join(extra) + " ...");
  // Against enumeration: x.x^R with x free of 11, and the canonical case.
  for (long long n = 1; n <= 300; ++n) {
    int L = left_bound(n);
    bool found = false;
    for (const auto& e : enumerate_phi_reps(n, L, L, filters::any())) {
      std::string x = e.left.strip_leading().str(), y = e.right.strip_trailing().str();
      if (!e.left.has_11() && y == std::string(x.rbegin(), x.rend())) found = true;
    }
    PhiExpansion c = phi_canonical(n);
    std::string x = c.left.strip_leading().str(), y = c.right.strip_trailing().str();
    bool canon = y == std::string(x.rbegin(), x.rend());
    r.expect(accepts_zeck(s.palcanon, n) == canon, "palcanon membership of " + std::to_string(n));
    r.expect(accepts_zeck(s.pal, n) == found, "pal membership of " + std::to_string(n));
  }
  return r;
}

CheckResult check_fixed_ones(long long max_n) {
  CheckResult r{.name = "fixed-ones", .max = max_n};
  const int expected[] = {0, 0, 6, 9, 24, 46};
  for (int t = 0; t <= 5; ++t) {
    const Dfa& a = fixed_ones_automaton(t);
    r.notes.push_back("t=" + std::to_string(t) + ": " + std::to_string(a.state_count()) + " states");
    if (t >= 2 && a.state_count() != expected[t])
      r.warnings.push_back("t=" + std::to_string(t) + ": " + std::to_string(a.state_count()) + " states, expected " +
                           std::to_string(expected[t]));
  }
  sweep(r, 0, max_n, [](long long n) -> std::string {
    int ones = phi_canonical(n).count_ones();
    for (int t = 0; t <= 5; ++t)
      if (accepts_zeck(fixed_ones_automaton(t), n) != (ones == t)) return "t=" + std::to_string(t) + " disagrees";
    return {};
  });
  return r;
}

CheckResult check_knott(long long max_n) {
  CheckResult r{.name = "knott", .max = max_n};
  const CountRep& k = knott_count();
  r.notes.push_back("rank " + std::to_string(k.raw.rank()) + " -> " + std::to_string(k.minimal.rank()));
  sweep(r, 0, max_n, [&](long long n) -> std::string {
    auto s = enumerate_phi_reps_saturated(n, left_bound(n), 18, filters::knott());
    if (!s.saturated) return "brute force not saturated";
    long long got = eval_at(k.minimal, n);
    if (got != static_cast<long long>(s.reps.size()))
      return "kappa = " + std::to_string(got) + ", brute force " + std::to_string(s.reps.size());
    return {};
  });
  for (int j = 1; j <= 20; ++j) {
    long long F = static_cast<long long>(fib(j)), L = static_cast<long long>(lucas(j));
    r.expect(eval_at(k.minimal, F) == F, "kappa(F_" + std::to_string(j) + ") != F_" + std::to_string(j));
    r.expect(eval_at(k.minimal, L) == (j % 2 ? j : j + 1), "kappa(L_" + std::to_string(j) + ") wrong");
  }
  for (int n = 4; n <= 20; ++n)
    r.expect(eval_at(k.minimal, 3 * static_cast<long long>(fib(n))) ==
                 static_cast<long long>(fib(n + 2) - fib(n - 4)),
             "kappa(3F_" + std::to_string(n) + ") wrong");
  KnottGrowth g = knott_growth(41);
  const Poly cubic({Rational(2), Rational(-2), Rational(-2), Rational(1)});
  r.expect(divides(cubic, g.sum_min_poly), "X^3-2X^2-2X+2 does not divide the minimal polynomial");
  double zeta = g.zeta.approx();
  r.expect(std::abs(zeta - 2.4811943040920156) <= 1e-12, "zeta = " + str(zeta));
  double ratio = (g.s_kappa[41] / g.s_kappa[40]).convert_to<double>();
  r.expect(std::abs(ratio - zeta) <= 1e-6, "s(41)/s(40) = " + str(ratio));
  std::ostringstream os;
  os << std::setprecision(17) << "zeta " << zeta << ", rho " << std::setprecision(12) << g.rho << ", s(41)/s(40) "
     << ratio;
  r.notes.push_back(os.str());
  r.notes.push_back("minimal polynomial of gamma(0): " + factors_to_string(factor_small(g.gamma0_min_poly)));
  r.notes.push_back("minimal polynomial of gamma(0)+gamma(1): degree " + std::to_string(g.sum_min_poly.degree()) + ", " +
                    factors_to_string(g.sum_factors));
  return r;
}

CheckResult check_natural(int max_index) {
  CheckResult r{.name = "natural", .max = max_index};
  const CountRep& nat = natural_count();
  r.notes.push_back("rank " + std::to_string(nat.raw.rank()) + " -> " + std::to_string(nat.minimal.rank()));
  auto brute = [](long long m) {
    auto reps = enumerate_phi_reps(m, left_bound(m), static_cast<int>(phi_canonical(m).right_length()),
                                   filters::natural(m));
    return static_cast<long long>(reps.size());
  };
  auto value = [&](long long m, long long want, const std::string& what, bool cross) {
    long long got = eval_at(nat.minimal, m);
    r.expect(got == want, what + " = " + std::to_string(got) + ", expected " + std::to_string(want));
    if (cross) r.expect(brute(m) == got, what + ": brute force " + std::to_string(brute(m)));
  };
  for (int n = 0; n <= max_index; ++n) {
    long long f1 = static_cast<long long>(fib(2 * n + 1)), f2 = static_cast<long long>(fib(2 * n + 2));
    value(f1, f1, "N(F_" + std::to_string(2 * n + 1) + ")", n < 5);
    value(f2, f1, "N(F_" + std::to_string(2 * n + 2) + ")", n < 5);
    value(static_cast<long long>(lucas(2 * n + 1)), 1, "N(L_" + std::to_string(2 * n + 1) + ")", n < 5);
    if (n >= 1) value(static_cast<long long>(lucas(2 * n)), 2 * n, "N(L_" + std::to_string(2 * n) + ")", n <= 5);
  }
  sweep(r, 0, 200, [&](long long m) -> std::string {
    long long got = eval_at(nat.minimal, m), want = brute(m);
    if (got != want) return "N = " + std::to_string(got) + ", brute force " + std::to_string(want);
    return {};
  });
  return r;
}

CheckResult check_dvl(long long max_n) {
  CheckResult r{.name = "dvl", .max = max_n};
  static const LinRep count = counted(dvl_automaton(), {1, 2});
  r.notes.push_back("DVL automaton: " + std::to_string(dvl_automaton().state_count()) + " states");
  eval_int(count, make_word({"0"}));
  std::set<long long> beatty;
  for (long long m = 1;; ++m) {
    // floor((phi+2)m) = floor(phi m) + 2m, exactly.
    long long b = static_cast<long long>(floor_phi_times(BigInt(m))) + 2 * m;
    if (b > max_n) break;
    beatty.insert(b);
  }
  sweep(r, 0, max_n, [&](long long n) -> std::string {
    long long c = eval_int(count, make_word({zeck_encode(n).str()}));
    if (c != 1) return std::to_string(c) + " DVL expansions accepted";
    auto e = dvl_expansion(n);
    if (!e) return "no completion found";
    if (!is_dvl(*e)) return e->to_string() + " violates the DVL rule";
    if (phi_eval(*e) != PhiInt::integer(n)) return e->to_string() + " has the wrong value";
    if ((*e != phi_canonical(n)) != (beatty.count(n) == 1)) return "differs-from-canonical set mismatch";
    if (n <= 300) {
      auto reps = enumerate_phi_reps_saturated(n, left_bound(n), 18, filters::dvl());
      if (!reps.saturated || reps.reps.size() != 1 || reps.reps[0] != *e) return "brute force disagrees";
    }
    return {};
  });
  return r;
}

CheckResult check_zphi(long long bound) {
  CheckResult r{.name = "zphi", .max = bound};
  static const LinRep count = [] {
    LinRep c = count_linrep(canfrou(), {2, 3});
    return linrep_minimize(c);
  }();
  r.notes.push_back("canfrou: " + std::to_string(canfrou().state_count()) + " states");
  const Dfa& eq = equal_length_set();
  eval_int(count, make_word({"0", "0"}));
  const long long side = 2 * bound + 1;
  sweep(r, 0, side * side - 1, [&](long long idx) -> std::string {
    long long m = idx / side - bound, n = idx % side - bound;
    PhiInt z(m, n);
    std::string tag = "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + "): ";
    std::string ms = negafib_encode(m).str(), ns = negafib_encode(n).str();
    long long c = eval_int(count, make_word({ms, ns}));
    if (z.sign() < 0) return c == 0 ? std::string() : tag + "negative value accepted";
    if (c != 1) return tag + std::to_string(c) + " expansions accepted";
    PhiExpansion want = phi_canonical(z);
    auto got = phi_rep_via_automaton(m, n);
    if (!got || *got != want) return tag + "automaton expansion differs from " + want.to_string();
    bool same = want.left_length() == want.right_length() && want.left_length() > 0;
    if (accepts(eq, {ms, ns}) != same) return tag + "equal-length set disagrees";
    return {};
  });
  return r;
}

CheckResult check_state_counts() {
  CheckResult r{.name = "state-counts"};
  const std::pair<const char*, std::pair<int, int>> rows[] = {
      {"frougny", {frougny().state_count(), 116}},
      {"saka", {saka().state_count(), 39}},
      {"genfrou", {genfrou().state_count(), 536}},
      {"canfrou", {canfrou().state_count(), 259}},
  };
  for (const auto& [name, c] : rows) {
    r.notes.push_back(std::string(name) + ": " + std::to_string(c.first) + " live states (expected " +
                      std::to_string(c.second) + ")");
    if (c.first != c.second)
      r.warnings.push_back(std::string(name) + " has " + std::to_string(c.first) + " live states, expected " +
                           std::to_string(c.second));
  }
  r.cases = 4;
  return r;
}

// ---------------------------------------------------------------- registry

const std::vector<CheckInfo>& checks() {
  static const std::vector<CheckInfo> all = {
      {"small-values", "canonical expansions of 1..7", 0, [](long long) { return check_small_values(); }},
      {"saka-oracle", "saka accepts exactly the canonical expansion", 5000, check_saka_oracle},
      {"frougny-oracle", "frougny accepts exactly the enumerated expansions", 1000,
       [](long long m) { return check_frougny_oracle(m); }},
      {"leftparts", "p(n) against enumeration and reference values", 300, check_left_parts},
      {"gerdemann", "Zeckendorf never uses more ones than base phi", 100000, check_gerdemann},
      {"digit-sums", "s_L, s_R, s, parity and d(n)", 100000, check_digit_sums},
      {"length", "ell(n) and its first difference", 100000, check_length},
      {"bits", "digits d_0, d_1, d_-1 against w(n) and Lucas representations", 10000, check_bits},
      {"vertical-runs", "vertical run lengths for |i| <= max", 12,
       [](long long m) { return check_vertical_runs(static_cast<int>(m)); }},
      {"palindromes", "palindromic and antipalindromic sets", 0, [](long long) { return check_palindromes(); }},
      {"fixed-ones", "automata for a fixed number of ones", 1000, check_fixed_ones},
      {"knott", "Knott expansion counts", 300, check_knott},
      {"natural", "natural expansion counts", 10,
       [](long long m) { return check_natural(static_cast<int>(m)); }},
      {"dvl", "DVL expansions", 2000, check_dvl},
      {"zphi", "canonical expansions of m phi + n with |m|,|n| <= max", 60, check_zphi},
      {"state-counts", "automaton sizes against reference sizes", 0, [](long long) { return check_state_counts(); }},
  };
  return all;
}

const CheckInfo* find_check(const std::string& name) {
  for (const auto& c : checks())
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace phirep
