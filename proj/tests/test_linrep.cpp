#include "phirep/analyses.hpp"
#include "phirep/linrep.hpp"
#include "phirep/primitives.hpp"
#include "phirep/zphi.hpp"

#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

using namespace phirep;

namespace {

std::vector<Word> words_1(int max_len) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i)
    if (static_cast<int>(out[i].size()) < max_len)
      for (Symbol a : {0u, 1u}) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(w);
      }
  return out;
}

// Number of binary words without leading zeros whose Zeckendorf-weighted
// value is n.
std::map<long long, long long> zeck_weight_counts(int max_len) {
  std::map<long long, long long> c;
  c[0] = 1;  // the empty word
  for (int len = 1; len <= max_len; ++len)
    for (unsigned v = 1u << (len - 1); v < (1u << len); ++v) {
      std::string s;
      for (int j = len - 1; j >= 0; --j) s += static_cast<char>('0' + ((v >> j) & 1));
      ++c[static_cast<long long>(zeck_eval(BitWord(s)))];
    }
  return c;
}

LinRep load(const std::string& name) {
  std::ifstream in(std::string(PHIREP_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  return read_linrep(in);
}

}  // namespace

TEST_CASE("counting completions against direct enumeration") {
  // For canonical y, the number of words x with the same value.
  LinRep raw = count_linrep(primitive(Primitive::FIBNORM), {0});
  LinRep m = linrep_minimize(raw);
  auto want = zeck_weight_counts(16);
  // Words of length 16 reach at least F_17 = 1597, so counts up to 600 are complete.
  for (long long n = 0; n <= 600; ++n) {
    long long got = eval_at(m, n);
    CHECK(got == want[n]);
    CHECK(raw.eval_zeck(n) == m.eval_zeck(n));
  }
}

TEST_CASE("minimization preserves every value and is idempotent") {
  const CountRep& p = left_parts_count();
  for (const auto& w : words_1(11)) CHECK(p.raw.eval(w) == p.minimal.eval(w));
  LinRep again = linrep_minimize(p.minimal);
  CHECK(again.rank() == p.minimal.rank());
  LinRep doubled = linrep_minimize(linrep_add(p.minimal, p.minimal));
  CHECK(doubled.rank() == p.minimal.rank());
  CHECK(linrep_minimize(linrep_sub(p.minimal, p.minimal)).rank() == 0);
  LinRep tripled = linrep_scale(p.minimal, Rational(3));
  for (long long n = 0; n <= 200; ++n) {
    CHECK(tripled.eval_zeck(n) == 3 * p.minimal.eval_zeck(n));
    CHECK(doubled.eval_zeck(n) == 2 * p.minimal.eval_zeck(n));
  }
}

TEST_CASE("semigroup construction yields the indicator automaton") {
  Dfa has11 = primitive(Primitive::HAS11);
  LinRep ind = count_linrep(has11, {});
  Dfao d = linrep_to_dfao(ind);
  for (const auto& w : words_1(10)) CHECK(d.eval(w) == (accepts(has11, w) ? 1 : 0));
  CHECK_THROWS_AS(linrep_to_dfao(left_parts_count().minimal, 50), NotAutomaticError);
}

TEST_CASE("text form round trips") {
  const CountRep& l = length_left();
  std::stringstream ss;
  write_linrep(ss, l.minimal);
  LinRep back = read_linrep(ss);
  CHECK(back.v == l.minimal.v);
  CHECK(back.w == l.minimal.w);
  CHECK(back.gamma == l.minimal.gamma);
  std::stringstream bad("rank 2\nv\n1 0\nw\n1\n");
  CHECK_THROWS(read_linrep(bad));
}

TEST_CASE("reference representations compute the same functions") {
  LinRep ell = load("ell_rank9.linrep");
  LinRep sl = load("sl_rank19.linrep");
  CHECK(ell.rank() == 9);
  CHECK(sl.rank() == 19);
  for (long long n = 0; n <= 3000; ++n) {
    PhiExpansion e = phi_canonical(n);
    CHECK(ell.eval_zeck(n) == static_cast<long long>(e.left_length()));
    CHECK(sl.eval_zeck(n) == e.left.count_ones());
  }
  CHECK(linrep_minimize(linrep_sub(ell, length_left().minimal)).rank() == 0);
  CHECK(linrep_minimize(linrep_sub(sl, digit_sums().left.minimal)).rank() == 0);
}
