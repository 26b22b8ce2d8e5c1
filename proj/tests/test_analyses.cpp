#include "phirep/analyses.hpp"

#include <doctest.h>

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <cmath>

using namespace phirep;

namespace {

std::vector<long long> brute_values(long long max_n, const std::function<bool(long long)>& pred) {
  std::vector<long long> out;
  for (long long n = 0; n <= max_n; ++n)
    if (pred(n)) out.push_back(n);
  return out;
}

}  // namespace

TEST_CASE("floor(n alpha) against integer square roots") {
  for (long long n = 1; n <= 50000; ++n) {
    BigInt s = boost::multiprecision::sqrt(BigInt(5) * n * n);
    CHECK(BigInt(floor_alpha_times(n)) == (BigInt(5) * n - s - 1) / 10);
  }
  CHECK(floor_alpha_times(0) == 0);
  CHECK_THROWS_AS(floor_alpha_times(-1), std::domain_error);
}

TEST_CASE("the Sturmian word against floating point") {
  const long double alpha = (5.0L - std::sqrt(5.0L)) / 10.0L;
  for (long long n = 0; n <= 5000; ++n) {
    long long a = static_cast<long long>(std::floor((n + 1) * alpha)), b = static_cast<long long>(std::floor(n * alpha));
    CHECK(sturmian_w(n) == a - b);
  }
}

TEST_CASE("digits of canonical expansions") {
  for (long long n = 0; n <= 500; ++n) {
    PhiExpansion e = phi_canonical(n);
    for (long i = -8; i <= 8; ++i) CHECK(phi_digit(n, i) == e.digit(i));
  }
  CHECK(lucas_link_check(3000).ok());
  CHECK(std::abs(dm1_limit_frequency() - 1 / (3 * (1 + std::sqrt(5.0)) / 2 + 1)) < 1e-15);
}

TEST_CASE("fixed numbers of ones") {
  auto two = accepted_values(fixed_ones_automaton(2), 200);
  CHECK(two == std::vector<long long>{2, 3, 7, 18, 47, 123});
  CHECK(accepted_values(fixed_ones_automaton(0), 1000) == std::vector<long long>{0});
  for (int t = 1; t <= 5; ++t)
    CHECK(accepted_values(fixed_ones_automaton(t), 400) ==
          brute_values(400, [t](long long n) { return phi_canonical(n).count_ones() == t; }));
  CHECK_THROWS_AS(fixed_ones_automaton(6), std::invalid_argument);
}

TEST_CASE("vertical run formula") {
  CHECK(vertical_run_formula(0) == 1);
  CHECK(vertical_run_formula(-1) == 1);
  CHECK(vertical_run_formula(-2) == 3);
  CHECK(vertical_run_formula(-5) == 11);
  CHECK(vertical_run_formula(1) == 1);
  CHECK(vertical_run_formula(2) == 2);
  CHECK(vertical_run_formula(3) == 2);
  CHECK(vertical_run_formula(4) == 5);
  for (int i = -3; i <= 4; ++i) {
    RunScan s = vertical_runs(i);
    CHECK(s.complete);
    CHECK(s.lengths.count(vertical_run_formula(i)) == 1);
  }
}

TEST_CASE("DVL expansions") {
  auto e = dvl_expansion(3);
  REQUIRE(e.has_value());
  CHECK(e->to_string() == "11.01");
  for (long long n = 0; n <= 300; ++n) {
    auto d = dvl_expansion(n);
    REQUIRE(d.has_value());
    CHECK(phi_eval(*d) == PhiInt::integer(n));
    CHECK(is_dvl(*d));
  }
}

TEST_CASE("palindromic expansions with adjacent ones") {
  auto with11 = pal_with_11_values(60);
  CHECK(std::find(with11.begin(), with11.end(), 8) != with11.end());
  auto brute = brute_values(60, [](long long n) {
    for (const auto& e : enumerate_phi_reps(n, 10, 10, filters::any())) {
      BitWord x = e.left.strip_leading();
      if (x.has_11() && e.right.strip_trailing().str() == std::string(x.str().rbegin(), x.str().rend()))
        return true;
    }
    return false;
  });
  CHECK(with11 == brute);
  CHECK(pal_noncanonical_gap_check());
}

TEST_CASE("value helpers") {
  const Dfa& pc = palindrome_sets().palcanon;
  Dfao ind = indicator_dfao(pc);
  for (long long n = 0; n <= 300; ++n)
    CHECK((ind.eval(make_word({zeck_encode(n).str()})) == 1) == accepts_zeck(pc, n));
  CHECK(eval_at(knott_count().minimal, 0) == 1);
}
