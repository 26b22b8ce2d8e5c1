#pragma once

// Named verification routines comparing the automaton-derived objects with
// direct computations on expansions. Used by `phirep verify` and the
// acceptance runner.

#include <functional>
#include <string>
#include <vector>

namespace phirep {

struct CheckResult {
  std::string name;
  long long max = 0;
  std::size_t cases = 0;
  std::vector<std::string> failures = {};  // first failures, ordered by n
  std::vector<std::string> notes = {};
  std::vector<std::string> warnings = {};

  bool ok() const { return failures.empty(); }
  void fail(std::string what);
  /// Records a comparison; returns `good`.
  bool expect(bool good, const std::string& what);
};

struct CheckInfo {
  std::string name;
  std::string description;
  long long default_max;
  std::function<CheckResult(long long max)> run;
};

const std::vector<CheckInfo>& checks();
const CheckInfo* find_check(const std::string& name);

/// Individual checks (the registry wraps these).
CheckResult check_small_values();
CheckResult check_saka_oracle(long long max_n);
CheckResult check_frougny_oracle(long long max_n, int bound = 18);
CheckResult check_left_parts(long long max_n);
CheckResult check_gerdemann(long long max_n);
CheckResult check_digit_sums(long long max_n);
CheckResult check_length(long long max_n);
CheckResult check_bits(long long max_n);
CheckResult check_vertical_runs(int max_abs_i);
CheckResult check_palindromes();
CheckResult check_fixed_ones(long long max_n);
CheckResult check_knott(long long max_n);
CheckResult check_natural(int max_index);
CheckResult check_dvl(long long max_n);
CheckResult check_zphi(long long bound);
CheckResult check_state_counts();

/// Reference data.
namespace reference {
extern const std::vector<std::string> small_expansions;      // (n)_phi for n = 1..7
extern const std::vector<long long> left_parts;     // p(0..19)
extern const std::vector<long long> left_digit_sum; // s_L(0..19)
extern const std::vector<long long> left_length;    // ell(0..19)
extern const std::vector<long long> palcanon;
extern const std::vector<long long> pal;
extern const std::vector<long long> shevelev;
extern const std::vector<long long> antip;
}  // namespace reference

}  // namespace phirep
