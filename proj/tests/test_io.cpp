#include "phirep/analyses.hpp"
#include "phirep/frougny.hpp"
#include "phirep/io.hpp"
#include "phirep/primitives.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace phirep;

namespace {

const std::string kData = PHIREP_TEST_DATA;

const char* kSmall =
    "tracks 2\n"
    "alphabets {0,1} {0,1}\n"
    "flags deterministic\n"
    "initial 0\n"
    "state 0 accept\n"
    "state 1 reject\n"
    "trans 0 0,0 0\n"
    "trans 0 1,1 1\n"
    "trans 1 0,0 0\n";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto p = s.find(from);
  REQUIRE(p != std::string::npos);
  return s.replace(p, from.size(), to);
}

}  // namespace

TEST_CASE("automaton files round trip byte for byte") {
  for (const Dfa* a : {&frougny(), &saka(), &primitive(Primitive::FIBNORM), &palindrome_sets().pal}) {
    std::string text = automaton_text(*a);
    AutomatonFile f = parse_automaton(text);
    CHECK_FALSE(f.has_output);
    CHECK(equivalent(f.dfa, *a));
    CHECK(automaton_text(f.dfa) == text);
  }
  for (const Dfao* a : {&digit_sum_right_difference(), &length_first_difference()}) {
    std::string text = automaton_text(*a);
    AutomatonFile f = parse_automaton(text);
    CHECK(f.has_output);
    CHECK(automaton_text(f.dfao) == text);
  }
}

TEST_CASE("a hand-written file parses") {
  AutomatonFile f = parse_automaton(kSmall);
  REQUIRE_FALSE(f.has_output);
  CHECK(accepts(f.dfa, std::vector<std::string>{"1010", "1010"}));
  CHECK_FALSE(accepts(f.dfa, std::vector<std::string>{"0101", "0101"}));
  CHECK_FALSE(accepts(f.dfa, std::vector<std::string>{"1", "0"}));
}

TEST_CASE("malformed automaton files are rejected") {
  const std::string s = kSmall;
  CHECK_THROWS_AS(parse_automaton(""), FormatError);
  CHECK_THROWS_AS(parse_automaton(replace(s, "tracks 2", "tracks x")), FormatError);
  CHECK_THROWS_AS(parse_automaton(replace(s, "state 1 reject", "state 0 reject")), FormatError);
  CHECK_THROWS_AS(parse_automaton(s + "trans 0 0,0 1\n"), FormatError);
  CHECK_THROWS_AS(parse_automaton(s + "trans 0 0,1 7\n"), FormatError);
  CHECK_THROWS_AS(parse_automaton(s + "trans 0 0 1\n"), FormatError);
  CHECK_THROWS_AS(parse_automaton(s + "bogus 1\n"), FormatError);
  CHECK_THROWS_AS(parse_automaton(replace(s, "flags deterministic\n", "")), FormatError);
  CHECK_THROWS_AS(parse_automaton(replace(s, "{0,1} {0,1}", "{0,1,2} {0,1}")), FormatError);
  // An automaton with output must define every transition.
  std::string out = replace(replace(replace(s, "deterministic", "deterministic output"), "accept", "output=1"),
                            "reject", "output=0");
  CHECK_THROWS_AS(parse_automaton(out), FormatError);
  try {
    parse_automaton(s + "bogus 1\n");
  } catch (const FormatError& e) {
    CHECK(e.line() == 10);
  }
}

TEST_CASE("b-file parsing") {
  std::istringstream good("# header\n\n0 1\n1 2\n5 -3\n");
  BFile b = parse_bfile(good, "A000001");
  REQUIRE(b.entries.size() == 3);
  CHECK(b.entries[2].first == 5);
  CHECK(b.entries[2].second == -3);
  std::istringstream three("0 1 2\n");
  CHECK_THROWS_AS(parse_bfile(three), FormatError);
  CHECK_THROWS_AS(load_bfile(kData + "/b_malformed.txt"), FormatError);
  CHECK_THROWS_AS(load_bfile(kData + "/b_unordered.txt"), FormatError);
  CHECK_FALSE(load_bfile(kData + "/does_not_exist.txt").has_value());
  CHECK(default_bfile_path("A362970").filename() == "b362970.txt");
}

TEST_CASE("b-file comparisons") {
  SequenceReport r = bfile_check("A362970", kData + "/b362970.txt");
  CHECK(r.ok());
  CHECK_FALSE(r.skipped);
  CHECK(bfile_check("A362970", kData + "/b_empty.txt").skipped);
  CHECK(bfile_check("A362970", kData + "/nothing_here.txt").skipped);
  // A wrong entry is reported at its index.
  const SequenceGenerator* g = find_generator("A362970");
  REQUIRE(g != nullptr);
  BFile f{"A362970", {{0, 1}, {1, 2}, {2, 5}, {3, 3}}};
  SequenceReport bad = bfile_check(*g, f);
  REQUIRE(bad.discrepancies.size() == 1);
  CHECK(bad.discrepancies[0].n == 2);
  CHECK(bfile_check(*g, f, 3, 3).ok());
}

TEST_CASE("generators agree with direct definitions") {
  const SequenceGenerator* s = find_generator("A055778");
  REQUIRE(s != nullptr);
  for (long long n = 0; n <= 200; ++n) CHECK(s->value(n) == phi_canonical(n).count_ones());
  const SequenceGenerator* sets = find_generator("A362781");
  REQUIRE(sets != nullptr);
  CHECK(sets->is_set);
  auto t = sets->terms(5);
  CHECK(t.size() == 5);
  CHECK(std::is_sorted(t.begin(), t.end()));
  CHECK(find_generator("A000000") == nullptr);
}
