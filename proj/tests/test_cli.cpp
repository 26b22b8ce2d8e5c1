#include "phirep/cli.hpp"

#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace phirep;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("phirep_test_" + name);
}

}  // namespace

TEST_CASE("convert") {
  CHECK(run({"convert", "43", "--to", "zeck"}).out == "10010001\n");
  CHECK(run({"convert", "43", "--to", "negafib"}).out == "101001010\n");
  CHECK(run({"convert", "7", "--to", "phi"}).out == "10000.0001\n");
  CHECK(run({"convert", "10000.0001", "--from", "phi", "--to", "dec"}).out == "7\n");
  CHECK(run({"convert", "101001010", "--from", "negafib", "--to", "dec"}).out == "43\n");
  CHECK(run({"convert", "--to", "negafib", "--", "-5"}).code == kExitOk);
  Run j = run({"--format", "json", "convert", "43", "--to", "zeck"});
  CHECK(nlohmann::json::parse(j.out)["result"] == "10010001");
  CHECK(run({"convert", "--to", "zeck", "--", "-3"}).code == kExitUsage);
  CHECK(run({"convert", "12a", "--to", "zeck"}).code == kExitUsage);
  CHECK(run({"convert", "102", "--from", "zeck", "--to", "dec"}).code == kExitUsage);
  CHECK(run({"convert", "5", "--to", "base7"}).code == kExitUsage);
  CHECK(run({"convert", "5"}).code == kExitUsage);
}

TEST_CASE("count") {
  CHECK(run({"count", "leftparts", "19"}).out == "7\n");
  CHECK(run({"count", "knott", "2"}).out == "2\n");
  CHECK(run({"count", "length", "0"}).out == "0\n");
  CHECK(run({"count", "sumdigits", "7"}).out == "2\n");
  CHECK(run({"count", "--", "leftparts", "-1"}).code == kExitUsage);
  CHECK(run({"count", "nosuch", "3"}).code == kExitUsage);
}

TEST_CASE("enumerate") {
  Run r = run({"enumerate", "reps", "2", "--filter", "canonical"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "10.01\n");
  Run all = run({"enumerate", "reps", "2", "--left", "3", "--right", "3"});
  CHECK(all.out.find("10.01\n") != std::string::npos);
  CHECK(all.out.find("1.11\n") != std::string::npos);
  CHECK(run({"enumerate", "reps", "2", "--left", "99"}).code == kExitUsage);
  Run s = run({"--max", "20", "enumerate", "set", "ones2"});
  CHECK(s.out == "2\n3\n7\n18\n");
  CHECK(run({"enumerate", "set", "unknown"}).code == kExitUsage);
}

TEST_CASE("automaton build, export and equivalence") {
  auto f = temp_file("saka.txt"), g = temp_file("fibnorm.txt");
  CHECK(run({"--out", f.string(), "automaton", "build", "saka"}).code == kExitOk);
  CHECK(run({"--out", g.string(), "automaton", "build", "fibnorm"}).code == kExitOk);
  CHECK(run({"automaton", "equiv", f.string(), "saka"}).code == kExitOk);
  Run diff = run({"automaton", "equiv", f.string(), "frougny"});
  CHECK(diff.code == kExitDiscrepancy);
  CHECK(diff.out == "different\n");
  CHECK(run({"automaton", "equiv", "frougny", "frougny-direct"}).code == kExitOk);
  CHECK(run({"automaton", "equiv", g.string(), "saka"}).code == kExitUsage);
  Run dot = run({"automaton", "export", g.string()});
  CHECK(dot.out.find("digraph") != std::string::npos);
  Run re = run({"automaton", "build", "--regex", "[0,1]*[1,1]", "--tracks", "2"});
  CHECK(re.out.rfind("tracks 2", 0) == 0);
  CHECK(run({"automaton", "build", "--regex", "[0,1", "--tracks", "2"}).code == kExitUsage);
  CHECK(run({"automaton", "build"}).code == kExitUsage);
  CHECK(run({"automaton", "export", "no-such-automaton"}).code == kExitUsage);
  auto bad = temp_file("bad.txt");
  std::ofstream(bad) << "tracks 1\nflags nondeterministic\n";
  CHECK(run({"automaton", "export", bad.string()}).code == kExitUsage);
  std::filesystem::remove(f);
  std::filesystem::remove(g);
  std::filesystem::remove(bad);
}

TEST_CASE("verify") {
  Run r = run({"verify", "small-values"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("PASS small-values", 0) == 0);
  Run j = run({"--format", "json", "--max", "50", "verify", "saka-oracle"});
  CHECK(j.code == kExitOk);
  CHECK(nlohmann::json::parse(j.out)["pass"] == true);
  CHECK(run({"verify", "nonsense"}).code == kExitUsage);
}

TEST_CASE("oeis") {
  const std::string data = PHIREP_TEST_DATA;
  Run ok = run({"oeis", "check", "A362970", "--bfile", data + "/b362970.txt"});
  CHECK(ok.code == kExitOk);
  Run skipped = run({"oeis", "check", "A362970", "--bfile", data + "/missing.txt"});
  CHECK(skipped.code == kExitOk);
  CHECK(skipped.out.find("SKIPPED") != std::string::npos);
  CHECK(run({"oeis", "check", "A362970", "--bfile", data + "/b_malformed.txt"}).code == kExitUsage);
  CHECK(run({"oeis", "check", "A999999"}).code == kExitUsage);
  auto wrong = temp_file("b362970.txt");
  std::ofstream(wrong) << "0 1\n1 3\n";
  CHECK(run({"oeis", "check", "A362970", "--bfile", wrong.string()}).code == kExitDiscrepancy);
  std::filesystem::remove(wrong);
  CHECK(run({"oeis", "list"}).out.find("A362970") != std::string::npos);
}

TEST_CASE("usage") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"frobnicate"}).code == kExitUsage);
}
