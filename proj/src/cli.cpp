#include "phirep/cli.hpp"

#include "phirep/analyses.hpp"
#include "phirep/checks.hpp"
#include "phirep/frougny.hpp"
#include "phirep/io.hpp"
#include "phirep/primitives.hpp"
#include "phirep/zphi.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace phirep {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kSystems = {"dec", "zeck", "negafib", "phi"};

PhiInt parse_value(const std::string& text, const std::string& system) {
  if (system == "dec") {
    if (text.empty() || text.find_first_not_of("0123456789", text[0] == '-' ? 1 : 0) != std::string::npos ||
        text == "-")
      throw UsageError("not a decimal integer: " + text);
    return PhiInt::integer(BigInt(text));
  }
  try {
    if (system == "zeck") return PhiInt::integer(zeck_eval(BitWord(text)));
    if (system == "negafib") return PhiInt::integer(negafib_eval(BitWord(text, Numeration::negafib)));
    return phi_eval(PhiExpansion::parse(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string render_value(const PhiInt& z, const std::string& system) {
  const bool integral = z.phi_coeff() == 0;
  const BigInt& n = z.unit_coeff();
  if (system == "dec") return integral ? n.str() : z.to_string();
  if (system == "phi") {
    if (z.sign() < 0) throw UsageError("negative values have no base-phi expansion");
    return phi_canonical(z).to_string();
  }
  if (!integral) throw UsageError(z.to_string() + " is not an integer");
  if (system == "zeck") {
    if (n < 0) throw UsageError("negative values have no Zeckendorf representation");
    return zeck_encode(n).display();
  }
  return negafib_encode(n).display();
}

long long count_value(const std::string& family, long long n) {
  if (family == "leftparts") return eval_at(left_parts_count().minimal, n);
  if (family == "knott") return eval_at(knott_count().minimal, n);
  if (family == "natural") return eval_at(natural_count().minimal, n);
  if (family == "sumdigits") return eval_at(digit_sums().total.minimal, n);
  if (family == "sumleft") return eval_at(digit_sums().left.minimal, n);
  if (family == "sumright") return eval_at(digit_sums().right.minimal, n);
  if (family == "length") return eval_at(length_left().minimal, n);
  throw UsageError("unknown family: " + family);
}

const std::vector<std::string> kFamilies = {"leftparts", "knott",   "natural", "sumdigits",
                                            "sumleft",   "sumright", "length"};

// One-track (n) automata with their names.
std::optional<Dfa> named_set(const std::string& name) {
  if (name == "palcanon") return palindrome_sets().palcanon;
  if (name == "pal") return palindrome_sets().pal;
  if (name == "pal-any") return palindrome_sets().pal_any;
  if (name == "shevelev") return palindrome_sets().shevelev;
  if (name == "antip") return palindrome_sets().antip;
  if (name == "gerdemann-zero") return gerdemann().zero_set;
  if (name == "parity") return digit_sum_mod2();
  if (name.rfind("ones", 0) == 0 && name.size() == 5 && name[4] >= '0' && name[4] <= '5')
    return fixed_ones_automaton(name[4] - '0');
  return std::nullopt;
}

const std::vector<std::string> kSets = {"palcanon", "pal",    "pal-any", "shevelev", "antip", "gerdemann-zero",
                                        "parity",   "ones0",  "ones1",   "ones2",    "ones3", "ones4", "ones5"};

AutomatonFile named_automaton(const std::string& name) {
  AutomatonFile f;
  if (name == "frougny") f.dfa = frougny();
  else if (name == "saka") f.dfa = saka();
  else if (name == "genfrou") f.dfa = genfrou();
  else if (name == "canfrou") f.dfa = canfrou();
  else if (name == "frougny-direct") f.dfa = minimize(build_frougny_direct());
  else if (name == "genfrou-direct") f.dfa = minimize(build_genfrou_direct());
  else if (name == "dvl") f.dfa = dvl_automaton();
  else if (name == "equal-length") f.dfa = equal_length_set();
  else if (name == "digit-diff") {
    f.has_output = true;
    f.dfao = digit_sum_right_difference();
  } else if (name == "length-diff") {
    f.has_output = true;
    f.dfao = length_first_difference();
  } else if (auto s = named_set(name)) {
    f.dfa = *s;
  } else {
    try {
      f.dfa = build_primitive(name);
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown automaton: " + name);
    }
  }
  return f;
}

AutomatonFile load_or_build(const std::string& what) {
  if (std::filesystem::is_regular_file(what)) {
    std::ifstream in(what);
    try {
      return read_automaton(in);
    } catch (const FormatError& e) {
      throw UsageError(what + ": " + e.what());
    }
  }
  return named_automaton(what);
}

json check_json(const CheckResult& r) {
  return json{{"check", r.name}, {"max", r.max},       {"cases", r.cases},      {"pass", r.ok()},
              {"failures", r.failures}, {"warnings", r.warnings}, {"notes", r.notes}};
}

void check_text(std::ostream& os, const CheckResult& r) {
  os << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
  for (const auto& f : r.failures) os << "  failure: " << f << '\n';
  for (const auto& w : r.warnings) os << "  warning: " << w << '\n';
  for (const auto& n : r.notes) os << "  note: " << n << '\n';
}

json report_json(const SequenceReport& r) {
  json d = json::array();
  for (const auto& x : r.discrepancies)
    d.push_back({{"n", x.n}, {"computed", x.computed}, {"expected", x.expected}, {"source", x.source}});
  return json{{"sequence", r.oeis}, {"name", r.name}, {"from", r.from}, {"to", r.to},
              {"status", r.skipped ? "SKIPPED" : r.ok() ? "PASS" : "FAIL"}, {"note", r.note}, {"discrepancies", d}};
}

void report_text(std::ostream& os, const SequenceReport& r) {
  if (r.skipped) {
    os << "SKIPPED " << r.oeis << ": " << r.note << '\n';
    return;
  }
  os << (r.ok() ? "PASS " : "FAIL ") << r.oeis << " (" << r.name << ") n=" << r.from << ".." << r.to << '\n';
  std::size_t shown = 0;
  for (const auto& d : r.discrepancies) {
    if (++shown > 20) {
      os << "  ...\n";
      break;
    }
    os << "  n=" << d.n << ": computed " << d.computed << ", b-file " << d.expected << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Base-phi expansions via synchronized automata", "phirep"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::string out_path;
  long long max = -1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "Write the result to this file");
  app.add_option("--max", max, "Upper end of the checked range")->check(CLI::NonNegativeNumber);

  auto* convert = app.add_subcommand("convert", "Convert between numeration systems");
  std::string value, from = "dec", to;
  convert->add_option("value", value, "Value to convert")->required();
  convert->add_option("--from", from, "Input system")->check(CLI::IsMember(kSystems));
  convert->add_option("--to", to, "Output system")->required()->check(CLI::IsMember(kSystems));

  auto* count = app.add_subcommand("count", "Evaluate a counting function");
  std::string family;
  long long count_n = 0;
  count->add_option("family", family, "Counting function")->required()->check(CLI::IsMember(kFamilies));
  count->add_option("n", count_n, "Argument")->required()->check(CLI::NonNegativeNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List expansions or set members");
  enumerate->require_subcommand(1);
  auto* en_reps = enumerate->add_subcommand("reps", "Expansions of n within length bounds");
  long long reps_n = 0;
  std::string filter = "any";
  int left_len = -1, right_len = -1;
  en_reps->add_option("n", reps_n, "Value")->required()->check(CLI::NonNegativeNumber);
  en_reps->add_option("--filter", filter, "Expansion family")
      ->check(CLI::IsMember({"any", "canonical", "no11", "knott", "dvl", "natural"}));
  en_reps->add_option("--left", left_len, "Maximum left part length")->check(CLI::Range(0, 44));
  en_reps->add_option("--right", right_len, "Maximum right part length")->check(CLI::Range(0, 44));
  auto* en_set = enumerate->add_subcommand("set", "Members n <= max of a named set");
  std::string set_name;
  en_set->add_option("name", set_name, "Set")->required()->check(CLI::IsMember(kSets));

  auto* automaton = app.add_subcommand("automaton", "Build, export and compare automata");
  automaton->require_subcommand(1);
  auto* au_build = automaton->add_subcommand("build", "Write a named automaton or a compiled expression");
  std::string build_name, regex;
  int regex_tracks = 1;
  au_build->add_option("name", build_name, "Automaton name");
  au_build->add_option("--regex", regex, "Regular expression over tuples");
  au_build->add_option("--tracks", regex_tracks, "Track count for --regex")->check(CLI::Range(1, kMaxTracks));
  auto* au_export = automaton->add_subcommand("export", "Convert an automaton to DOT");
  std::string export_what;
  au_export->add_option("automaton", export_what, "File or name")->required();
  auto* au_equiv = automaton->add_subcommand("equiv", "Decide whether two automata agree");
  std::string eq_a, eq_b;
  au_equiv->add_option("first", eq_a, "File or name")->required();
  au_equiv->add_option("second", eq_b, "File or name")->required();

  auto* verify = app.add_subcommand("verify", "Run a named check");
  std::string check_name;
  std::vector<std::string> check_names{"all"};
  for (const auto& c : checks()) check_names.push_back(c.name);
  verify->add_option("check", check_name, "Check name")->required()->check(CLI::IsMember(check_names));

  auto* oeis = app.add_subcommand("oeis", "Compare against OEIS b-files");
  oeis->require_subcommand(1);
  auto* oeis_check = oeis->add_subcommand("check", "Compare one sequence with its b-file");
  std::string seq_id, bfile;
  long long range_from = LLONG_MIN, range_to = LLONG_MAX;
  oeis_check->add_option("id", seq_id, "Sequence id, e.g. A362970")->required();
  oeis_check->add_option("--bfile", bfile, "b-file path (default: $PHIREP_BFILE_DIR/bNNNNNN.txt)");
  oeis_check->add_option("--from", range_from, "First index compared");
  oeis_check->add_option("--to", range_to, "Last index compared");
  auto* oeis_list = oeis->add_subcommand("list", "Sequences with a generator");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buf;
  std::ostream& os = out_path.empty() ? out : buf;
  const bool as_json = format == "json";
  int status = kExitOk;

  try {
    if (*convert) {
      std::string r = render_value(parse_value(value, from), to);
      if (as_json) os << json{{"value", value}, {"from", from}, {"to", to}, {"result", r}}.dump() << '\n';
      else os << r << '\n';
    } else if (*count) {
      long long v = count_value(family, count_n);
      if (as_json) os << json{{"family", family}, {"n", count_n}, {"value", v}}.dump() << '\n';
      else os << v << '\n';
    } else if (*en_reps) {
      int L = left_len, R = right_len;
      if (L < 0) {
        L = 1;
        while (PhiInt::power(L - 1) <= PhiInt::integer(reps_n)) ++L;
      }
      if (R < 0) R = filter == "natural" ? static_cast<int>(phi_canonical(reps_n).right_length()) : L + 4;
      RepFilter f = filter == "canonical" ? RepFilter([](const PhiExpansion& e) { return e.is_canonical(); })
                    : filter == "no11"    ? filters::no_11()
                    : filter == "knott"   ? filters::knott()
                    : filter == "dvl"     ? filters::dvl()
                    : filter == "natural" ? filters::natural(reps_n)
                                          : filters::any();
      auto reps = enumerate_phi_reps(reps_n, L, R, f);
      if (as_json) {
        json a = json::array();
        for (const auto& e : reps) a.push_back(e.to_string());
        os << json{{"n", reps_n}, {"filter", filter}, {"left", L}, {"right", R}, {"expansions", a}}.dump() << '\n';
      } else {
        for (const auto& e : reps) os << e.to_string() << '\n';
      }
    } else if (*en_set) {
      Dfa a = *named_set(set_name);
      auto vals = accepted_values(a, max < 0 ? 100 : max);
      if (as_json) os << json{{"set", set_name}, {"members", vals}}.dump() << '\n';
      else
        for (long long v : vals) os << v << '\n';
    } else if (*au_build) {
      AutomatonFile f;
      if (!regex.empty()) {
        try {
          f.dfa = minimize(compile_regex(regex, regex_tracks));
        } catch (const RegexError& e) {
          throw UsageError(e.what());
        }
      } else if (!build_name.empty()) {
        f = named_automaton(build_name);
      } else {
        throw UsageError("automaton build needs a name or --regex");
      }
      if (f.has_output) write_automaton(os, f.dfao);
      else write_automaton(os, f.dfa);
    } else if (*au_export) {
      AutomatonFile f = load_or_build(export_what);
      os << (f.has_output ? to_dot(f.dfao) : to_dot(f.dfa));
    } else if (*au_equiv) {
      AutomatonFile a = load_or_build(eq_a), b = load_or_build(eq_b);
      bool same = false;
      if (a.has_output != b.has_output) throw UsageError("cannot compare an acceptor with an automaton with output");
      if (a.has_output) same = a.dfao.tracks == b.dfao.tracks && automaton_text(minimize(a.dfao)) == automaton_text(minimize(b.dfao));
      else if (a.dfa.tracks != b.dfa.tracks) throw UsageError("track counts differ");
      else same = equivalent(a.dfa, b.dfa);
      if (as_json) os << json{{"equivalent", same}}.dump() << '\n';
      else os << (same ? "equivalent" : "different") << '\n';
      status = same ? kExitOk : kExitDiscrepancy;
    } else if (*verify) {
      std::vector<const CheckInfo*> run;
      if (check_name == "all")
        for (const auto& c : checks()) run.push_back(&c);
      else
        run.push_back(find_check(check_name));
      json all = json::array();
      for (const CheckInfo* c : run) {
        CheckResult r = c->run(max < 0 ? c->default_max : max);
        if (!r.ok()) status = kExitDiscrepancy;
        if (as_json) all.push_back(check_json(r));
        else check_text(os, r);
      }
      if (as_json) os << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
    } else if (*oeis_check) {
      const SequenceGenerator* gen = find_generator(seq_id);
      if (!gen) throw UsageError("no generator for " + seq_id + " (see 'oeis list')");
      std::filesystem::path path = bfile.empty() ? default_bfile_path(seq_id) : std::filesystem::path(bfile);
      SequenceReport r;
      try {
        r = bfile_check(seq_id, path, range_from, range_to);
      } catch (const FormatError& e) {
        throw UsageError(path.string() + ": " + e.what());
      }
      if (as_json) os << report_json(r).dump(2) << '\n';
      else report_text(os, r);
      if (!r.skipped && !r.ok()) status = kExitDiscrepancy;
    } else if (*oeis_list) {
      for (const auto& g : sequence_generators())
        os << g.id << "  " << g.description << (g.is_set ? " (set)" : "") << '\n';
    }
  } catch (const UsageError& e) {
    err << "phirep: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "phirep: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "phirep: " << e.what() << '\n';
    return kExitUsage;
  }

  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "phirep: cannot write " << out_path << '\n';
      return kExitUsage;
    }
    f << buf.str();
  }
  return status;
}

}  // namespace phirep
