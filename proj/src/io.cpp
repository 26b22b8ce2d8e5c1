#include "phirep/io.hpp"

#include "phirep/sweep.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

namespace phirep {

namespace {

std::string tuple_text(Symbol a, int k) {
  std::string s;
  for (int j = 0; j < k; ++j) {
    if (j) s += ',';
    s += static_cast<char>('0' + symbol_digit(a, j, k));
  }
  return s;
}

void write_header(std::ostream& os, int k, bool output, const std::vector<std::string>& names, int initial) {
  os << "tracks " << k << '\n' << "alphabets";
  for (int j = 0; j < k; ++j) os << " {0,1}";
  os << '\n' << "flags deterministic" << (output ? " output" : "") << '\n';
  if (!names.empty()) {
    os << "names";
    for (const auto& n : names) os << ' ' << n;
    os << '\n';
  }
  os << "initial " << initial << '\n';
}

std::vector<std::string> fields(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string f; in >> f;) out.push_back(f);
  return out;
}

long long parse_ll(const std::string& s, std::size_t line) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw FormatError("expected an integer, got '" + s + "'", line);
  }
  if (pos != s.size()) throw FormatError("expected an integer, got '" + s + "'", line);
  return v;
}

}  // namespace

void write_automaton(std::ostream& os, const Dfa& a) {
  const int k = a.tracks;
  write_header(os, k, false, a.names, a.initial);
  for (int q = 0; q < a.state_count(); ++q)
    os << "state " << q << ' ' << (a.accepting[static_cast<std::size_t>(q)] ? "accept" : "reject") << '\n';
  for (int q = 0; q < a.state_count(); ++q)
    for (int s = 0; s < a.alphabet_size(); ++s) {
      int t = a.next(q, static_cast<Symbol>(s));
      if (t != kNoState) os << "trans " << q << ' ' << tuple_text(static_cast<Symbol>(s), k) << ' ' << t << '\n';
    }
}

void write_automaton(std::ostream& os, const Dfao& a) {
  const int k = a.tracks;
  write_header(os, k, true, {}, a.initial);
  for (int q = 0; q < a.state_count(); ++q) os << "state " << q << " output=" << a.output[static_cast<std::size_t>(q)] << '\n';
  for (int q = 0; q < a.state_count(); ++q)
    for (int s = 0; s < a.alphabet_size(); ++s)
      os << "trans " << q << ' ' << tuple_text(static_cast<Symbol>(s), k) << ' ' << a.next(q, static_cast<Symbol>(s))
         << '\n';
}

std::string automaton_text(const Dfa& a) {
  std::ostringstream os;
  write_automaton(os, a);
  return os.str();
}

std::string automaton_text(const Dfao& a) {
  std::ostringstream os;
  write_automaton(os, a);
  return os.str();
}

AutomatonFile read_automaton(std::istream& is) {
  AutomatonFile f;
  int k = -1;
  int initial = 0;
  bool saw_flags = false;
  std::vector<std::string> names;
  struct StateLine {
    bool accept = false;
    long long output = 0;
  };
  std::vector<std::optional<StateLine>> states;
  std::vector<std::tuple<int, Symbol, int, std::size_t>> trans;

  std::string line;
  std::size_t no = 0;
  while (std::getline(is, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto fs = fields(line);
    if (fs.empty() || fs[0][0] == '#') continue;
    const std::string& key = fs[0];
    if (key == "tracks") {
      if (fs.size() != 2) throw FormatError("tracks takes one value", no);
      k = static_cast<int>(parse_ll(fs[1], no));
      if (k < 1 || k > kMaxTracks) throw FormatError("track count out of range", no);
      continue;
    }
    if (k < 0) throw FormatError("file must start with 'tracks k'", no);
    if (key == "alphabets") {
      if (fs.size() != static_cast<std::size_t>(k) + 1) throw FormatError("one alphabet per track expected", no);
      for (std::size_t j = 1; j < fs.size(); ++j)
        if (fs[j] != "{0,1}") throw FormatError("only the alphabet {0,1} is supported", no);
    } else if (key == "flags") {
      saw_flags = true;
      bool det = false;
      for (std::size_t j = 1; j < fs.size(); ++j) {
        if (fs[j] == "deterministic") det = true;
        else if (fs[j] == "output") f.has_output = true;
        else throw FormatError("unknown flag '" + fs[j] + "'", no);
      }
      if (!det) throw FormatError("only deterministic automata are supported", no);
    } else if (key == "names") {
      if (fs.size() != static_cast<std::size_t>(k) + 1) throw FormatError("one name per track expected", no);
      names.assign(fs.begin() + 1, fs.end());
    } else if (key == "initial") {
      if (fs.size() != 2) throw FormatError("initial takes one value", no);
      initial = static_cast<int>(parse_ll(fs[1], no));
    } else if (key == "state") {
      if (fs.size() != 3) throw FormatError("state <id> <accept|reject|output=v>", no);
      long long id = parse_ll(fs[1], no);
      if (id < 0 || id > 100'000'000) throw FormatError("bad state id", no);
      StateLine s;
      if (fs[2] == "accept") s.accept = true;
      else if (fs[2] == "reject") s.accept = false;
      else if (fs[2].rfind("output=", 0) == 0) s.output = parse_ll(fs[2].substr(7), no);
      else throw FormatError("bad state kind '" + fs[2] + "'", no);
      if (static_cast<std::size_t>(id) >= states.size()) states.resize(static_cast<std::size_t>(id) + 1);
      if (states[static_cast<std::size_t>(id)]) throw FormatError("duplicate state", no);
      states[static_cast<std::size_t>(id)] = s;
    } else if (key == "trans") {
      if (fs.size() != 4) throw FormatError("trans <src> <d1,...,dk> <dst>", no);
      std::vector<int> digits;
      std::istringstream ds(fs[2]);
      for (std::string d; std::getline(ds, d, ',');) {
        if (d != "0" && d != "1") throw FormatError("digits must be 0 or 1", no);
        digits.push_back(d[0] - '0');
      }
      if (digits.size() != static_cast<std::size_t>(k)) throw FormatError("tuple width differs from track count", no);
      trans.emplace_back(static_cast<int>(parse_ll(fs[1], no)), encode_symbol(digits),
                         static_cast<int>(parse_ll(fs[3], no)), no);
    } else {
      throw FormatError("unknown directive '" + key + "'", no);
    }
  }
  if (k < 0) throw FormatError("empty automaton file", no);
  if (!saw_flags) throw FormatError("missing flags line", no);
  for (std::size_t i = 0; i < states.size(); ++i)
    if (!states[i]) throw FormatError("state " + std::to_string(i) + " not declared", no);
  const int n = static_cast<int>(states.size());
  if (n == 0 || initial < 0 || initial >= n) throw FormatError("initial state not declared", no);
  const std::size_t A = std::size_t{1} << k;

  std::vector<int> delta(static_cast<std::size_t>(n) * A, kNoState);
  for (const auto& [src, sym, dst, ln] : trans) {
    if (src < 0 || src >= n || dst < 0 || dst >= n) throw FormatError("transition uses an undeclared state", ln);
    auto& slot = delta[static_cast<std::size_t>(src) * A + sym];
    if (slot != kNoState) throw FormatError("nondeterministic transition", ln);
    slot = dst;
  }
  if (f.has_output) {
    for (int d : delta)
      if (d == kNoState) throw FormatError("automaton with output must be complete", no);
    f.dfao.tracks = k;
    f.dfao.initial = initial;
    f.dfao.delta = std::move(delta);
    for (const auto& s : states) f.dfao.output.push_back(s->output);
  } else {
    f.dfa.tracks = k;
    f.dfa.initial = initial;
    f.dfa.delta = std::move(delta);
    for (const auto& s : states) f.dfa.accepting.push_back(s->accept ? 1 : 0);
    f.dfa.names = std::move(names);
  }
  return f;
}

AutomatonFile parse_automaton(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_automaton(is);
}

// ---------------------------------------------------------------- b-files

BFile parse_bfile(std::istream& is, std::string id) {
  BFile b;
  b.id = std::move(id);
  std::string line;
  std::size_t no = 0;
  while (std::getline(is, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto fs = fields(line);
    if (fs.empty() || fs[0][0] == '#') continue;
    if (fs.size() != 2) throw FormatError("expected 'index value'", no);
    long long idx = parse_ll(fs[0], no);
    const std::string& v = fs[1];
    std::size_t digits_from = (v[0] == '-' || v[0] == '+') ? 1 : 0;
    if (digits_from == v.size() || v.find_first_not_of("0123456789", digits_from) != std::string::npos)
      throw FormatError("expected an integer value, got '" + v + "'", no);
    if (!b.entries.empty() && idx <= b.entries.back().first) throw FormatError("indices must increase", no);
    b.entries.emplace_back(idx, BigInt(v[0] == '+' ? v.substr(1) : v));
  }
  return b;
}

std::optional<BFile> load_bfile(const std::filesystem::path& path, std::string id) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  return parse_bfile(in, std::move(id));
}

std::filesystem::path default_bfile_path(const std::string& seq_id) {
  std::filesystem::path dir = ".";
  if (const char* env = std::getenv("PHIREP_BFILE_DIR"); env && *env) dir = env;
  std::string digits = seq_id;
  if (!digits.empty() && (digits[0] == 'A' || digits[0] == 'a')) digits = digits.substr(1);
  return dir / ("b" + digits + ".txt");
}

namespace {

std::function<BigInt(long long)> from_rep(const CountRep& (*get)()) {
  return [get](long long n) { return BigInt(eval_at(get().minimal, n)); };
}

std::function<std::vector<long long>(std::size_t)> from_set(std::function<bool(long long)> member, bool skip_zero) {
  return [member, skip_zero](std::size_t count) {
    std::vector<long long> out;
    long long lo = skip_zero ? 1 : 0;
    member(lo);  // builds the automaton before the parallel sweep
    for (long long hi = 256; out.size() < count; lo = hi + 1, hi *= 2) {
      auto hits = find_failures(lo, hi, [&](long long n) { return !member(n); }, count - out.size());
      out.insert(out.end(), hits.begin(), hits.end());
    }
    return out;
  };
}

std::function<bool(long long)> member_of(const Dfa& (*get)()) {
  return [get](long long n) { return accepts_zeck(get(), n); };
}

const Dfa& palcanon_set() { return palindrome_sets().palcanon; }
const Dfa& pal_set() { return palindrome_sets().pal; }
const Dfa& shevelev_set() { return palindrome_sets().shevelev; }
const Dfa& antip_set() { return palindrome_sets().antip; }
const CountRep& sl_rep() { return digit_sums().left; }
const CountRep& s_rep() { return digit_sums().total; }

}  // namespace

const std::vector<SequenceGenerator>& sequence_generators() {
  static const std::vector<SequenceGenerator> gens = [] {
    std::vector<SequenceGenerator> g;
    auto value = [&](std::string id, std::string d, std::function<BigInt(long long)> f) {
      g.push_back({std::move(id), std::move(d), false, std::move(f), {}});
    };
    auto set = [&](std::string id, std::string d, std::function<std::vector<long long>(std::size_t)> f) {
      g.push_back({std::move(id), std::move(d), true, {}, std::move(f)});
    };
    value("A362970", "p(n), distinct left parts", from_rep(&left_parts_count));
    value("A055778", "s(n), ones in the canonical expansion", from_rep(&s_rep));
    value("A330037", "s(n) mod 2", [](long long n) { return BigInt(accepts_zeck(digit_sum_mod2(), n) ? 1 : 0); });
    value("A362716", "s_L(n), ones in the left part", from_rep(&sl_rep));
    value("A362692", "ell(n), length of the left part", from_rep(&length_left));
    value("A221150", "Sturmian w(n)", [](long long n) { return BigInt(sturmian_w(n)); });
    value("A289749", "kappa(n), Knott expansions", from_rep(&knott_count));
    set("A342089", "n with two Lucas representations",
        from_set([](long long n) { return phi_digit(n, -1) == 1; }, true));
    set("A362780", "palindromic canonical expansions", from_set(member_of(&palcanon_set), true));
    set("A330672", "some palindromic expansion", from_set(member_of(&pal_set), true));
    set("A178482", "Shevelev phi-antipalindromic numbers", from_set(member_of(&shevelev_set), false));
    set("A362781", "some antipalindromic expansion", from_set(member_of(&antip_set), true));
    return g;
  }();
  return gens;
}

const SequenceGenerator* find_generator(const std::string& seq_id) {
  for (const auto& g : sequence_generators())
    if (g.id == seq_id) return &g;
  return nullptr;
}

SequenceReport bfile_check(const SequenceGenerator& gen, const BFile& file, long long from, long long to) {
  SequenceReport r;
  r.name = gen.description;
  r.oeis = gen.id;
  std::vector<std::pair<long long, BigInt>> sel;
  for (const auto& e : file.entries)
    if (e.first >= from && e.first <= to) sel.push_back(e);
  if (sel.empty()) {
    r.skipped = true;
    r.note = "no b-file entries in range";
    return r;
  }
  r.from = sel.front().first;
  r.to = sel.back().first;
  auto add = [&](long long n, const BigInt& got, const BigInt& want) {
    if (got != want) r.discrepancies.push_back({n, got.str(), want.str(), file.id.empty() ? gen.id : file.id});
  };
  if (gen.is_set) {
    // Position within the file decides which term is compared.
    long long first = file.entries.front().first;
    std::size_t need = static_cast<std::size_t>(sel.back().first - first + 1);
    auto terms = gen.terms(need);
    for (const auto& [idx, want] : sel) add(idx, BigInt(terms[static_cast<std::size_t>(idx - first)]), want);
  } else {
    if (sel.front().first < 0) throw std::invalid_argument("bfile_check: negative index");
    gen.value(r.from);  // builds the representation before the parallel sweep
    auto vals = sweep_values(r.from, r.to, [&](long long n) { return static_cast<long long>(gen.value(n)); });
    for (const auto& [idx, want] : sel) add(idx, BigInt(vals[static_cast<std::size_t>(idx - r.from)]), want);
  }
  return r;
}

SequenceReport bfile_check(const std::string& seq_id, const std::filesystem::path& path, long long from,
                           long long to) {
  const SequenceGenerator* gen = find_generator(seq_id);
  if (!gen) throw std::invalid_argument("no generator for " + seq_id);
  auto file = load_bfile(path, seq_id);
  if (!file) {
    SequenceReport r;
    r.name = gen->description;
    r.oeis = seq_id;
    r.skipped = true;
    r.note = "b-file not found: " + path.string();
    return r;
  }
  return bfile_check(*gen, *file, from, to);
}

}  // namespace phirep
