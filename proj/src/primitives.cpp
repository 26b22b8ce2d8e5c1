#include "phirep/primitives.hpp"

#include "phirep/relation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

namespace phirep {

namespace {

const char* const kAny2 = "([0,0]|[0,1]|[1,0]|[1,1])";

Dfa reg2(const std::string& spec) { return named_regex(spec, {"x", "y"}); }
Dfa reg1(const std::string& spec) { return named_regex(spec, {"x"}); }

Dfa knott_cond() {
  // Bad when left.right, trailing zeros dropped and leading zeros implied,
  // ends in 011. Split on where the last 1 falls in the folded pair.
  const std::string any = kAny2;
  const std::string y0 = "([0,0]|[1,0])";
  const std::string y1 = "([0,1]|[1,1])";
  Dfa deep = reg2(y0 + "*" + y1 + y1 + y0 + any + "*");            // y = 0*110(0|1)*
  Dfa y11 = reg2(y0 + "*" + y1 + "[0,1]");                          // y = 0*11, x ends in 0
  Dfa y1_only = reg2("(" + y0 + "*[0,0][1,1])|[1,1]");             // y = 0*1, x ends in 01 or x = 1
  Dfa y_zero = reg2("([1,0][1,0][0,0]*)|(" + y0 + "*[0,0][1,0][1,0][0,0]*)");
  Dfa bad = disj(disj(deep, y11), disj(y1_only, y_zero));
  return negate(bad);
}

Dfa dvl_cond() {
  const std::string any = kAny2;
  // No 11 except as the final two digits of x, none in y, and d0 d_{-1}
  // not both 1.
  Dfa x_ok = reg1("()|((0|10)*(()|1)(0|1))");
  Dfa y_ok = canonical("y");
  Dfa last_not_11 = reg2("()|(" + any + "*([0,0]|[0,1]|[1,0]))");
  // A nonzero expansion may not have d1 = d0 = d_{-1} = 0.
  Dfa ends_000 = reg2("(()|(" + any + "*([0,0]|[0,1])))[0,0]");
  Dfa nonzero = reg2(any + "*([0,1]|[1,0]|[1,1])" + any + "*");
  Dfa no_short_tail = negate(conj(ends_000, nonzero));
  Dfa out = conj(conj(x_ok, y_ok), conj(last_not_11, no_short_tail));
  return select(out, {"x", "y"});
}

Dfa no11xy() {
  Dfa out = conj(canonical("x"), canonical("y"));
  out = conj(out, reg2(std::string("()|(") + kAny2 + "*([0,0]|[0,1]|[1,0]))"));
  return select(out, {"x", "y"});
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

const std::map<std::string, Primitive>& name_table() {
  static const std::map<std::string, Primitive> table = {
      {"FIBNORM", Primitive::FIBNORM},         {"NEGFIBNORM", Primitive::NEGFIBNORM},
      {"SHIFTL", Primitive::SHIFTL},           {"SHIFTR", Primitive::SHIFTR},
      {"LSTBIT1", Primitive::LSTBIT1},         {"LSTBIT2", Primitive::LSTBIT2},
      {"LSTBIT3", Primitive::LSTBIT3},         {"FIBNEGFIB", Primitive::FIBNEGFIB},
      {"FIBNEGFIB2", Primitive::FIBNEGFIB2},   {"HAS11", Primitive::HAS11},
      {"EQUAL", Primitive::EQUAL},             {"COMPL", Primitive::COMPL},
      {"ISFIB", Primitive::ISFIB},             {"EVENL", Primitive::EVENL},
      {"SUFF", Primitive::SUFF},               {"MATCH1", Primitive::MATCH1},
      {"ONEPOS", Primitive::ONEPOS},           {"FIRST1MATCH", Primitive::FIRST1MATCH},
      {"SUM2", Primitive::SUM2},               {"HAS_T_ONES", Primitive::HAS_T_ONES},
      {"NO11XY", Primitive::NO11XY},           {"KNOTT_COND", Primitive::KNOTT_COND},
      {"DVL_COND", Primitive::DVL_COND},
  };
  return table;
}

}  // namespace

Dfa build_primitive(Primitive p, int t) {
  switch (p) {
    case Primitive::FIBNORM:
      return select(conj(linear_relation({{"x", NumSys::zeck, 1, 0}, {"y", NumSys::zeck, -1, 0}}, 0, false),
                         canonical("y")),
                    {"x", "y"});
    case Primitive::NEGFIBNORM:
      return select(conj(linear_relation({{"x", NumSys::negafib, 1, 0}, {"y", NumSys::negafib, -1, 0}}, 0, false),
                         canonical("y")),
                    {"x", "y"});
    case Primitive::SHIFTL:
      return reg2("([0,0]|[0,1][1,1]*[1,0])*");
    case Primitive::SHIFTR:
      return reg2("([0,0]|[1,0][1,1]*[0,1])*(()|[1,0][1,1]*)");
    case Primitive::LSTBIT1:
      return reg2("()|(([0,0]|[1,0])*([0,0]|[1,1]))");
    case Primitive::LSTBIT2:
      return reg2("()|[0,0]|[1,0]|(([0,0]|[1,0])*(([0,0]([0,0]|[1,0]))|([1,0]([0,1]|[1,1]))))");
    case Primitive::LSTBIT3:
      return reg2(
          "()|[0,0]|[1,0]|(([0,0]|[1,0])([0,0]|[1,0]))|(([0,0]|[1,0])*(([0,0]([0,0]|[1,0])([0,0]|[1,0]))|"
          "([1,0]([0,0]|[1,0])([0,1]|[1,1]))))");
    case Primitive::FIBNEGFIB:
      return select(cross_equal("x", "y"), {"x", "y"});
    case Primitive::FIBNEGFIB2:
      return select(cross_equal("x", "y", true), {"x", "y"});
    case Primitive::HAS11:
      return reg1("(0|1)*11(0|1)*");
    case Primitive::EQUAL:
      return reg2("([0,0]|[1,1])*");
    case Primitive::COMPL:
      return reg2("[0,0]*([0,1]|[1,0])*");
    case Primitive::ISFIB:
      return reg1("0*10*");
    case Primitive::EVENL:
      return reg1("(0*)|(0*1(0|1)((0|1)(0|1))*)");
    case Primitive::SUFF:
      return reg1("(0|1)*1(00)*1");
    case Primitive::MATCH1:
      return reg2("([0,0]|[1,0])*[1,1]([0,0]|[1,0])*");
    case Primitive::ONEPOS:
      return reg2("[0,0]*(([1,1]([0,0]|[1,0])*)|([1,0]([0,0]|[1,0])*([0,1]|[1,1])([0,0]|[1,0])*))");
    case Primitive::FIRST1MATCH:
      return reg2("[0,0]*[1,1]([0,0]|[0,1]|[1,0]|[1,1])*");
    case Primitive::SUM2:
      return reg2(
          "([0,0]|[1,1])*(([0,1]|[1,0])([0,0]|[1,1])*([0,1]|[1,0])([0,0]|[1,1])*)*([0,1]|[1,0])([0,0]|[1,1])*");
    case Primitive::HAS_T_ONES: {
      if (t < 0) throw std::invalid_argument("HAS_T_ONES: negative count");
      std::string spec = "0*";
      for (int i = 0; i < t; ++i) spec += "10*";
      return reg1(spec);
    }
    case Primitive::NO11XY:
      return no11xy();
    case Primitive::KNOTT_COND:
      return knott_cond();
    case Primitive::DVL_COND:
      return dvl_cond();
  }
  throw std::invalid_argument("build_primitive: unknown primitive");
}

const Dfa& primitive(Primitive p, int t) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Dfa> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(p), p == Primitive::HAS_T_ONES ? t : 0);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_primitive(p, t)).first;
  return it->second;
}

std::string primitive_name(Primitive p) {
  for (const auto& [name, q] : name_table())
    if (q == p) return name;
  return "?";
}

Dfa build_primitive(std::string_view name) {
  std::string u = upper(name);
  int t = 0;
  auto open = u.find('(');
  if (open != std::string::npos) {
    if (u.back() != ')') throw std::invalid_argument("unknown primitive: " + std::string(name));
    t = std::stoi(u.substr(open + 1, u.size() - open - 2));
    u = u.substr(0, open);
  }
  auto it = name_table().find(u);
  if (it == name_table().end()) throw std::invalid_argument("unknown primitive: " + std::string(name));
  return build_primitive(it->second, t);
}

}  // namespace phirep
