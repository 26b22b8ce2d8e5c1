#include "phirep/primitives.hpp"
#include "phirep/relation.hpp"
#include "phirep/zphi.hpp"

#include <doctest.h>

#include <functional>

using namespace phirep;

namespace {

std::string bits(unsigned v, int len) {
  std::string s;
  for (int j = len - 1; j >= 0; --j) s += static_cast<char>('0' + ((v >> j) & 1));
  return s;
}

int ones(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '1')); }
bool no11(const std::string& s) { return s.find("11") == std::string::npos; }
std::string strip(const std::string& s) {
  auto p = s.find('1');
  return p == std::string::npos ? "" : s.substr(p);
}

// Every pair of equal-length words up to max_len.
void for_pairs(int max_len, const std::function<void(const std::string&, const std::string&)>& f) {
  for (int len = 0; len <= max_len; ++len)
    for (unsigned x = 0; x < (1u << len); ++x)
      for (unsigned y = 0; y < (1u << len); ++y) f(bits(x, len), bits(y, len));
}

void for_words(int max_len, const std::function<void(const std::string&)>& f) {
  for (int len = 0; len <= max_len; ++len)
    for (unsigned x = 0; x < (1u << len); ++x) f(bits(x, len));
}

}  // namespace

TEST_CASE("FIBNORM exhaustively on pairs up to length 10") {
  const Dfa& a = primitive(Primitive::FIBNORM);
  CHECK(a.state_count() == 4);
  for_pairs(10, [&](const std::string& x, const std::string& y) {
    bool want = no11(y) && zeck_eval(BitWord(x)) == zeck_eval(BitWord(y));
    CHECK(accepts(a, {x, y}) == want);
  });
}

TEST_CASE("NEGFIBNORM exhaustively on pairs up to length 9") {
  const Dfa& a = primitive(Primitive::NEGFIBNORM);
  CHECK(a.state_count() == 4);
  for_pairs(9, [&](const std::string& x, const std::string& y) {
    bool want = no11(y) && negafib_eval(BitWord(x, Numeration::negafib)) == negafib_eval(BitWord(y, Numeration::negafib));
    CHECK(accepts(a, {x, y}) == want);
  });
}

TEST_CASE("Zeckendorf / negaFibonacci converters") {
  const Dfa& eq = primitive(Primitive::FIBNEGFIB);
  const Dfa& neg = primitive(Primitive::FIBNEGFIB2);
  for_pairs(8, [&](const std::string& x, const std::string& y) {
    bool valid = no11(x) && no11(y);
    BigInt zx = zeck_eval(BitWord(x)), ny = negafib_eval(BitWord(y, Numeration::negafib));
    CHECK(accepts(eq, {x, y}) == (valid && zx == ny));
    CHECK(accepts(neg, {x, y}) == (valid && zx == -ny));
  });
}

TEST_CASE("shifts, equality, complement and digit predicates on pairs") {
  for_pairs(8, [](const std::string& x, const std::string& y) {
    const std::size_t n = x.size();
    CHECK(accepts(primitive(Primitive::SHIFTL), {x, y}) == (n == 0 || (x[0] == '0' && y == x.substr(1) + "0")));
    CHECK(accepts(primitive(Primitive::SHIFTR), {x, y}) == (n == 0 || y == "0" + x.substr(0, n - 1)));
    CHECK(accepts(primitive(Primitive::EQUAL), {x, y}) == (x == y));
    bool compl_ok = true, lead = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (lead && x[i] == '0' && y[i] == '0') continue;
      lead = false;
      if (x[i] == y[i]) compl_ok = false;
    }
    CHECK(accepts(primitive(Primitive::COMPL), {x, y}) == compl_ok);
    std::size_t py = y.find('1');
    bool one_y = ones(y) == 1;
    CHECK(accepts(primitive(Primitive::MATCH1), {x, y}) == (one_y && x[py] == '1'));
    CHECK(accepts(primitive(Primitive::ONEPOS), {x, y}) ==
          (one_y && x.find('1') != std::string::npos && py >= x.find('1')));
    CHECK(accepts(primitive(Primitive::FIRST1MATCH), {x, y}) == (x.find('1') != std::string::npos &&
                                                                  x.find('1') == y.find('1')));
    CHECK(accepts(primitive(Primitive::SUM2), {x, y}) == ((ones(x) + ones(y)) % 2 == 1));
    CHECK(accepts(primitive(Primitive::LSTBIT1), {x, y}) ==
          (n == 0 || y == std::string(n - 1, '0') + x.back()));
  });
}

TEST_CASE("one-track predicates") {
  for_words(12, [](const std::string& x) {
    CHECK(accepts(primitive(Primitive::HAS11), {x}) == !no11(x));
    CHECK(accepts(primitive(Primitive::ISFIB), {x}) == (ones(x) == 1));
    CHECK(accepts(primitive(Primitive::EVENL), {x}) == (strip(x).size() % 2 == 0));
    bool suff = false;
    if (x.size() >= 2 && x.back() == '1') {
      std::size_t j = x.size() - 1, zeros = 0;
      while (j > 0 && x[j - 1] == '0') --j, ++zeros;
      suff = j > 0 && zeros % 2 == 0;
    }
    CHECK(accepts(primitive(Primitive::SUFF), {x}) == suff);
    for (int t = 0; t <= 4; ++t) CHECK(accepts(primitive(Primitive::HAS_T_ONES, t), {x}) == (ones(x) == t));
  });
}

TEST_CASE("names resolve to the same automata") {
  CHECK(equivalent(build_primitive("fibnorm"), primitive(Primitive::FIBNORM)));
  CHECK(equivalent(build_primitive("has_t_ones(3)"), primitive(Primitive::HAS_T_ONES, 3)));
  CHECK(primitive_name(Primitive::FIBNEGFIB2) == "FIBNEGFIB2");
  CHECK_THROWS(build_primitive("nosuchthing"));
}

TEST_CASE("linear relations against direct evaluation") {
  // x + y = z in Zeckendorf, all canonical.
  Dfa add = select(sum_relation("z", "x", "y", NumSys::zeck), {"x", "y", "z"});
  for (long long x = 0; x <= 40; ++x)
    for (long long y = 0; y <= 40; ++y)
      for (long long z : {x + y, x + y + 1}) {
        auto xs = zeck_encode(x).str(), ys = zeck_encode(y).str(), zs = zeck_encode(z).str();
        CHECK(accepts(add, {xs, ys, zs}) == (z == x + y));
      }
  Dfa c = constant_relation("x", -7, NumSys::negafib);
  for (long long v = -20; v <= 20; ++v) CHECK(accepts(c, {negafib_encode(v).str()}) == (v == -7));
}

TEST_CASE("quantifiers over named tracks") {
  // Exists y: x = y + 1 in Zeckendorf holds exactly for x >= 1.
  Dfa succ = linear_relation({{"x", NumSys::zeck, 1, 0}, {"y", NumSys::zeck, -1, 0}}, 1, true);
  Dfa pos = exists(succ, {"y"});
  for (long long x = 0; x <= 100; ++x) CHECK(accepts(pos, {zeck_encode(x).str()}) == (x >= 1));
  Dfa r = rename(named(primitive(Primitive::EQUAL), {"a", "b"}), "b", "c");
  CHECK(r.names == std::vector<std::string>{"a", "c"});
  Dfa diag = instantiate(primitive(Primitive::COMPL), {"u", "u"});
  CHECK(accepts(diag, {"000"}));
  CHECK_FALSE(accepts(diag, {"010"}));
}
