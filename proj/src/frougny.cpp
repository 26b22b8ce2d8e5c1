#include "phirep/frougny.hpp"

#include "phirep/primitives.hpp"
#include "phirep/relation.hpp"

#include <mutex>

namespace phirep {

namespace {

Dfa prim(Primitive p, const std::vector<std::string>& args) { return instantiate(primitive(p), args); }

Dfa sum3(const std::string& z, const std::string& a, const std::string& b, const std::string& c) {
  return linear_relation({{z, NumSys::zeck, 1, 0}, {a, NumSys::zeck, -1, 0}, {b, NumSys::zeck, -1, 0},
                          {c, NumSys::zeck, -1, 0}},
                         0, true);
}

}  // namespace

Dfa build_phipartleft() {
  Dfa f = conj(prim(Primitive::SHIFTR, {"x", "r"}), prim(Primitive::SHIFTR, {"r", "s"}));
  f = conj(f, prim(Primitive::FIBNORM, {"s", "y"}));
  f = conj(f, prim(Primitive::LSTBIT2, {"x", "b"}));
  f = conj(f, sum_relation("z", "y", "b", NumSys::zeck));
  return select(exists(f, {"r", "s", "y", "b"}), {"x", "z"});
}

Dfa build_intpartleft() {
  Dfa f = conj(prim(Primitive::SHIFTR, {"x", "r"}), prim(Primitive::SHIFTR, {"r", "s"}));
  f = conj(f, prim(Primitive::SHIFTR, {"s", "t"}));
  f = exists(f, {"r", "s"});
  f = conj(f, prim(Primitive::FIBNORM, {"t", "y"}));
  f = exists(f, {"t"});
  f = conj(f, prim(Primitive::LSTBIT1, {"x", "b"}));
  f = conj(f, prim(Primitive::LSTBIT3, {"x", "c"}));
  f = conj(f, sum3("z", "y", "b", "c"));
  return select(exists(f, {"y", "b", "c"}), {"x", "z"});
}

Dfa build_phipartright() { return prim(Primitive::NEGFIBNORM, {"x", "z"}); }

Dfa build_intpartright() {
  Dfa f = conj(prim(Primitive::SHIFTL, {"x", "r"}), prim(Primitive::NEGFIBNORM, {"r", "z"}));
  return select(exists(f, {"r"}), {"x", "z"});
}

Dfa build_frougny1() {
  Dfa f = conj(instantiate(build_phipartleft(), {"x", "t1"}), instantiate(build_phipartright(), {"y", "t2"}));
  f = conj(f, prim(Primitive::FIBNEGFIB2, {"t1", "t2"}));
  return select(exists(f, {"t1", "t2"}), {"x", "y"});
}

Dfa build_frougny2() {
  Dfa parts = conj(instantiate(build_intpartleft(), {"x", "t1"}), instantiate(build_intpartright(), {"y", "t2"}));
  // t2 < 0: t1 = n + x2 with x2 = -t2; otherwise n = t1 + x2 with x2 = t2.
  Dfa neg = conj(negafib_negative("t2"), prim(Primitive::FIBNEGFIB2, {"x2", "t2"}));
  neg = conj(neg, sum_relation("t1", "n", "x2", NumSys::zeck));
  Dfa nonneg = conj(negate(negafib_negative("t2")), prim(Primitive::FIBNEGFIB, {"x2", "t2"}));
  nonneg = conj(nonneg, sum_relation("n", "t1", "x2", NumSys::zeck));
  Dfa f = conj(parts, disj(neg, nonneg));
  return select(exists(f, {"t1", "t2", "x2"}), {"n", "x", "y"});
}

Dfa build_frougny() {
  Dfa f = conj(build_frougny2(), build_frougny1());
  return select(fix_leading_zeros(select(f, {"n", "x", "y"})), {"n", "x", "y"});
}

Dfa build_saka() {
  Dfa f = conj(frougny(), primitive(Primitive::NO11XY));
  return select(fix_leading_zeros(select(f, {"n", "x", "y"})), {"n", "x", "y"});
}

Dfa build_genfrou() {
  Dfa intl = conj(instantiate(build_intpartleft(), {"x", "z"}), prim(Primitive::FIBNEGFIB, {"z", "t"}));
  intl = exists(intl, {"z"});
  Dfa intr = instantiate(build_intpartright(), {"y", "u"});
  Dfa n_part = exists(conj(conj(intl, intr), sum_relation("n", "t", "u", NumSys::negafib)), {"t", "u"});
  Dfa phil = conj(instantiate(build_phipartleft(), {"x", "q"}), prim(Primitive::FIBNEGFIB, {"q", "s"}));
  phil = exists(phil, {"q"});
  Dfa phir = instantiate(build_phipartright(), {"y", "r"});
  Dfa m_part = exists(conj(conj(phil, phir), sum_relation("m", "r", "s", NumSys::negafib)), {"r", "s"});
  Dfa f = conj(m_part, n_part);
  return select(fix_leading_zeros(select(f, {"m", "n", "x", "y"})), {"m", "n", "x", "y"});
}

Dfa build_canfrou() {
  Dfa f = conj(genfrou(), primitive(Primitive::NO11XY));
  return select(fix_leading_zeros(select(f, {"m", "n", "x", "y"})), {"m", "n", "x", "y"});
}

// With V, V' the Zeckendorf pair of x and R, S the negaFibonacci pair of y,
// [x.]_phi = (V - V') phi + (2V' - V) and [.x^R]_phi = R phi + (S - R).

Dfa build_frougny_direct() {
  Dfa phi_part = linear_relation({{"x", NumSys::zeck, 1, -1}, {"y", NumSys::negafib, 1, 0}}, 0, false);
  Dfa int_part = linear_relation(
      {{"x", NumSys::zeck, -1, 2}, {"y", NumSys::negafib, -1, 1}, {"n", NumSys::zeck, -1, 0}}, 0, false);
  Dfa f = conj(conj(phi_part, int_part), canonical("n"));
  return select(fix_leading_zeros(select(f, {"n", "x", "y"})), {"n", "x", "y"});
}

Dfa build_genfrou_direct() {
  Dfa phi_part = linear_relation(
      {{"x", NumSys::zeck, 1, -1}, {"y", NumSys::negafib, 1, 0}, {"m", NumSys::negafib, -1, 0}}, 0, false);
  Dfa int_part = linear_relation(
      {{"x", NumSys::zeck, -1, 2}, {"y", NumSys::negafib, -1, 1}, {"n", NumSys::negafib, -1, 0}}, 0, false);
  Dfa f = conj(conj(phi_part, int_part), canonical_all({"m", "n"}));
  return select(fix_leading_zeros(select(f, {"m", "n", "x", "y"})), {"m", "n", "x", "y"});
}

const Dfa& frougny() {
  static const Dfa a = build_frougny();
  return a;
}

const Dfa& saka() {
  static const Dfa a = build_saka();
  return a;
}

const Dfa& genfrou() {
  static const Dfa a = build_genfrou();
  return a;
}

const Dfa& canfrou() {
  static const Dfa a = build_canfrou();
  return a;
}

std::optional<std::vector<std::string>> find_completion(const Dfa& a, const std::vector<int>& fixed,
                                                        const std::vector<std::string>& values, int extra) {
  if (fixed.size() != values.size()) throw std::invalid_argument("find_completion: size mismatch");
  const int k = a.tracks;
  const int A = a.alphabet_size();
  std::vector<int> is_fixed(static_cast<std::size_t>(k), -1);
  for (std::size_t i = 0; i < fixed.size(); ++i) is_fixed[static_cast<std::size_t>(fixed[i])] = static_cast<int>(i);
  std::size_t base = 0;
  for (const auto& v : values) base = std::max(base, v.size());

  for (int pad = 0; pad <= extra; ++pad) {
    const std::size_t len = base + static_cast<std::size_t>(pad);
    // Allowed symbols per position given the fixed digits.
    auto digit_at = [&](std::size_t i, int j) {
      const auto& v = values[static_cast<std::size_t>(is_fixed[static_cast<std::size_t>(j)])];
      const std::size_t off = len - v.size();
      return i < off ? 0 : v[i - off] - '0';
    };
    auto allowed = [&](std::size_t i, Symbol s) {
      for (int j = 0; j < k; ++j)
        if (is_fixed[static_cast<std::size_t>(j)] >= 0 && symbol_digit(s, j, k) != digit_at(i, j)) return false;
      return true;
    };
    // good[i][q]: from q at position i an accepting state is reachable.
    std::vector<std::vector<char>> good(len + 1, std::vector<char>(static_cast<std::size_t>(a.state_count()), 0));
    for (int q = 0; q < a.state_count(); ++q) good[len][static_cast<std::size_t>(q)] = a.accepting[static_cast<std::size_t>(q)];
    for (std::size_t i = len; i-- > 0;)
      for (int q = 0; q < a.state_count(); ++q)
        for (int s = 0; s < A && !good[i][static_cast<std::size_t>(q)]; ++s) {
          if (!allowed(i, static_cast<Symbol>(s))) continue;
          int t = a.next(q, static_cast<Symbol>(s));
          if (t != kNoState && good[i + 1][static_cast<std::size_t>(t)]) good[i][static_cast<std::size_t>(q)] = 1;
        }
    if (!good[0][static_cast<std::size_t>(a.initial)]) continue;
    Word w;
    int q = a.initial;
    for (std::size_t i = 0; i < len; ++i)
      for (int s = 0; s < A; ++s) {
        if (!allowed(i, static_cast<Symbol>(s))) continue;
        int t = a.next(q, static_cast<Symbol>(s));
        if (t != kNoState && good[i + 1][static_cast<std::size_t>(t)]) {
          w.push_back(static_cast<Symbol>(s));
          q = t;
          break;
        }
      }
    auto tracks = split_word(w, k);
    std::vector<std::string> out;
    for (int j = 0; j < k; ++j)
      if (is_fixed[static_cast<std::size_t>(j)] < 0) out.push_back(tracks[static_cast<std::size_t>(j)]);
    return out;
  }
  return std::nullopt;
}

PhiExpansion phi_rep_via_automaton(long long n) {
  if (n < 0) throw std::domain_error("phi_rep_via_automaton: negative input");
  auto c = find_completion(saka(), {0}, {zeck_encode(n).str()}, 4);
  if (!c) throw std::logic_error("saka has no completion for " + std::to_string(n));
  return PhiExpansion::from_folded((*c)[0], (*c)[1]).normalized();
}

std::optional<PhiExpansion> phi_rep_via_automaton(long long m, long long n) {
  auto c = find_completion(canfrou(), {0, 1}, {negafib_encode(m).str(), negafib_encode(n).str()}, 4);
  if (!c) return std::nullopt;
  return PhiExpansion::from_folded((*c)[0], (*c)[1]).normalized();
}

}  // namespace phirep
