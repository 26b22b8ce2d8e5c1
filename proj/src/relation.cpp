#include "phirep/relation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <tuple>

namespace phirep {

namespace {

int index_of(const std::vector<std::string>& names, const std::string& v) {
  auto it = std::find(names.begin(), names.end(), v);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

void require_names(const Dfa& a, const char* op) {
  if (static_cast<int>(a.names.size()) != a.tracks) throw std::invalid_argument(std::string(op) + ": unnamed tracks");
}

std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (index_of(out, v) < 0) out.push_back(v);
  return out;
}

}  // namespace

Dfa named(Dfa a, std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != a.tracks) throw std::invalid_argument("named: wrong number of names");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw std::invalid_argument("named: duplicate name " + names[i]);
  a.names = std::move(names);
  return a;
}

Dfa named_regex(std::string_view spec, std::vector<std::string> names) {
  Dfa a = compile_regex(spec, static_cast<int>(names.size()));
  return named(std::move(a), std::move(names));
}

Dfa select(const Dfa& a, const std::vector<std::string>& order) {
  require_names(a, "select");
  std::vector<int> where;
  for (const auto& v : a.names) {
    int i = index_of(order, v);
    if (i < 0) throw std::invalid_argument("select: variable " + v + " missing from target order");
    where.push_back(i);
  }
  bool identity = static_cast<int>(order.size()) == a.tracks;
  for (int j = 0; identity && j < a.tracks; ++j) identity = where[static_cast<std::size_t>(j)] == j;
  if (identity) return a;
  Dfa out = remap_tracks(a, static_cast<int>(order.size()), where);
  out.names = order;
  return out;
}

Dfa conj(const Dfa& a, const Dfa& b) {
  require_names(a, "conj");
  require_names(b, "conj");
  auto vars = merged(a.names, b.names);
  Dfa out = product(select(a, vars), select(b, vars), BoolOp::And);
  out.names = vars;
  return out;
}

Dfa disj(const Dfa& a, const Dfa& b) {
  require_names(a, "disj");
  require_names(b, "disj");
  auto vars = merged(a.names, b.names);
  Dfa out = product(select(a, vars), select(b, vars), BoolOp::Or);
  out.names = vars;
  return out;
}

Dfa negate(const Dfa& a) {
  Dfa out = complement(a);
  out.names = a.names;
  return out;
}

Dfa exists(const Dfa& a, const std::vector<std::string>& vars) {
  require_names(a, "exists");
  std::vector<int> keep;
  for (int j = 0; j < a.tracks; ++j)
    if (std::find(vars.begin(), vars.end(), a.names[static_cast<std::size_t>(j)]) == vars.end()) keep.push_back(j);
  for (const auto& v : vars)
    if (index_of(a.names, v) < 0) throw std::invalid_argument("exists: unknown variable " + v);
  if (keep.empty()) throw std::invalid_argument("exists: cannot quantify every variable");
  return project(a, keep);
}

Dfa rename(const Dfa& a, const std::string& from, const std::string& to) {
  require_names(a, "rename");
  int i = index_of(a.names, from);
  if (i < 0) throw std::invalid_argument("rename: unknown variable " + from);
  if (from == to) return a;
  if (index_of(a.names, to) < 0) {
    Dfa out = a;
    out.names[static_cast<std::size_t>(i)] = to;
    return out;
  }
  Dfa eq = named_regex("([0,0]|[1,1])*", {from, to});
  return exists(conj(a, eq), {from});
}

Dfa instantiate(const Dfa& a, const std::vector<std::string>& args) {
  require_names(a, "instantiate");
  if (static_cast<int>(args.size()) != a.tracks) throw std::invalid_argument("instantiate: wrong number of arguments");
  Dfa out = a;
  for (int j = 0; j < a.tracks; ++j) out.names[static_cast<std::size_t>(j)] = "#" + std::to_string(j);
  for (int j = 0; j < a.tracks; ++j) out = rename(out, "#" + std::to_string(j), args[static_cast<std::size_t>(j)]);
  return out;
}

Dfa canonical(const std::string& var) { return named_regex("0*(100*)*(1|())", {var}); }

Dfa canonical_all(const std::vector<std::string>& vars) {
  Dfa out = canonical(vars.at(0));
  for (std::size_t i = 1; i < vars.size(); ++i) out = conj(out, canonical(vars[i]));
  return out;
}

Dfa exists_canon(const Dfa& a, const std::vector<std::string>& vars) {
  Dfa b = a;
  for (const auto& v : vars) b = conj(b, canonical(v));
  return exists(b, vars);
}

// ---------------------------------------------------- linear relations
//
// Reading one digit tuple most significant first, the state (U, V) evolves
// as U' = U + V + e1, V' = U + e2, so a pair injected with r steps to go
// adds e1 F_{r+1} + e2 F_r to the final U. Zeckendorf terms inject
// constant pairs; negaFibonacci terms alternate in sign with the number of
// digits left, tracked as sigma. Both parities of the total length are
// guessed at the start.

Dfa linear_relation(const std::vector<LinearTerm>& terms, long long rhs, bool canonical_tracks) {
  std::vector<std::string> vars;
  std::vector<NumSys> sys;
  for (const auto& t : terms) {
    int i = index_of(vars, t.var);
    if (i < 0) {
      vars.push_back(t.var);
      sys.push_back(t.sys);
    } else if (sys[static_cast<std::size_t>(i)] != t.sys) {
      throw std::invalid_argument("linear_relation: variable " + t.var + " used in two systems");
    }
  }
  const int k = static_cast<int>(vars.size());
  if (k == 0 || k > kMaxTracks) throw std::invalid_argument("linear_relation: bad variable count");
  const int A = 1 << k;

  // Per symbol: (z1, z2) from Zeckendorf tracks, (f1, f2) from negaFibonacci.
  std::vector<std::array<long long, 4>> inc(static_cast<std::size_t>(A), {0, 0, 0, 0});
  for (int s = 0; s < A; ++s)
    for (const auto& t : terms) {
      int j = index_of(vars, t.var);
      if (!symbol_digit(static_cast<Symbol>(s), j, k)) continue;
      auto& e = inc[static_cast<std::size_t>(s)];
      if (t.sys == NumSys::zeck) {
        e[0] += t.p + t.q;
        e[1] += t.p;
      } else {
        e[2] += t.p;
        e[3] += t.q;
      }
    }

  const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
  const long double psi = 1.0L - phi;
  long double bound_b = 0, bound_c = 0;
  for (const auto& e : inc)
    for (int sigma : {1, -1}) {
      long double e1 = static_cast<long double>(e[0] - sigma * e[2]);
      long double e2 = static_cast<long double>(e[1] + sigma * e[3]);
      bound_b = std::max(bound_b, std::fabs(psi * e1 + e2));
      bound_c = std::max(bound_c, std::fabs(phi * e1 + e2));
    }
  bound_b /= (1.0L - std::fabs(psi));
  const long double limit_a = std::sqrt(5.0L) * std::fabs(static_cast<long double>(rhs)) + bound_b + bound_c * phi + 1.0L;

  Nfa n(k);
  std::map<std::tuple<long long, long long, int>, int> index;
  std::vector<std::tuple<long long, long long, int>> states;
  auto intern = [&](long long u, long long v, int sigma) {
    auto key = std::make_tuple(u, v, sigma);
    auto [it, fresh] = index.emplace(key, n.state_count());
    if (fresh) {
      n.add_state(sigma == 1 && u == rhs);
      states.push_back(key);
    }
    return it->second;
  };
  n.initial = {intern(0, 0, 1), intern(0, 0, -1)};
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [u, v, sigma] = states[i];
    for (int s = 0; s < A; ++s) {
      const auto& e = inc[static_cast<std::size_t>(s)];
      long long nu = u + v + e[0] - sigma * e[2];
      long long nv = u + e[1] + sigma * e[3];
      long double a = phi * static_cast<long double>(nu) + static_cast<long double>(nv);
      if (std::fabs(a) > limit_a) continue;
      n.add_edge(static_cast<int>(i), static_cast<Symbol>(s), intern(nu, nv, -sigma));
    }
  }
  Dfa out = minimize(determinize(n));
  out.names = vars;
  if (canonical_tracks) out = conj(out, canonical_all(vars));
  return out;
}

Dfa sum_relation(const std::string& z, const std::string& x, const std::string& y, NumSys sys) {
  if (x == y) return linear_relation({{z, sys, 1, 0}, {x, sys, -2, 0}}, 0, true);
  return linear_relation({{z, sys, 1, 0}, {x, sys, -1, 0}, {y, sys, -1, 0}}, 0, true);
}

Dfa constant_relation(const std::string& x, long long c, NumSys sys) {
  return linear_relation({{x, sys, 1, 0}}, c, true);
}

Dfa cross_equal(const std::string& x, const std::string& y, bool negated) {
  return linear_relation({{x, NumSys::zeck, 1, 0}, {y, NumSys::negafib, negated ? 1 : -1, 0}}, 0, true);
}

Dfa negafib_negative(const std::string& x) {
  // The leading 1 of a canonical word sits at an even index exactly when the
  // value is negative.
  return conj(named_regex("0*1(0|1)((0|1)(0|1))*", {x}), canonical(x));
}

}  // namespace phirep
