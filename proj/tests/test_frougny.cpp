#include "phirep/frougny.hpp"
#include "phirep/relation.hpp"

#include <doctest.h>

#include <set>

using namespace phirep;

TEST_CASE("frougny and genfrou agree with the direct coefficient constructions") {
  CHECK(equivalent(frougny(), build_frougny_direct()));
  CHECK(equivalent(genfrou(), build_genfrou_direct()));
  CHECK(frougny().state_count() == 116);
  CHECK(saka().state_count() == 39);
}

TEST_CASE("frougny accepts exactly the enumerated expansions for small n") {
  const int B = 8;
  for (long long n = 0; n <= 20; ++n) {
    std::set<std::string> from_enum;
    for (const auto& e : enumerate_phi_reps(n, B, B, filters::any())) {
      auto [x, y] = e.folded(B);
      from_enum.insert(x + "|" + y);
    }
    std::set<std::string> from_automaton;
    std::string z = zeck_encode(n).padded(B).str();
    // All (x, y) of length B.
    for (unsigned x = 0; x < (1u << B); ++x)
      for (unsigned y = 0; y < (1u << B); ++y) {
        std::string xs, ys;
        for (int j = B - 1; j >= 0; --j) {
          xs += static_cast<char>('0' + ((x >> j) & 1));
          ys += static_cast<char>('0' + ((y >> j) & 1));
        }
        if (accepts(frougny(), {z, xs, ys})) from_automaton.insert(xs + "|" + ys);
      }
    CHECK(from_automaton == from_enum);
  }
}

TEST_CASE("saka reads off canonical expansions") {
  for (long long n = 0; n <= 500; ++n) CHECK(phi_rep_via_automaton(n) == phi_canonical(n));
}

TEST_CASE("canfrou reads off canonical expansions of m phi + n") {
  for (long long m = -12; m <= 12; ++m)
    for (long long n = -12; n <= 12; ++n) {
      PhiInt z(m, n);
      auto got = phi_rep_via_automaton(m, n);
      if (z.sign() < 0) {
        CHECK_FALSE(got.has_value());
      } else {
        REQUIRE(got.has_value());
        CHECK(*got == phi_canonical(z));
      }
    }
}

TEST_CASE("saka is the canonical part of frougny") {
  Dfa canon = conj(instantiate(frougny(), {"n", "x", "y"}), canonical_all({"x", "y"}));
  // Canonical also forbids 11 across the point and the trailing 0101... forms,
  // so saka is contained in the no-11 part.
  Dfa s = instantiate(saka(), {"n", "x", "y"});
  CHECK(is_empty(conj(s, negate(canon))));
}

TEST_CASE("find_completion returns a valid completion") {
  auto c = find_completion(frougny(), {0}, {zeck_encode(3).str()}, 4);
  REQUIRE(c.has_value());
  PhiExpansion e = PhiExpansion::from_folded((*c)[0], (*c)[1]);
  CHECK(phi_eval(e) == PhiInt::integer(3));
}
