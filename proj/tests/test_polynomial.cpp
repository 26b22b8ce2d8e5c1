#include "phirep/polynomial.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace phirep;

namespace {

Poly P(std::vector<long long> c) {
  std::vector<Rational> r;
  for (long long x : c) r.emplace_back(x);
  return Poly(r);
}

Matrix random_int_matrix(std::mt19937& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(static_cast<int>(rng() % 5) - 2);
  return m;
}

// p(M) by Horner's rule.
Matrix apply(const Poly& p, const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    Matrix c = Matrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) c(k, k) = p.coeff(i);
    acc = acc + c;
  }
  return acc;
}

bool is_zero(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("arithmetic and division") {
  Poly a = P({-1, -1, 1});  // X^2 - X - 1
  Poly b = P({1, 1});
  auto [q, r] = divmod(a * b + P({3}), b);
  CHECK(q == a);
  CHECK(r == P({3}));
  CHECK(poly_gcd(a * b, b * b) == b.monic());
  CHECK(divides(a, a * b));
  CHECK_FALSE(divides(b * b, a * b));
  CHECK(a.to_string() == "X^2 - X - 1");
  CHECK(a.derivative() == P({-1, 2}));
}

TEST_CASE("minimal polynomials annihilate and have least degree") {
  std::mt19937 rng(17);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + rng() % 5;
    Matrix m = random_int_matrix(rng, n);
    Poly p = minimal_poly(m);
    CHECK(p.leading() == 1);
    CHECK(is_zero(apply(p, m)));
    // No proper monic divisor of p annihilates m.
    for (const auto& f : factor_small(p)) {
      if (!f.irreducible) continue;
      auto [q, r] = divmod(p, f.factor);
      CHECK(r.is_zero());
      CHECK_FALSE(is_zero(apply(q, m)));
    }
  }
  // A Jordan block of size 3 for eigenvalue 2.
  Matrix j(3, 3);
  for (std::size_t i = 0; i < 3; ++i) j(i, i) = 2;
  j(0, 1) = 1;
  j(1, 2) = 1;
  CHECK(minimal_poly(j) == P({-2, 1}) * P({-2, 1}) * P({-2, 1}));
}

TEST_CASE("small-factor splitting multiplies back") {
  std::vector<Poly> parts = {P({-1, 1}), P({1, 1}), P({-1, -1, 1}), P({2, -2, -2, 1}), P({1, 0, 1})};
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    Poly prod = P({1});
    for (int k = 0; k < 4; ++k) prod = prod * parts[rng() % parts.size()];
    auto fs = factor_small(prod);
    Poly back = P({1});
    for (const auto& f : fs)
      for (int k = 0; k < f.multiplicity; ++k) back = back * f.factor;
    CHECK(back == prod);
  }
  auto fs = factor_small(P({-1, 1}) * P({-1, 1}) * P({0, 1}));
  std::string text = factors_to_string(fs);
  CHECK(fs.size() == 2);
  CHECK(text.find("(X - 1)^2") != std::string::npos);
  CHECK(text.find("(X)") != std::string::npos);
}

TEST_CASE("real roots by exact bisection") {
  auto r = real_roots(P({-1, -1, 1}));
  REQUIRE(r.size() == 2);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(std::abs(r[1].approx() - phi) < 1e-11);
  CHECK(std::abs(r[0].approx() + 1 / phi) < 1e-11);
  CHECK(r[1].lo <= r[1].hi);
  // X^3 - 2X^2 - 2X + 2 has three real roots.
  Poly c = P({2, -2, -2, 1});
  auto rc = real_roots(c);
  CHECK(rc.size() == 3);
  for (const auto& x : rc) CHECK(std::abs(c.eval(x.approx())) < 1e-9);
  CHECK(sturm_count(c, Rational(0), Rational(10)) == 2);
  CHECK(sturm_count(P({1, 0, 1}), Rational(-100), Rational(100)) == 0);
}
