#pragma once

// Univariate polynomials over the rationals, matrix minimal polynomials,
// small-factor splitting and exact real-root isolation.

#include "phirep/linrep.hpp"

#include <string>
#include <utility>
#include <vector>

namespace phirep {

class Poly {
public:
  Poly() = default;
  /// Coefficients lowest degree first.
  explicit Poly(std::vector<Rational> coeffs);
  static Poly x_pow(int k);
  static Poly constant(const Rational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Poly monic() const;
  Poly derivative() const;
  Rational eval(const Rational& x) const;
  double eval(double x) const;
  /// Text like "X^3 - 2X^2 - 2X + 2".
  std::string to_string() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic
Poly poly_lcm(const Poly& a, const Poly& b);  // monic
bool divides(const Poly& d, const Poly& p);

/// Least-degree monic polynomial annihilating m, via Krylov sequences.
Poly minimal_poly(const Matrix& m);

struct Factor {
  Poly factor;
  int multiplicity = 1;
  /// False for a leftover cofactor no small candidate divides.
  bool irreducible = true;
};

/// Splits a monic integer polynomial by trial division with monic integer
/// candidates of degree <= 4 and coefficients in [-3, 3]; any remaining
/// cofactor is returned as one factor marked not known irreducible. Order:
/// degree, then coefficients lexicographically.
std::vector<Factor> factor_small(const Poly& p);
std::string factors_to_string(const std::vector<Factor>& f);

struct RootInterval {
  Rational lo;
  Rational hi;
  double approx() const;
};

/// Isolating intervals for the distinct real roots of p, in increasing
/// order, each refined by exact bisection to width <= `width`.
std::vector<RootInterval> real_roots(const Poly& p, const Rational& width = Rational(1, 1000000000000LL));

/// Number of distinct real roots in (a, b] by Sturm's theorem.
int sturm_count(const Poly& p, const Rational& a, const Rational& b);

}  // namespace phirep
