#pragma once

// Linear representations f(u) = v * gamma(u_1) ... gamma(u_L) * w with exact
// rational entries.

#include "phirep/automaton.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace phirep {

using Rational = boost::multiprecision::mpq_rational;
using Vec = std::vector<Rational>;

/// Dense square-or-rectangular matrix, row-major.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

Vec row_times(const Vec& v, const Matrix& m);
Vec times_col(const Matrix& m, const Vec& w);
Rational dot(const Vec& a, const Vec& b);

struct LinRep {
  int tracks = 1;
  Vec v;
  std::vector<Matrix> gamma;  // indexed by symbol
  Vec w;

  int rank() const { return static_cast<int>(v.size()); }
  Vec row_after(const Word& u) const;
  Rational eval(const Word& u) const;
  /// Value at the Zeckendorf representation of n (one-track representations).
  Rational eval_zeck(long long n) const;
};

/// Counts, for each word on the tracks not listed in `count_tracks`, the
/// accepted completions on `count_tracks`. Leading zero padding is taken
/// into account by replacing the start vector with its stable image under
/// gamma(0)^K.
LinRep count_linrep(const Dfa& a, const std::vector<int>& count_tracks);

LinRep linrep_add(const LinRep& a, const LinRep& b);
LinRep linrep_sub(const LinRep& a, const LinRep& b);
LinRep linrep_scale(const LinRep& a, const Rational& c);

/// Minimal-rank equivalent representation: observable part first, then the
/// reachable part spanned by v*gamma(u) for words u in breadth-first order.
/// The result has v = e_1 and w listing the values at the basis words.
LinRep linrep_minimize(const LinRep& a);

class NotAutomaticError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Semigroup trick: explores the distinct row vectors v*gamma(u) and emits a
/// DFAO; throws NotAutomaticError beyond `max_states` vectors or when an
/// output is not an integer.
Dfao linrep_to_dfao(const LinRep& a, std::size_t max_states = 10000);

/// Text form: "rank t", optional "tracks k", then sections v, gamma <d> ...,
/// w with rows of integers or p/q rationals.
void write_linrep(std::ostream& os, const LinRep& a);
LinRep read_linrep(std::istream& is);

}  // namespace phirep
