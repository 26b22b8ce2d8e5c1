#pragma once

// Exact arithmetic in Z[phi], Fibonacci-type numeration codecs and the
// greedy base-phi expansion, plus brute-force enumerators used as oracles.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phirep {

using BigInt = boost::multiprecision::cpp_int;

/// F_k for every integer k, with F_{-k} = (-1)^{k+1} F_k.
BigInt fib(long long k);
/// L_k for every integer k, with L_{-k} = (-1)^k L_k.
BigInt lucas(long long k);

/// The element m*phi + n of Z[phi].
class PhiInt {
public:
  PhiInt() = default;
  PhiInt(BigInt m, BigInt n) : m_(std::move(m)), n_(std::move(n)) {}

  static PhiInt integer(BigInt n) { return {0, std::move(n)}; }
  /// phi^k = F_k phi + F_{k-1}, valid for negative k as well.
  static PhiInt power(long long k);

  const BigInt& phi_coeff() const { return m_; }
  const BigInt& unit_coeff() const { return n_; }

  /// Image under the Galois automorphism phi -> 1 - phi.
  PhiInt conjugate() const;
  /// Exact sign of m*phi + n in {-1, 0, 1}; no floating point involved.
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  PhiInt operator-() const { return {-m_, -n_}; }
  PhiInt& operator+=(const PhiInt& o);
  PhiInt& operator-=(const PhiInt& o);
  friend PhiInt operator+(PhiInt a, const PhiInt& b) { return a += b; }
  friend PhiInt operator-(PhiInt a, const PhiInt& b) { return a -= b; }
  friend PhiInt operator*(const PhiInt& a, const PhiInt& b);

  friend bool operator==(const PhiInt&, const PhiInt&) = default;
  friend std::strong_ordering operator<=>(const PhiInt& a, const PhiInt& b);

private:
  BigInt m_{0};
  BigInt n_{0};
};

/// Sign of (a + b*sqrt(5)) for exact integers.
int sign_a_plus_b_sqrt5(const BigInt& a, const BigInt& b);

enum class Numeration { zeck, negafib, phi_left, phi_right_rev };

/// A finite 0/1 digit string, most significant digit first.
class BitWord {
public:
  BitWord() = default;
  explicit BitWord(std::string_view digits, Numeration kind = Numeration::zeck);

  const std::string& str() const { return digits_; }
  Numeration kind() const { return kind_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  int operator[](std::size_t i) const { return digits_[i] - '0'; }

  bool has_11() const;
  int count_ones() const;
  bool is_zero() const;
  BitWord strip_leading() const;
  BitWord strip_trailing() const;
  BitWord reversed() const;
  /// Left-pads with zeros up to `len` digits (no-op if already longer).
  BitWord padded(std::size_t len) const;
  BitWord with_kind(Numeration k) const;
  /// Leading zeros removed; the empty word shows as "0".
  std::string display() const;

  friend bool operator==(const BitWord&, const BitWord&) = default;
  friend auto operator<=>(const BitWord& a, const BitWord& b) { return a.digits_ <=> b.digits_; }

private:
  std::string digits_;
  Numeration kind_ = Numeration::zeck;
};

/// [left . right]_phi with `right` holding a_{-1} a_{-2} ... (not reversed).
struct PhiExpansion {
  BitWord left;
  BitWord right;

  PhiExpansion() : left("", Numeration::phi_left), right("", Numeration::phi_right_rev) {}
  PhiExpansion(std::string_view l, std::string_view r)
      : left(l, Numeration::phi_left), right(r, Numeration::phi_right_rev) {}

  /// Parses "LEFT.RIGHT"; either side may be empty.
  static PhiExpansion parse(std::string_view text);
  /// Builds the expansion x . y^R from a folded pair.
  static PhiExpansion from_folded(std::string_view x, std::string_view y);

  /// Leading zeros of the left part and trailing zeros of the right part removed.
  PhiExpansion normalized() const;
  bool is_canonical() const;
  int count_ones() const { return left.count_ones() + right.count_ones(); }
  /// Length of the left part without leading zeros.
  std::size_t left_length() const { return left.strip_leading().size(); }
  std::size_t right_length() const { return right.strip_trailing().size(); }
  /// Digit d_i: i >= 0 reads the left part, i < 0 the right part.
  int digit(long i) const;
  /// Folded pair (x, y^R) zero-padded to a common length of at least `min_len`.
  std::pair<std::string, std::string> folded(std::size_t min_len = 0) const;
  std::string to_string() const;

  friend bool operator==(const PhiExpansion& a, const PhiExpansion& b);
  friend bool operator<(const PhiExpansion& a, const PhiExpansion& b);
};

BitWord zeck_encode(const BigInt& n);
BigInt zeck_eval(const BitWord& x);
BitWord negafib_encode(const BigInt& z);
BigInt negafib_eval(const BitWord& x);
/// Lucas-weighted value sum e_i L_i with least weight L_0.
BigInt lucas_eval(const BitWord& x);

/// Direct power sum over both parts.
PhiInt phi_eval(const PhiExpansion& e);
/// Same value via the shifted Zeckendorf / negaFibonacci decomposition.
PhiInt phi_eval_split(const PhiExpansion& e);

/// Greedy canonical expansion of z >= 0. Throws std::domain_error for z < 0.
PhiExpansion phi_canonical(const PhiInt& z);
PhiExpansion phi_canonical(long long n);

using RepFilter = std::function<bool(const PhiExpansion&)>;

namespace filters {
RepFilter any();
RepFilter no_11();
/// Does not end in 011 once trailing zeros are dropped.
RepFilter knott();
/// 11 only as d1 d0 with d_{-1} = 0; a nonzero expansion with
/// d1 = d0 = d_{-1} = 0 is not allowed (its tail is written ...011 instead).
RepFilter dvl();
/// Right part as long as the right part of the canonical expansion of n.
RepFilter natural(long long n);
}  // namespace filters

bool is_knott(const PhiExpansion& e);
bool is_dvl(const PhiExpansion& e);

/// All expansions of `target` with at most `left_len` digits left of the point
/// and `right_len` right of it that satisfy `filter`, normalized and in
/// lexicographic order of the padded digit string. Bounds must be <= 44.
std::vector<PhiExpansion> enumerate_phi_reps(const PhiInt& target, int left_len, int right_len,
                                             const RepFilter& filter);
std::vector<PhiExpansion> enumerate_phi_reps(long long n, int left_len, int right_len,
                                             const RepFilter& filter);

struct SaturatedReps {
  std::vector<PhiExpansion> reps;
  bool saturated = false;
};
/// Runs the enumeration at the given bounds and again at bounds + 2; the
/// result is trusted only when both runs agree.
SaturatedReps enumerate_phi_reps_saturated(long long n, int left_len, int right_len,
                                           const RepFilter& filter);

/// All no-11 words x with sum e_i L_i = n (at most two exist).
std::vector<BitWord> lucas_reps(const BigInt& n);

/// floor(phi * n) for n >= 0, exactly.
BigInt floor_phi_times(const BigInt& n);

}  // namespace phirep
