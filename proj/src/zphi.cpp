#include "phirep/zphi.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace phirep {

namespace {

constexpr int kFibTable = 512;

const std::vector<BigInt>& fib_table() {
  static const std::vector<BigInt> table = [] {
    std::vector<BigInt> t(kFibTable);
    t[0] = 0;
    t[1] = 1;
    for (int i = 2; i < kFibTable; ++i) t[i] = t[i - 1] + t[i - 2];
    return t;
  }();
  return table;
}

// Fast doubling for indices beyond the table.
std::pair<BigInt, BigInt> fib_pair(unsigned long long k) {
  if (k == 0) return {0, 1};
  auto [a, b] = fib_pair(k / 2);
  BigInt c = a * (2 * b - a);
  BigInt d = a * a + b * b;
  if (k % 2 == 0) return {c, d};
  return {d, c + d};
}

BigInt fib_nonneg(unsigned long long k) {
  if (k < static_cast<unsigned long long>(kFibTable)) return fib_table()[k];
  return fib_pair(k).first;
}

// Small-integer view of Z[phi] used on hot paths.
struct Small {
  std::int64_t m = 0;
  std::int64_t n = 0;
};

int sign_small(std::int64_t m, std::int64_t n) {
  const __int128 a = static_cast<__int128>(2) * n + m;
  const __int128 b = m;
  if (a >= 0 && b >= 0) return (a > 0 || b > 0) ? 1 : 0;
  if (a <= 0 && b <= 0) return -1;
  const __int128 a2 = a * a;
  const __int128 b2 = 5 * b * b;
  if (a > 0) return a2 > b2 ? 1 : -1;  // b < 0
  return b2 > a2 ? 1 : -1;              // a < 0, b > 0
}

int compare_small(const Small& x, const Small& y) { return sign_small(x.m - y.m, x.n - y.n); }

std::int64_t fib64(long long k) {
  // |k| <= 90 keeps F_k within int64.
  std::int64_t a = 0, b = 1;
  long long ak = k < 0 ? -k : k;
  for (long long i = 0; i < ak; ++i) {
    std::int64_t t = a + b;
    a = b;
    b = t;
  }
  if (k < 0 && ak % 2 == 0) return -a;
  return a;
}

Small power_small(long long k) { return {fib64(k), fib64(k - 1)}; }

std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

PhiExpansion expansion_from_positions(const std::vector<long long>& positions) {
  if (positions.empty()) return PhiExpansion{};
  long long hi = *std::max_element(positions.begin(), positions.end());
  long long lo = *std::min_element(positions.begin(), positions.end());
  std::string left(hi >= 0 ? static_cast<std::size_t>(hi + 1) : 0, '0');
  std::string right(lo < 0 ? static_cast<std::size_t>(-lo) : 0, '0');
  for (long long p : positions) {
    if (p >= 0)
      left[static_cast<std::size_t>(hi - p)] = '1';
    else
      right[static_cast<std::size_t>(-p - 1)] = '1';
  }
  return PhiExpansion(left, right);
}

}  // namespace

BigInt fib(long long k) {
  if (k >= 0) return fib_nonneg(static_cast<unsigned long long>(k));
  unsigned long long a = static_cast<unsigned long long>(-k);
  BigInt f = fib_nonneg(a);
  return (a % 2 == 0) ? BigInt(-f) : f;
}

BigInt lucas(long long k) { return fib(k + 1) + fib(k - 1); }

PhiInt PhiInt::power(long long k) { return {fib(k), fib(k - 1)}; }

PhiInt PhiInt::conjugate() const { return {-m_, m_ + n_}; }

int sign_a_plus_b_sqrt5(const BigInt& a, const BigInt& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  const BigInt a2 = a * a;
  const BigInt b2 = 5 * b * b;
  if (sa > 0) return a2 > b2 ? 1 : -1;
  return b2 > a2 ? 1 : -1;
}

int PhiInt::sign() const { return sign_a_plus_b_sqrt5(2 * n_ + m_, m_); }

double PhiInt::to_double() const {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  return m_.convert_to<double>() * phi + n_.convert_to<double>();
}

std::string PhiInt::to_string() const {
  std::ostringstream os;
  os << m_ << "*phi" << (n_ < 0 ? " - " : " + ") << boost::multiprecision::abs(n_);
  return os.str();
}

PhiInt& PhiInt::operator+=(const PhiInt& o) {
  m_ += o.m_;
  n_ += o.n_;
  return *this;
}

PhiInt& PhiInt::operator-=(const PhiInt& o) {
  m_ -= o.m_;
  n_ -= o.n_;
  return *this;
}

PhiInt operator*(const PhiInt& a, const PhiInt& b) {
  // phi^2 = phi + 1
  BigInt ac = a.m_ * b.m_;
  return {ac + a.m_ * b.n_ + a.n_ * b.m_, ac + a.n_ * b.n_};
}

std::strong_ordering operator<=>(const PhiInt& a, const PhiInt& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- BitWord

BitWord::BitWord(std::string_view digits, Numeration kind) : digits_(digits), kind_(kind) {
  for (char c : digits_)
    if (c != '0' && c != '1') throw std::invalid_argument("BitWord: not a binary digit string: " + digits_);
}

bool BitWord::has_11() const { return digits_.find("11") != std::string::npos; }

int BitWord::count_ones() const { return static_cast<int>(std::count(digits_.begin(), digits_.end(), '1')); }

bool BitWord::is_zero() const { return digits_.find('1') == std::string::npos; }

BitWord BitWord::strip_leading() const {
  auto p = digits_.find('1');
  return BitWord(p == std::string::npos ? std::string_view{} : std::string_view(digits_).substr(p), kind_);
}

BitWord BitWord::strip_trailing() const {
  auto p = digits_.rfind('1');
  return BitWord(p == std::string::npos ? std::string_view{} : std::string_view(digits_).substr(0, p + 1), kind_);
}

BitWord BitWord::reversed() const {
  std::string r(digits_.rbegin(), digits_.rend());
  return BitWord(r, kind_);
}

BitWord BitWord::padded(std::size_t len) const {
  if (digits_.size() >= len) return *this;
  return BitWord(std::string(len - digits_.size(), '0') + digits_, kind_);
}

BitWord BitWord::with_kind(Numeration k) const { return BitWord(digits_, k); }

std::string BitWord::display() const {
  auto s = strip_leading().str();
  return s.empty() ? "0" : s;
}

// ----------------------------------------------------------- PhiExpansion

PhiExpansion PhiExpansion::parse(std::string_view text) {
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return PhiExpansion(text, "");
  if (text.find('.', dot + 1) != std::string_view::npos)
    throw std::invalid_argument("phi expansion has more than one radix point");
  return PhiExpansion(text.substr(0, dot), text.substr(dot + 1));
}

PhiExpansion PhiExpansion::from_folded(std::string_view x, std::string_view y) {
  std::string r(y.rbegin(), y.rend());
  return PhiExpansion(x, r);
}

PhiExpansion PhiExpansion::normalized() const {
  PhiExpansion e;
  e.left = left.strip_leading();
  e.right = right.strip_trailing();
  return e;
}

bool PhiExpansion::is_canonical() const {
  return (left.str() + right.str()).find("11") == std::string::npos;
}

int PhiExpansion::digit(long i) const {
  if (i >= 0) {
    auto idx = static_cast<long>(left.size()) - 1 - i;
    return idx >= 0 ? left[static_cast<std::size_t>(idx)] : 0;
  }
  auto idx = static_cast<std::size_t>(-i - 1);
  return idx < right.size() ? right[idx] : 0;
}

std::pair<std::string, std::string> PhiExpansion::folded(std::size_t min_len) const {
  auto n = normalized();
  std::string x = n.left.str();
  std::string y(n.right.str().rbegin(), n.right.str().rend());
  std::size_t len = std::max({x.size(), y.size(), min_len});
  x.insert(0, len - x.size(), '0');
  y.insert(0, len - y.size(), '0');
  return {x, y};
}

std::string PhiExpansion::to_string() const {
  auto n = normalized();
  return (n.left.empty() ? std::string("0") : n.left.str()) + "." + n.right.str();
}

bool operator==(const PhiExpansion& a, const PhiExpansion& b) {
  auto x = a.normalized();
  auto y = b.normalized();
  return x.left.str() == y.left.str() && x.right.str() == y.right.str();
}

bool operator<(const PhiExpansion& a, const PhiExpansion& b) {
  auto x = a.normalized();
  auto y = b.normalized();
  if (x.left.size() != y.left.size()) return x.left.size() < y.left.size();
  if (x.left.str() != y.left.str()) return x.left.str() < y.left.str();
  return x.right.str() < y.right.str();
}

// ---------------------------------------------------------------- codecs

BitWord zeck_encode(const BigInt& n) {
  if (n < 0) throw std::domain_error("zeck_encode: negative input");
  if (n == 0) return BitWord("", Numeration::zeck);
  long long k = 2;
  while (fib(k + 1) <= n) ++k;
  std::string out;
  BigInt r = n;
  for (long long i = k; i >= 2; --i) {
    if (fib(i) <= r) {
      out.push_back('1');
      r -= fib(i);
    } else {
      out.push_back('0');
    }
  }
  return BitWord(out, Numeration::zeck);
}

BigInt zeck_eval(const BitWord& x) {
  BigInt v = 0;
  const std::size_t len = x.size();
  for (std::size_t i = 0; i < len; ++i)
    if (x[i]) v += fib(static_cast<long long>(len - i) + 1);
  return v;
}

BigInt negafib_eval(const BitWord& x) {
  BigInt v = 0;
  const std::size_t len = x.size();
  for (std::size_t i = 0; i < len; ++i)
    if (x[i]) v += fib(-static_cast<long long>(len - i));
  return v;
}

BitWord negafib_encode(const BigInt& z) {
  if (z == 0) return BitWord("", Numeration::negafib);
  // Slot j + 1 holds the range of canonical words with weights F_{-1..-j}.
  std::vector<BigInt> lo{0, 0}, hi{0, 0};
  long long i = 0;
  while (!(lo.back() <= z && z <= hi.back())) {
    ++i;
    BigInt w = fib(-i);
    BigInt lo2 = i >= 2 ? lo[static_cast<std::size_t>(i - 1)] : BigInt(0);
    BigInt hi2 = i >= 2 ? hi[static_cast<std::size_t>(i - 1)] : BigInt(0);
    lo.push_back(std::min(lo.back(), BigInt(w + lo2)));
    hi.push_back(std::max(hi.back(), BigInt(w + hi2)));
  }
  const long long top = i;
  std::string out(static_cast<std::size_t>(top), '0');
  BigInt r = z;
  long long k = top;
  auto in_range = [&](long long j, const BigInt& v) {
    if (j <= 0) return v == 0;
    return lo[static_cast<std::size_t>(j + 1)] <= v && v <= hi[static_cast<std::size_t>(j + 1)];
  };
  while (r != 0) {
    while (k > 0 && in_range(k - 1, r)) --k;
    if (k <= 0) throw std::logic_error("negafib_encode: range bookkeeping failed");
    out[static_cast<std::size_t>(top - k)] = '1';
    r -= fib(-k);
    k -= 2;
  }
  return BitWord(out, Numeration::negafib);
}

BigInt lucas_eval(const BitWord& x) {
  BigInt v = 0;
  const std::size_t len = x.size();
  for (std::size_t i = 0; i < len; ++i)
    if (x[i]) v += lucas(static_cast<long long>(len - 1 - i));
  return v;
}

// -------------------------------------------------------------- phi values

PhiInt phi_eval(const PhiExpansion& e) {
  PhiInt v;
  const auto& l = e.left;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i]) v += PhiInt::power(static_cast<long long>(l.size() - 1 - i));
  const auto& r = e.right;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i]) v += PhiInt::power(-static_cast<long long>(i) - 1);
  return v;
}

PhiInt phi_eval_split(const PhiExpansion& e) {
  const std::string& x = e.left.str();
  auto last = [&](std::size_t k) -> int {  // k-th last digit, 1-based
    return x.size() >= k ? x[x.size() - k] - '0' : 0;
  };
  auto drop = [&](std::size_t k) {
    return BitWord(x.size() > k ? std::string_view(x).substr(0, x.size() - k) : std::string_view{});
  };
  // left part: (a_1 + [a_r..a_2]_F) phi + [a_r..a_3]_F + a_0 + a_2
  BigInt c = last(2) + zeck_eval(drop(2));
  BigInt d = zeck_eval(drop(3)) + last(1) + last(3);
  // right part: [b_s..b_1]_{-F} phi + [b_s..b_1 0]_{-F}
  BitWord y = e.right.reversed();
  BigInt c2 = negafib_eval(y);
  BigInt d2 = negafib_eval(BitWord(y.str() + "0"));
  return {c + c2, d + d2};
}

namespace {

PhiExpansion canonical_small(Small r, std::size_t cap) {
  std::vector<long long> positions;
  long long k = 0;
  while (compare_small(power_small(k + 1), r) <= 0) ++k;
  std::size_t steps = 0;
  while (r.m != 0 || r.n != 0) {
    while (compare_small(power_small(k), r) > 0) {
      --k;
      if (++steps > 4 * cap) throw std::logic_error("phi_canonical: scan exceeded iteration cap");
    }
    positions.push_back(k);
    Small p = power_small(k);
    r.m -= p.m;
    r.n -= p.n;
    k -= 2;
    if (positions.size() > cap) throw std::logic_error("phi_canonical: exceeded iteration cap");
  }
  return expansion_from_positions(positions);
}

PhiExpansion canonical_big(PhiInt r, std::size_t cap) {
  std::vector<long long> positions;
  long long k = 0;
  while (PhiInt::power(k + 1) <= r) ++k;
  std::size_t steps = 0;
  while (r.sign() != 0) {
    while (PhiInt::power(k) > r) {
      --k;
      if (++steps > 4 * cap) throw std::logic_error("phi_canonical: scan exceeded iteration cap");
    }
    positions.push_back(k);
    r -= PhiInt::power(k);
    k -= 2;
    if (positions.size() > cap) throw std::logic_error("phi_canonical: exceeded iteration cap");
  }
  return expansion_from_positions(positions);
}

}  // namespace

PhiExpansion phi_canonical(const PhiInt& z) {
  const int s = z.sign();
  if (s < 0) throw std::domain_error("phi_canonical: negative input");
  if (s == 0) return PhiExpansion{};
  const std::size_t bits = std::max(bit_length(z.phi_coeff()), bit_length(z.unit_coeff()));
  const std::size_t cap = 4 * bits + 64;
  // Digits reach at most about 1.45 * bits positions on either side; F_90 is
  // the int64 limit, so stay well inside it.
  if (bits <= 40) {
    return canonical_small({z.phi_coeff().convert_to<std::int64_t>(), z.unit_coeff().convert_to<std::int64_t>()},
                           cap);
  }
  return canonical_big(z, cap);
}

PhiExpansion phi_canonical(long long n) { return phi_canonical(PhiInt::integer(n)); }

// --------------------------------------------------------------- filters

bool is_knott(const PhiExpansion& e) {
  auto n = e.normalized();
  std::string s = "00" + n.left.str() + n.right.str();
  auto p = s.rfind('1');
  if (p == std::string::npos) return true;
  s.resize(p + 1);
  return !(s.size() >= 3 && s.compare(s.size() - 3, 3, "011") == 0);
}

bool is_dvl(const PhiExpansion& e) {
  auto n = e.normalized();
  const long hi = static_cast<long>(n.left.size()) - 1;
  const long lo = -static_cast<long>(n.right.size());
  for (long i = hi; i > lo; --i) {
    if (n.digit(i) == 1 && n.digit(i - 1) == 1 && i != 1) return false;
  }
  if (n.digit(1) == 0 && n.digit(0) == 0 && n.digit(-1) == 0 && n.count_ones() > 0) return false;
  return true;
}

namespace filters {
RepFilter any() {
  return [](const PhiExpansion&) { return true; };
}
RepFilter no_11() {
  return [](const PhiExpansion& e) { return e.is_canonical(); };
}
RepFilter knott() { return is_knott; }
RepFilter dvl() { return is_dvl; }
RepFilter natural(long long n) {
  const std::size_t want = phi_canonical(n).right_length();
  return [want](const PhiExpansion& e) { return e.right_length() == want; };
}
}  // namespace filters

// ------------------------------------------------------------ enumeration

namespace {

struct EnumTables {
  std::vector<Small> pow;      // by index j = top - position
  std::vector<Small> sum_pow;  // sum of pow[j..]
  std::vector<Small> pos_conj; // sum of positive conjugates of pow[j..]
  std::vector<Small> neg_conj; // sum of negative conjugates of pow[j..]
};

Small conj_small(const Small& x) { return {-x.m, x.m + x.n}; }

EnumTables make_tables(int left_len, int right_len) {
  EnumTables t;
  const int total = left_len + right_len;
  for (int j = 0; j < total; ++j) t.pow.push_back(power_small(left_len - 1 - j));
  t.sum_pow.assign(static_cast<std::size_t>(total) + 1, Small{});
  t.pos_conj.assign(static_cast<std::size_t>(total) + 1, Small{});
  t.neg_conj.assign(static_cast<std::size_t>(total) + 1, Small{});
  for (int j = total - 1; j >= 0; --j) {
    auto uj = static_cast<std::size_t>(j);
    const Small p = t.pow[uj];
    const Small c = conj_small(p);
    t.sum_pow[uj] = {t.sum_pow[uj + 1].m + p.m, t.sum_pow[uj + 1].n + p.n};
    t.pos_conj[uj] = t.pos_conj[uj + 1];
    t.neg_conj[uj] = t.neg_conj[uj + 1];
    if (sign_small(c.m, c.n) > 0)
      t.pos_conj[uj] = {t.pos_conj[uj].m + c.m, t.pos_conj[uj].n + c.n};
    else
      t.neg_conj[uj] = {t.neg_conj[uj].m + c.m, t.neg_conj[uj].n + c.n};
  }
  return t;
}

void enumerate_dfs(const EnumTables& t, std::size_t j, Small r, std::string& digits, int left_len,
                   const RepFilter& filter, std::vector<PhiExpansion>& out) {
  if (sign_small(r.m, r.n) < 0) return;
  if (compare_small(r, t.sum_pow[j]) > 0) return;
  const Small rc = conj_small(r);
  if (compare_small(rc, t.pos_conj[j]) > 0 || compare_small(rc, t.neg_conj[j]) < 0) return;
  if (j == t.pow.size()) {
    if (r.m == 0 && r.n == 0) {
      PhiExpansion e(std::string_view(digits).substr(0, static_cast<std::size_t>(left_len)),
                     std::string_view(digits).substr(static_cast<std::size_t>(left_len)));
      e = e.normalized();
      if (filter(e)) out.push_back(std::move(e));
    }
    return;
  }
  digits.push_back('0');
  enumerate_dfs(t, j + 1, r, digits, left_len, filter, out);
  digits.back() = '1';
  enumerate_dfs(t, j + 1, {r.m - t.pow[j].m, r.n - t.pow[j].n}, digits, left_len, filter, out);
  digits.pop_back();
}

}  // namespace

std::vector<PhiExpansion> enumerate_phi_reps(const PhiInt& target, int left_len, int right_len,
                                             const RepFilter& filter) {
  if (left_len < 0 || right_len < 0) throw std::invalid_argument("enumerate_phi_reps: negative bound");
  if (left_len > 44 || right_len > 44) throw std::invalid_argument("enumerate_phi_reps: bound above 44");
  if (bit_length(target.phi_coeff()) > 40 || bit_length(target.unit_coeff()) > 40)
    throw std::invalid_argument("enumerate_phi_reps: target too large");
  auto tables = make_tables(left_len, right_len);
  std::vector<PhiExpansion> out;
  std::string digits;
  enumerate_dfs(tables, 0,
                {target.phi_coeff().convert_to<std::int64_t>(), target.unit_coeff().convert_to<std::int64_t>()},
                digits, left_len, filter, out);
  return out;
}

std::vector<PhiExpansion> enumerate_phi_reps(long long n, int left_len, int right_len, const RepFilter& filter) {
  return enumerate_phi_reps(PhiInt::integer(n), left_len, right_len, filter);
}

SaturatedReps enumerate_phi_reps_saturated(long long n, int left_len, int right_len, const RepFilter& filter) {
  SaturatedReps s;
  s.reps = enumerate_phi_reps(n, left_len, right_len, filter);
  auto wider = enumerate_phi_reps(n, left_len + 2, right_len + 2, filter);
  s.saturated = wider == s.reps;
  return s;
}

// ------------------------------------------------------------------ Lucas

std::vector<BitWord> lucas_reps(const BigInt& n) {
  if (n < 0) throw std::domain_error("lucas_reps: negative input");
  long long top = 1;
  while (lucas(top) <= n) ++top;
  // best[i]: largest sum of non-adjacent L_j with j < i
  std::vector<BigInt> best(static_cast<std::size_t>(top) + 2, 0);
  for (long long i = 1; i <= top + 1; ++i) {
    BigInt take = lucas(i - 1) + (i >= 2 ? best[static_cast<std::size_t>(i - 2)] : BigInt(0));
    best[static_cast<std::size_t>(i)] = std::max(best[static_cast<std::size_t>(i - 1)], take);
  }
  std::vector<BitWord> out;
  std::string digits(static_cast<std::size_t>(top) + 1, '0');  // digits[k] is e_{top-k}
  std::function<void(long long, BigInt)> dfs = [&](long long i, BigInt r) {
    if (r == 0) {
      out.push_back(BitWord(digits, Numeration::zeck).strip_leading());
      return;
    }
    if (i < 0 || r < 0 || r > best[static_cast<std::size_t>(i + 1)]) return;
    // skip index i
    dfs(i - 1, r);
    BigInt w = lucas(i);
    if (w <= r) {
      digits[static_cast<std::size_t>(top - i)] = '1';
      dfs(i - 2, r - w);
      digits[static_cast<std::size_t>(top - i)] = '0';
    }
  };
  dfs(top, n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt floor_phi_times(const BigInt& n) {
  if (n < 0) throw std::domain_error("floor_phi_times: negative input");
  BigInt s = boost::multiprecision::sqrt(BigInt(5 * n * n));
  return (n + s) / 2;
}

}  // namespace phirep
