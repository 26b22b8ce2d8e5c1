#include "phirep/polynomial.hpp"

#include "span_basis.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace phirep {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::x_pow(int k) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
  c.back() = 1;
  return Poly(std::move(c));
}

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Rational Poly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rational(0);
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  Poly p = *this;
  Rational l = c_.back();
  for (auto& e : p.c_) e /= l;
  return p;
}

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long long>(i));
  return Poly(std::move(d));
}

Rational Poly::eval(const Rational& x) const {
  Rational r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

double Poly::eval(double x) const {
  double r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i].convert_to<double>();
  return r;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    Rational a = c_[i];
    if (a == 0) continue;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (a != 1 || i == 0) os << a;
    if (i >= 1) os << 'X';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational f = r[static_cast<std::size_t>(i)] / lb;
    q[static_cast<std::size_t>(i - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return divmod(a * b, poly_gcd(a, b)).first.monic();
}

bool divides(const Poly& d, const Poly& p) { return divmod(p, d).second.is_zero(); }

Poly minimal_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("minimal_poly: matrix not square");
  const std::size_t n = m.rows();
  Poly result = Poly::constant(1);
  detail::SpanBasis seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    if (seen.contains(e)) continue;
    // Local annihilator of e: first power of m landing in the span of the
    // earlier ones.
    detail::SpanBasis krylov(n);
    Vec v = e;
    while (krylov.add(v)) {
      seen.add(v);
      v = times_col(m, v);
    }
    Vec c = krylov.coords(v);
    std::vector<Rational> coeffs(c.size() + 1);
    for (std::size_t j = 0; j < c.size(); ++j) coeffs[j] = -c[j];
    coeffs.back() = 1;
    result = poly_lcm(result, Poly(std::move(coeffs)));
  }
  return result;
}

namespace {

bool integer_coeffs(const Poly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const Rational& c) { return denominator(c) == 1; });
}

// Monic integer candidates of the given degree with lower coefficients in
// [-3, 3], enumerated with the highest lower coefficient varying slowest.
void for_each_candidate(int degree, const std::function<void(const Poly&)>& fn) {
  std::vector<int> lower(static_cast<std::size_t>(degree), -3);
  while (true) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = lower[static_cast<std::size_t>(i)];
    c.back() = 1;
    fn(Poly(std::move(c)));
    int i = 0;
    while (i < degree && lower[static_cast<std::size_t>(i)] == 3) lower[static_cast<std::size_t>(i++)] = -3;
    if (i == degree) break;
    ++lower[static_cast<std::size_t>(i)];
  }
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  for (int i = a.factor.degree(); i >= 0; --i)
    if (a.factor.coeff(i) != b.factor.coeff(i)) return a.factor.coeff(i) < b.factor.coeff(i);
  return false;
}

}  // namespace

std::vector<Factor> factor_small(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_small: zero polynomial");
  Poly rest = p.monic();
  if (!integer_coeffs(rest)) throw std::invalid_argument("factor_small: coefficients must be integers");
  std::vector<Factor> out;
  for (int d = 1; d <= 4 && rest.degree() >= d; ++d)
    for_each_candidate(d, [&](const Poly& c) {
      // A monic factor's constant term divides that of the cofactor.
      if (rest.degree() < d) return;
      Rational c0 = c.coeff(0), r0 = rest.coeff(0);
      if (c0 == 0 ? r0 != 0 : r0 != 0 && denominator(Rational(r0 / c0)) != 1) return;
      int mult = 0;
      while (rest.degree() >= d) {
        auto [q, r] = divmod(rest, c);
        if (!r.is_zero()) break;
        rest = q;
        ++mult;
      }
      if (mult > 0) out.push_back({c, mult, true});
    });
  if (rest.degree() > 0) out.push_back({rest, 1, rest.degree() == 1});
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

std::string factors_to_string(const std::vector<Factor>& f) {
  std::string s;
  for (const auto& x : f) {
    if (!s.empty()) s += " ";
    s += "(" + x.factor.to_string() + ")";
    if (x.multiplicity > 1) s += "^" + std::to_string(x.multiplicity);
  }
  return s.empty() ? "1" : s;
}

double RootInterval::approx() const { return ((lo + hi) / 2).convert_to<double>(); }

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(Poly() - r);
  }
  return chain;
}

int sign_changes(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    Rational v = q.eval(x);
    int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Poly squarefree(const Poly& p) { return divmod(p, poly_gcd(p, p.derivative())).first.monic(); }

}  // namespace

int sturm_count(const Poly& p, const Rational& a, const Rational& b) {
  if (p.degree() < 1) return 0;
  auto chain = sturm_chain(squarefree(p));
  return sign_changes(chain, a) - sign_changes(chain, b);
}

std::vector<RootInterval> real_roots(const Poly& p, const Rational& width) {
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  Poly q = squarefree(p);
  auto chain = sturm_chain(q);
  // Cauchy bound.
  Rational bound = 0;
  for (int i = 0; i < q.degree(); ++i) {
    Rational c = q.coeff(i);
    bound = std::max(bound, c < 0 ? Rational(-c) : c);
  }
  bound += 1;
  std::function<void(const Rational&, const Rational&, int)> isolate = [&](const Rational& lo, const Rational& hi,
                                                                           int count) {
    if (count == 0) return;
    if (count == 1) {
      // Exact bisection on the sign of q; the root lies in (lo, hi].
      Rational a = lo, b = hi;
      if (q.eval(b) == 0) {
        out.push_back({b, b});
        return;
      }
      while (b - a > width) {
        Rational mid = (a + b) / 2;
        Rational v = q.eval(mid);
        if (v == 0) {
          a = b = mid;
          break;
        }
        if ((v > 0) == (q.eval(b) > 0))
          b = mid;
        else
          a = mid;
      }
      out.push_back({a, b});
      return;
    }
    Rational mid = (lo + hi) / 2;
    int left = sign_changes(chain, lo) - sign_changes(chain, mid);
    isolate(lo, mid, left);
    isolate(mid, hi, count - left);
  };
  Rational lo = -bound, hi = bound;
  isolate(lo, hi, sign_changes(chain, lo) - sign_changes(chain, hi));
  return out;
}

}  // namespace phirep
