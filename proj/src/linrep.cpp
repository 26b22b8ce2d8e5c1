#include "phirep/linrep.hpp"

#include "phirep/zphi.hpp"
#include "span_basis.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace phirep {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Vec row_times(const Vec& v, const Matrix& m) {
  Vec out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out[j] += v[i] * m(i, j);
  }
  return out;
}

Vec times_col(const Matrix& m, const Vec& w) {
  Vec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && w[j] != 0) out[i] += m(i, j) * w[j];
  return out;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

Vec LinRep::row_after(const Word& u) const {
  Vec r = v;
  for (Symbol a : u) r = row_times(r, gamma.at(a));
  return r;
}

Rational LinRep::eval(const Word& u) const { return dot(row_after(u), w); }

Rational LinRep::eval_zeck(long long n) const {
  if (tracks != 1) throw std::invalid_argument("eval_zeck: representation has more than one input track");
  return eval(make_word({zeck_encode(n).str()}));
}

namespace {

using detail::SpanBasis;

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& e) { return e == 0; });
}

SpanBasis observable_basis(const LinRep& a) {
  SpanBasis basis(a.v.size());
  if (is_zero(a.w)) return basis;
  basis.add(a.w);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (const auto& g : a.gamma) basis.add(times_col(g, basis.vectors()[i]));
  return basis;
}

LinRep zero_rep(int tracks) {
  LinRep z;
  z.tracks = tracks;
  z.gamma.assign(static_cast<std::size_t>(1) << tracks, Matrix(0, 0));
  return z;
}

}  // namespace

LinRep count_linrep(const Dfa& a, const std::vector<int>& count_tracks) {
  const int k = a.tracks;
  std::vector<int> inputs;
  for (int j = 0; j < k; ++j)
    if (std::find(count_tracks.begin(), count_tracks.end(), j) == count_tracks.end()) inputs.push_back(j);
  if (inputs.empty()) throw std::invalid_argument("count_linrep: no input tracks left");
  const int ki = static_cast<int>(inputs.size());
  const std::size_t t = static_cast<std::size_t>(a.state_count());

  LinRep rep;
  rep.tracks = ki;
  rep.gamma.assign(static_cast<std::size_t>(1) << ki, Matrix(t, t));
  for (int q = 0; q < a.state_count(); ++q)
    for (int s = 0; s < a.alphabet_size(); ++s) {
      int r = a.next(q, static_cast<Symbol>(s));
      if (r == kNoState) continue;
      Symbol d = 0;
      for (int j : inputs) d = (d << 1) | static_cast<Symbol>(symbol_digit(static_cast<Symbol>(s), j, k));
      rep.gamma[d](static_cast<std::size_t>(q), static_cast<std::size_t>(r)) += 1;
    }
  rep.w.assign(t, 0);
  for (std::size_t q = 0; q < t; ++q) rep.w[q] = a.accepting[q] ? 1 : 0;
  rep.v.assign(t, 0);
  rep.v[static_cast<std::size_t>(a.initial)] = 1;

  // Pad the input with leading zeros until the counted function stops
  // changing; once v and v*gamma(0) agree on the observable space they
  // agree forever.
  SpanBasis obs = observable_basis(rep);
  const std::size_t max_pad = 4 * t + 64;
  for (std::size_t pad = 0;; ++pad) {
    Vec next = row_times(rep.v, rep.gamma[0]);
    bool same = true;
    for (const auto& c : obs.vectors())
      if (dot(rep.v, c) != dot(next, c)) {
        same = false;
        break;
      }
    if (same) break;
    if (pad == max_pad) throw std::logic_error("count_linrep: leading-zero padding does not stabilize");
    rep.v = std::move(next);
  }
  return rep;
}

LinRep linrep_add(const LinRep& a, const LinRep& b) {
  if (a.tracks != b.tracks) throw std::invalid_argument("linrep_add: track mismatch");
  const std::size_t n = a.v.size(), m = b.v.size();
  LinRep c;
  c.tracks = a.tracks;
  c.v = a.v;
  c.v.insert(c.v.end(), b.v.begin(), b.v.end());
  c.w = a.w;
  c.w.insert(c.w.end(), b.w.begin(), b.w.end());
  for (std::size_t d = 0; d < a.gamma.size(); ++d) {
    Matrix g(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gamma[d](i, j);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gamma[d](i, j);
    c.gamma.push_back(std::move(g));
  }
  return c;
}

LinRep linrep_scale(const LinRep& a, const Rational& c) {
  LinRep r = a;
  for (auto& e : r.w) e *= c;
  return r;
}

LinRep linrep_sub(const LinRep& a, const LinRep& b) { return linrep_add(a, linrep_scale(b, -1)); }

LinRep linrep_minimize(const LinRep& a) {
  const std::size_t A = a.gamma.size();
  // Observable quotient: basis columns c_j with gamma(d) c_j = sum_i g'(d)_ij c_i.
  SpanBasis cols = observable_basis(a);
  const std::size_t r = cols.size();
  if (r == 0) return zero_rep(a.tracks);
  LinRep o;
  o.tracks = a.tracks;
  o.w.assign(r, 0);
  o.w[0] = 1;
  o.v.resize(r);
  for (std::size_t j = 0; j < r; ++j) o.v[j] = dot(a.v, cols.vectors()[j]);
  for (std::size_t d = 0; d < A; ++d) {
    Matrix g(r, r);
    for (std::size_t j = 0; j < r; ++j) {
      Vec c = cols.coords(times_col(a.gamma[d], cols.vectors()[j]));
      for (std::size_t i = 0; i < r; ++i) g(i, j) = c[i];
    }
    o.gamma.push_back(std::move(g));
  }

  // Reachable part: rows v*gamma(u) in breadth-first order.
  SpanBasis rows(r);
  if (is_zero(o.v)) return zero_rep(a.tracks);
  rows.add(o.v);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t d = 0; d < A; ++d) rows.add(row_times(rows.vectors()[i], o.gamma[d]));
  const std::size_t s = rows.size();
  LinRep m;
  m.tracks = a.tracks;
  m.v.assign(s, 0);
  m.v[0] = 1;
  m.w.resize(s);
  for (std::size_t i = 0; i < s; ++i) m.w[i] = dot(rows.vectors()[i], o.w);
  for (std::size_t d = 0; d < A; ++d) {
    Matrix g(s, s);
    for (std::size_t i = 0; i < s; ++i) {
      Vec c = rows.coords(row_times(rows.vectors()[i], o.gamma[d]));
      for (std::size_t j = 0; j < s; ++j) g(i, j) = c[j];
    }
    m.gamma.push_back(std::move(g));
  }
  return m;
}

Dfao linrep_to_dfao(const LinRep& a, std::size_t max_states) {
  Dfao out;
  out.tracks = a.tracks;
  const int A = 1 << a.tracks;
  std::map<Vec, int> index;
  std::vector<Vec> states;
  auto intern = [&](Vec v) {
    auto it = index.find(v);
    if (it != index.end()) return it->second;
    if (states.size() >= max_states)
      throw NotAutomaticError("linrep_to_dfao: more than " + std::to_string(max_states) + " distinct vectors");
    Rational o = dot(v, a.w);
    if (denominator(o) != 1) throw NotAutomaticError("linrep_to_dfao: non-integer output");
    int id = static_cast<int>(states.size());
    index.emplace(v, id);
    out.output.push_back(static_cast<long long>(numerator(o)));
    states.push_back(std::move(v));
    return id;
  };
  out.initial = intern(a.v);
  for (std::size_t i = 0; i < states.size(); ++i)
    for (int d = 0; d < A; ++d) {
      int t = intern(row_times(states[i], a.gamma[static_cast<std::size_t>(d)]));
      out.delta.push_back(t);
    }
  return minimize(out);
}

// ------------------------------------------------------------------ I/O

namespace {

void write_row(std::ostream& os, const Vec& r) {
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
  os << '\n';
}

Rational parse_rational(const std::string& tok) {
  try {
    return Rational(tok);
  } catch (const std::exception&) {
    throw std::invalid_argument("read_linrep: bad number '" + tok + "'");
  }
}

Vec read_row(std::istream& is, std::size_t n) {
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string tok;
    if (!(is >> tok)) throw std::invalid_argument("read_linrep: truncated row");
    r[i] = parse_rational(tok);
  }
  return r;
}

void expect(std::istream& is, const std::string& word) {
  std::string tok;
  if (!(is >> tok) || tok != word) throw std::invalid_argument("read_linrep: expected '" + word + "'");
}

}  // namespace

void write_linrep(std::ostream& os, const LinRep& a) {
  os << "rank " << a.rank() << '\n';
  if (a.tracks != 1) os << "tracks " << a.tracks << '\n';
  os << "v\n";
  write_row(os, a.v);
  for (std::size_t d = 0; d < a.gamma.size(); ++d) {
    os << "gamma " << d << '\n';
    for (std::size_t i = 0; i < a.gamma[d].rows(); ++i) {
      Vec row(a.gamma[d].cols());
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = a.gamma[d](i, j);
      write_row(os, row);
    }
  }
  os << "w\n";
  write_row(os, a.w);
}

LinRep read_linrep(std::istream& is) {
  LinRep a;
  std::string tok;
  expect(is, "rank");
  std::size_t t = 0;
  if (!(is >> t)) throw std::invalid_argument("read_linrep: bad rank");
  if (!(is >> tok)) throw std::invalid_argument("read_linrep: truncated");
  if (tok == "tracks") {
    if (!(is >> a.tracks) || a.tracks < 1 || a.tracks > kMaxTracks) throw std::invalid_argument("read_linrep: bad tracks");
    is >> tok;
  }
  if (tok != "v") throw std::invalid_argument("read_linrep: expected 'v'");
  a.v = read_row(is, t);
  const std::size_t A = static_cast<std::size_t>(1) << a.tracks;
  for (std::size_t d = 0; d < A; ++d) {
    expect(is, "gamma");
    std::size_t idx = 0;
    if (!(is >> idx) || idx != d) throw std::invalid_argument("read_linrep: gamma sections out of order");
    Matrix g(t, t);
    for (std::size_t i = 0; i < t; ++i) {
      Vec row = read_row(is, t);
      for (std::size_t j = 0; j < t; ++j) g(i, j) = row[j];
    }
    a.gamma.push_back(std::move(g));
  }
  expect(is, "w");
  a.w = read_row(is, t);
  return a;
}

}  // namespace phirep
