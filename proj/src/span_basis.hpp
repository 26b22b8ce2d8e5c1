#pragma once

#include "phirep/linrep.hpp"

#include <algorithm>
#include <stdexcept>

namespace phirep::detail {

// Incrementally built basis of a subspace with coordinates relative to the
// inserted vectors.
class SpanBasis {
public:
  explicit SpanBasis(std::size_t dim) : dim_(dim) {}

  /// Adds x if it is independent of the current basis; returns whether it was.
  bool add(const Vec& x) {
    Vec r = x;
    Vec coef(vectors_.size() + 1);
    reduce(r, coef);
    std::size_t p = 0;
    while (p < dim_ && r[p] == 0) ++p;
    if (p == dim_) return false;
    Rational inv = 1 / r[p];
    for (auto& e : r) e *= inv;
    // reduced = (x - sum coef_i reduced_i) / r[p]; express in original vectors.
    Vec t(vectors_.size() + 1);
    t[vectors_.size()] = inv;
    for (std::size_t i = 0; i < reduced_.size(); ++i) {
      if (coef[i] == 0) continue;
      for (std::size_t k = 0; k < trans_[i].size(); ++k) t[k] -= inv * coef[i] * trans_[i][k];
    }
    for (auto& tr : trans_) tr.resize(vectors_.size() + 1);
    vectors_.push_back(x);
    reduced_.push_back(std::move(r));
    pivot_.push_back(p);
    trans_.push_back(std::move(t));
    return true;
  }

  /// Coordinates of x in terms of the inserted vectors; x must lie in the span.
  Vec coords(const Vec& x) const {
    Vec r = x;
    Vec coef(reduced_.size());
    reduce(r, coef);
    for (const auto& e : r)
      if (e != 0) throw std::logic_error("SpanBasis::coords: vector outside the span");
    Vec out(vectors_.size());
    for (std::size_t i = 0; i < reduced_.size(); ++i) {
      if (coef[i] == 0) continue;
      for (std::size_t k = 0; k < trans_[i].size(); ++k) out[k] += coef[i] * trans_[i][k];
    }
    return out;
  }

  bool contains(const Vec& x) const {
    Vec r = x;
    Vec coef(reduced_.size());
    reduce(r, coef);
    return std::all_of(r.begin(), r.end(), [](const Rational& e) { return e == 0; });
  }

  std::size_t size() const { return vectors_.size(); }
  const std::vector<Vec>& vectors() const { return vectors_; }

private:
  void reduce(Vec& r, Vec& coef) const {
    for (std::size_t i = 0; i < reduced_.size(); ++i) {
      const Rational c = r[pivot_[i]];
      if (c == 0) continue;
      coef[i] = c;
      const Vec& b = reduced_[i];
      for (std::size_t j = pivot_[i]; j < dim_; ++j)
        if (b[j] != 0) r[j] -= c * b[j];
    }
  }

  std::size_t dim_;
  std::vector<Vec> vectors_;
  std::vector<Vec> reduced_;
  std::vector<std::size_t> pivot_;
  std::vector<Vec> trans_;  // reduced_i = sum trans_i[k] vectors_k
};

}  // namespace phirep::detail
