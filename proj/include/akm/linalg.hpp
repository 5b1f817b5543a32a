#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "akm/scalar.hpp"

namespace akm {

using Index = std::uint64_t;

// Sparse vector: index -> nonzero scalar.
template <class S>
using SparseVec = std::map<Index, S>;
using SpinVec = SparseVec<QField>;

template <class S>
void axpy(SparseVec<S>& y, const S& a, const SparseVec<S>& x) {
  if (a.is_zero()) return;
  for (const auto& [i, v] : x) {
    auto it = y.find(i);
    if (it == y.end()) {
      y.emplace(i, a * v);
    } else {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

template <class S>
SparseVec<S> scaled(const SparseVec<S>& x, const S& a) {
  SparseVec<S> r;
  if (a.is_zero()) return r;
  for (const auto& [i, v] : x) r.emplace(i, a * v);
  return r;
}

template <class S>
SparseVec<S> operator+(SparseVec<S> a, const SparseVec<S>& b) {
  axpy(a, S(1), b);
  return a;
}

template <class S>
SparseVec<S> operator-(SparseVec<S> a, const SparseVec<S>& b) {
  axpy(a, S(-1), b);
  return a;
}

// Bilinear pairing sum_i x_i y_i (no conjugation).
template <class S>
S dot(const SparseVec<S>& x, const SparseVec<S>& y) {
  S r;
  const auto& small = x.size() <= y.size() ? x : y;
  const auto& big = x.size() <= y.size() ? y : x;
  for (const auto& [i, v] : small) {
    auto it = big.find(i);
    if (it != big.end()) r += v * it->second;
  }
  return r;
}

// Returns c with a == c*b if the vectors are proportional (b nonzero).
template <class S>
std::optional<S> ratio(const SparseVec<S>& a, const SparseVec<S>& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return S();
  if (a.size() != b.size()) return std::nullopt;
  S c = a.begin()->second / b.begin()->second;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == c * ib->second)) return std::nullopt;
  }
  return c;
}

template <class S>
struct Entry {
  Index row;
  Index col;
  S value;
};

// Square sparse matrix stored by columns; no stored zeros.
template <class S>
class SparseMatT {
 public:
  explicit SparseMatT(Index dim = 0) : dim_(dim) {}
  static SparseMatT identity(Index dim) {
    SparseMatT m(dim);
    for (Index i = 0; i < dim; ++i) m.cols_[i][i] = S(1);
    return m;
  }

  Index dim() const { return dim_; }
  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& [c, v] : cols_) n += v.size();
    return n;
  }
  S get(Index r, Index c) const {
    auto it = cols_.find(c);
    if (it == cols_.end()) return S();
    auto jt = it->second.find(r);
    return jt == it->second.end() ? S() : jt->second;
  }
  void set(Index r, Index c, const S& v) {
    if (v.is_zero()) {
      auto it = cols_.find(c);
      if (it != cols_.end()) {
        it->second.erase(r);
        if (it->second.empty()) cols_.erase(it);
      }
    } else {
      cols_[c][r] = v;
    }
  }
  void set_col(Index c, SparseVec<S> v) {
    if (v.empty())
      cols_.erase(c);
    else
      cols_[c] = std::move(v);
  }
  const SparseVec<S>& col(Index c) const {
    static const SparseVec<S> empty;
    auto it = cols_.find(c);
    return it == cols_.end() ? empty : it->second;
  }
  const std::map<Index, SparseVec<S>>& cols() const { return cols_; }

  SparseVec<S> apply(const SparseVec<S>& x) const {
    SparseVec<S> y;
    for (const auto& [c, v] : x) {
      auto it = cols_.find(c);
      if (it != cols_.end()) axpy(y, v, it->second);
    }
    return y;
  }
  SparseMatT operator*(const SparseMatT& o) const {
    SparseMatT r(dim_);
    for (const auto& [c, v] : o.cols_) r.set_col(c, apply(v));
    return r;
  }
  SparseMatT operator+(const SparseMatT& o) const { return combine(o, S(1)); }
  SparseMatT operator-(const SparseMatT& o) const { return combine(o, S(-1)); }
  SparseMatT scaled(const S& a) const {
    SparseMatT r(dim_);
    for (const auto& [c, v] : cols_) r.set_col(c, akm::scaled(v, a));
    return r;
  }
  SparseMatT transpose() const {
    SparseMatT r(dim_);
    for (const auto& [c, v] : cols_)
      for (const auto& [i, x] : v) r.cols_[i][c] = x;
    return r;
  }
  bool operator==(const SparseMatT& o) const { return dim_ == o.dim_ && cols_ == o.cols_; }

  // First entry (column-major order) where the matrices differ, with the
  // difference this - o.
  std::optional<Entry<S>> first_difference(const SparseMatT& o) const {
    SparseMatT d = *this - o;
    if (d.cols_.empty()) return std::nullopt;
    const auto& [c, v] = *d.cols_.begin();
    return Entry<S>{v.begin()->first, c, v.begin()->second};
  }

 private:
  SparseMatT combine(const SparseMatT& o, const S& s) const {
    SparseMatT r = *this;
    for (const auto& [c, v] : o.cols_) {
      SparseVec<S> col = r.col(c);
      axpy(col, s, v);
      r.set_col(c, std::move(col));
    }
    return r;
  }
  Index dim_;
  std::map<Index, SparseVec<S>> cols_;
};

using SparseMat = SparseMatT<QField>;
using CycloMat = SparseMatT<CycloScalar>;

// Incremental echelon form; tracks each pivot as a combination of the inputs.
template <class S>
class Echelon {
 public:
  // Adds v; returns false (and leaves the form unchanged) if v is dependent.
  bool add(const SparseVec<S>& v) {
    std::size_t id = count_++;
    SparseVec<S> w = v;
    SparseVec<S> combo{{id, S(1)}};
    reduce(w, combo);
    if (w.empty()) {
      --count_;
      return false;
    }
    Index p = w.begin()->first;
    rows_.push_back({p, std::move(w), std::move(combo)});
    return true;
  }
  std::size_t rank() const { return rows_.size(); }
  // Coefficients c with sum_j c_j input_j == t, or nullopt outside the span.
  std::optional<std::vector<S>> solve(const SparseVec<S>& t) const {
    SparseVec<S> w = t, combo;
    reduce(w, combo);
    if (!w.empty()) return std::nullopt;
    std::vector<S> c(count_);
    for (const auto& [i, x] : combo) c[i] = -x;
    return c;
  }

 private:
  struct Row {
    Index pivot;
    SparseVec<S> v;
    SparseVec<S> combo;
  };
  void reduce(SparseVec<S>& w, SparseVec<S>& combo) const {
    for (const auto& r : rows_) {
      auto it = w.find(r.pivot);
      if (it == w.end()) continue;
      S c = -(it->second / r.v.at(r.pivot));
      axpy(w, c, r.v);
      axpy(combo, c, r.combo);
    }
  }
  std::vector<Row> rows_;
  std::size_t count_ = 0;
};

template <class S>
int rank(const std::vector<SparseVec<S>>& vs) {
  Echelon<S> e;
  for (const auto& v : vs) e.add(v);
  return static_cast<int>(e.rank());
}

}  // namespace akm
