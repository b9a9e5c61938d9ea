#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rackkit/error.hpp"
#include "rackkit/scalar.hpp"

namespace rackkit {

/// Sparse vector: strictly increasing indices, no stored zeros.
template <class K>
class SparseVec {
 public:
  using Map = std::map<std::size_t, K>;

  SparseVec() = default;
  explicit SparseVec(std::size_t dim) : dim_(dim) {}

  static SparseVec unit(std::size_t dim, std::size_t i, K c = K(1)) {
    SparseVec v(dim);
    v.add(i, std::move(c));
    return v;
  }

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  void add(std::size_t i, const K& c) {
    if (i >= dim_) throw Error("sparse index " + std::to_string(i) + " out of range " + std::to_string(dim_));
    if (c.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  K get(std::size_t i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? K(0) : it->second;
  }

  /// Adds c·other into this vector.
  void axpy(const K& c, const SparseVec& other) {
    check_dim(other);
    if (c.is_zero()) return;
    for (const auto& [i, v] : other.entries_) add(i, c * v);
  }

  SparseVec& operator+=(const SparseVec& o) { axpy(K(1), o); return *this; }
  SparseVec& operator-=(const SparseVec& o) { axpy(K(-1), o); return *this; }
  SparseVec& operator*=(const K& c) {
    if (c.is_zero()) {
      entries_.clear();
    } else {
      for (auto& [i, v] : entries_) v *= c;
    }
    return *this;
  }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator*(const K& c, SparseVec a) { return a *= c; }
  friend SparseVec operator-(SparseVec a) { return a *= K(-1); }
  friend bool operator==(const SparseVec& a, const SparseVec& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const Map& entries() const { return entries_; }

  /// Lowest index with a nonzero entry; requires !is_zero().
  std::size_t leading() const { return entries_.begin()->first; }

  template <class F>
  auto map_scalars(F&& f) const {
    using R = decltype(f(std::declval<K>()));
    SparseVec<R> out(dim_);
    for (const auto& [i, v] : entries_) out.add(i, f(v));
    return out;
  }

 private:
  void check_dim(const SparseVec& o) const {
    if (o.dim_ != dim_) {
      throw Error("dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(o.dim_));
    }
  }

  std::size_t dim_ = 0;
  Map entries_;
};

/// Linear map stored column-wise: column j is the image of basis vector j.
template <class K>
class LinMap {
 public:
  LinMap() = default;
  LinMap(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols, SparseVec<K>(rows)) {}

  static LinMap identity(std::size_t n) {
    LinMap m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.cols_[i].add(i, K(1));
    return m;
  }

  /// Builds the matrix of a linear map given its action on basis vectors.
  static LinMap from_basis(std::size_t rows, std::size_t cols,
                           const std::function<SparseVec<K>(std::size_t)>& image) {
    LinMap m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) m.set_column(j, image(j));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }

  const SparseVec<K>& column(std::size_t j) const { return cols_.at(j); }
  void set_column(std::size_t j, SparseVec<K> v) {
    if (v.dim() != rows_) throw Error("column dimension mismatch");
    cols_.at(j) = std::move(v);
  }
  void add(std::size_t row, std::size_t col, const K& c) { cols_.at(col).add(row, c); }
  K get(std::size_t row, std::size_t col) const { return cols_.at(col).get(row); }

  SparseVec<K> apply(const SparseVec<K>& v) const {
    if (v.dim() != cols()) {
      throw Error("apply: map has " + std::to_string(cols()) + " columns, vector has dim " +
                  std::to_string(v.dim()));
    }
    SparseVec<K> out(rows_);
    for (const auto& [j, c] : v) out.axpy(c, cols_[j]);
    return out;
  }

  bool is_zero() const {
    for (const auto& c : cols_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  LinMap transpose() const {
    LinMap t(cols(), rows_);
    for (std::size_t j = 0; j < cols(); ++j) {
      for (const auto& [i, c] : cols_[j]) t.cols_[i].add(j, c);
    }
    return t;
  }

  LinMap& operator+=(const LinMap& o) {
    check_shape(o);
    for (std::size_t j = 0; j < cols(); ++j) cols_[j] += o.cols_[j];
    return *this;
  }
  LinMap& operator-=(const LinMap& o) {
    check_shape(o);
    for (std::size_t j = 0; j < cols(); ++j) cols_[j] -= o.cols_[j];
    return *this;
  }
  friend LinMap operator+(LinMap a, const LinMap& b) { return a += b; }
  friend LinMap operator-(LinMap a, const LinMap& b) { return a -= b; }
  friend LinMap operator*(const K& c, LinMap a) {
    for (auto& col : a.cols_) col *= c;
    return a;
  }
  friend bool operator==(const LinMap& a, const LinMap& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_;
  }

  /// Composition (*this) ∘ inner.
  LinMap after(const LinMap& inner) const {
    if (inner.rows() != cols()) throw Error("composition shape mismatch");
    LinMap out(rows_, inner.cols());
    for (std::size_t j = 0; j < inner.cols(); ++j) out.cols_[j] = apply(inner.cols_[j]);
    return out;
  }

  template <class F>
  auto map_scalars(F&& f) const {
    using R = decltype(f(std::declval<K>()));
    LinMap<R> out(rows_, cols());
    for (std::size_t j = 0; j < cols(); ++j) out.set_column(j, cols_[j].map_scalars(f));
    return out;
  }

 private:
  void check_shape(const LinMap& o) const {
    if (o.rows_ != rows_ || o.cols() != cols()) throw Error("shape mismatch");
  }

  std::size_t rows_ = 0;
  std::vector<SparseVec<K>> cols_;
};

/// Tensor product of vectors: index a*dim(b) + b.
template <class K>
SparseVec<K> kron(const SparseVec<K>& a, const SparseVec<K>& b) {
  SparseVec<K> out(a.dim() * b.dim());
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) out.add(i * b.dim() + j, x * y);
  }
  return out;
}

/// Tensor product of linear maps with the same row-major index convention.
template <class K>
LinMap<K> kron(const LinMap<K>& a, const LinMap<K>& b) {
  LinMap<K> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      out.set_column(i * b.cols() + j, kron(a.column(i), b.column(j)));
    }
  }
  return out;
}

/// Mixed-radix helpers for basis indices of V^{⊗n} with dim V = d
/// (first tensor factor is the most significant digit).
std::size_t checked_power(std::size_t d, std::size_t n);
std::vector<std::size_t> decode_multi(std::size_t index, std::size_t d, std::size_t n);
std::size_t encode_multi(std::span<const std::size_t> digits, std::size_t d);

/// Permutes tensor legs of V^{⊗n}: output leg k receives input leg perm[k].
template <class K>
LinMap<K> tensor_permutation(std::size_t d, std::span<const std::size_t> perm) {
  const std::size_t n = perm.size();
  const std::size_t total = checked_power(d, n);
  LinMap<K> out(total, total);
  std::vector<std::size_t> dst(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    const auto src = decode_multi(idx, d, n);
    for (std::size_t k = 0; k < n; ++k) dst[k] = src[perm[k]];
    out.add(encode_multi(dst, d), idx, K(1));
  }
  return out;
}

/// Converts a Rational vector/map into another scalar ring.
template <class K>
SparseVec<K> lift(const SparseVec<Rational>& v) {
  return v.map_scalars([](const Rational& r) { return K(r); });
}
template <class K>
LinMap<K> lift(const LinMap<Rational>& m) {
  return m.map_scalars([](const Rational& r) { return K(r); });
}

}  // namespace rackkit
