#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "spintime/dense.hpp"

namespace spintime {

template <class T>
struct Triplet {
  std::size_t row;
  std::size_t col;
  T value;
};

// Coordinate-list sparse matrix kept in canonical (row, col) order with no
// stored zeros, so structural equality is value equality. Row offsets are
// maintained alongside, which makes products and mat-vecs CSR-speed.
template <class T>
class SparseMatrix {
 public:
  SparseMatrix() : row_ptr_(1, 0) {}
  SparseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    std::vector<Triplet<T>> triplets) {
    std::sort(triplets.begin(), triplets.end(), [](const auto& a, const auto& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    SparseMatrix m(rows, cols);
    m.row_idx_.reserve(triplets.size());
    m.col_idx_.reserve(triplets.size());
    m.values_.reserve(triplets.size());
    for (std::size_t k = 0; k < triplets.size();) {
      const std::size_t r = triplets[k].row;
      const std::size_t c = triplets[k].col;
      assert(r < rows && c < cols);
      T sum = std::move(triplets[k].value);
      for (++k; k < triplets.size() && triplets[k].row == r && triplets[k].col == c; ++k)
        sum += triplets[k].value;
      if (sum != T(0)) m.push_back(r, c, std::move(sum));
    }
    m.finish();
    return m;
  }

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.push_back(i, i, T(1));
    m.finish();
    return m;
  }

  static SparseMatrix from_dense(const DenseMatrix<T>& d) {
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (d(i, j) != T(0)) m.push_back(i, j, d(i, j));
    m.finish();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return values_.size(); }
  bool square() const { return rows_ == cols_; }

  std::span<const std::size_t> row_indices() const { return row_idx_; }
  std::span<const std::size_t> col_indices() const { return col_idx_; }
  std::span<const T> values() const { return values_; }
  std::size_t row_begin(std::size_t r) const { return row_ptr_[r]; }
  std::size_t row_end(std::size_t r) const { return row_ptr_[r + 1]; }

  T at(std::size_t i, std::size_t j) const {
    const auto first = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
    const auto last = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
    const auto it = std::lower_bound(first, last, j);
    if (it == last || *it != j) return T(0);
    return values_[static_cast<std::size_t>(it - col_idx_.begin())];
  }

  bool is_zero() const { return values_.empty(); }

  T trace() const {
    T s(0);
    for (std::size_t k = 0; k < nnz(); ++k)
      if (row_idx_[k] == col_idx_[k]) s += values_[k];
    return s;
  }

  SparseMatrix transpose() const {
    std::vector<Triplet<T>> t;
    t.reserve(nnz());
    for (std::size_t k = 0; k < nnz(); ++k) t.push_back({col_idx_[k], row_idx_[k], values_[k]});
    return from_triplets(cols_, rows_, std::move(t));
  }

  bool is_symmetric() const { return square() && *this == transpose(); }
  bool is_antisymmetric() const { return square() && *this == -transpose(); }

  template <class F>
  auto map(F f) const -> SparseMatrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<Triplet<U>> t;
    t.reserve(nnz());
    for (std::size_t k = 0; k < nnz(); ++k) t.push_back({row_idx_[k], col_idx_[k], f(values_[k])});
    return SparseMatrix<U>::from_triplets(rows_, cols_, std::move(t));
  }

  DenseMatrix<T> to_dense() const {
    DenseMatrix<T> d(rows_, cols_);
    for (std::size_t k = 0; k < nnz(); ++k) d(row_idx_[k], col_idx_[k]) = values_[k];
    return d;
  }

  // y = A x. V may differ from T (e.g. exact entries acting on doubles) as
  // long as a conversion function is supplied.
  template <class V, class Convert>
  void apply(std::span<const V> x, std::span<V> y, Convert conv) const {
    assert(x.size() == cols_ && y.size() == rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      V acc{};
      for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) acc += conv(values_[k]) * x[col_idx_[k]];
      y[r] = acc;
    }
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_idx_ == b.row_idx_ &&
           a.col_idx_ == b.col_idx_ && a.values_ == b.values_;
  }

  friend SparseMatrix operator-(const SparseMatrix& a) {
    SparseMatrix m = a;
    for (auto& v : m.values_) v = -v;
    return m;
  }

  friend SparseMatrix operator*(const T& s, const SparseMatrix& a) {
    if (s == T(0)) return SparseMatrix(a.rows_, a.cols_);
    SparseMatrix m = a;
    for (auto& v : m.values_) v *= s;
    return m;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    return combine(a, b, false);
  }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    return combine(a, b, true);
  }

  // Gustavson row-by-row product with a dense accumulator.
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    assert(a.cols_ == b.rows_);
    SparseMatrix c(a.rows_, b.cols_);
    std::vector<T> acc(b.cols_, T(0));
    std::vector<char> used(b.cols_, 0);
    std::vector<std::size_t> touched;
    for (std::size_t r = 0; r < a.rows_; ++r) {
      touched.clear();
      for (std::size_t ka = a.row_ptr_[r]; ka < a.row_ptr_[r + 1]; ++ka) {
        const std::size_t mid = a.col_idx_[ka];
        const T& av = a.values_[ka];
        for (std::size_t kb = b.row_ptr_[mid]; kb < b.row_ptr_[mid + 1]; ++kb) {
          const std::size_t col = b.col_idx_[kb];
          if (!used[col]) {
            used[col] = 1;
            touched.push_back(col);
          }
          acc[col] += av * b.values_[kb];
        }
      }
      std::sort(touched.begin(), touched.end());
      for (std::size_t col : touched) {
        if (acc[col] != T(0)) c.push_back(r, col, acc[col]);
        acc[col] = T(0);
        used[col] = 0;
      }
    }
    c.finish();
    return c;
  }

 private:
  void push_back(std::size_t r, std::size_t c, T v) {
    row_idx_.push_back(r);
    col_idx_.push_back(c);
    values_.push_back(std::move(v));
  }

  void finish() {
    row_ptr_.assign(rows_ + 1, 0);
    for (std::size_t r : row_idx_) ++row_ptr_[r + 1];
    for (std::size_t r = 0; r < rows_; ++r) row_ptr_[r + 1] += row_ptr_[r];
  }

  static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    SparseMatrix m(a.rows_, a.cols_);
    std::size_t i = 0, j = 0;
    while (i < a.nnz() || j < b.nnz()) {
      int order;  // <0: take a, >0: take b, 0: same position
      if (j == b.nnz()) {
        order = -1;
      } else if (i == a.nnz()) {
        order = 1;
      } else if (a.row_idx_[i] != b.row_idx_[j]) {
        order = a.row_idx_[i] < b.row_idx_[j] ? -1 : 1;
      } else if (a.col_idx_[i] != b.col_idx_[j]) {
        order = a.col_idx_[i] < b.col_idx_[j] ? -1 : 1;
      } else {
        order = 0;
      }
      if (order < 0) {
        m.push_back(a.row_idx_[i], a.col_idx_[i], a.values_[i]);
        ++i;
      } else if (order > 0) {
        m.push_back(b.row_idx_[j], b.col_idx_[j], subtract ? T(-b.values_[j]) : b.values_[j]);
        ++j;
      } else {
        T v = subtract ? T(a.values_[i] - b.values_[j]) : T(a.values_[i] + b.values_[j]);
        if (v != T(0)) m.push_back(a.row_idx_[i], a.col_idx_[i], std::move(v));
        ++i;
        ++j;
      }
    }
    m.finish();
    return m;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_idx_;
  std::vector<std::size_t> col_idx_;
  std::vector<T> values_;
  std::vector<std::size_t> row_ptr_;
};

template <class T>
SparseMatrix<T> commutator(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  return a * b - b * a;
}

template <class T>
SparseMatrix<T> anticommutator(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  return a * b + b * a;
}

// Frobenius inner product sum_ij a_ij b_ij.
template <class T>
T frobenius_inner(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  T s(0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::size_t ka = a.row_begin(r), kb = b.row_begin(r);
    while (ka < a.row_end(r) && kb < b.row_end(r)) {
      const std::size_t ca = a.col_indices()[ka], cb = b.col_indices()[kb];
      if (ca == cb) {
        s += a.values()[ka] * b.values()[kb];
        ++ka;
        ++kb;
      } else if (ca < cb) {
        ++ka;
      } else {
        ++kb;
      }
    }
  }
  return s;
}

template <class T>
SparseMatrix<T> kron(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  std::vector<Triplet<T>> t;
  t.reserve(a.nnz() * b.nnz());
  for (std::size_t ka = 0; ka < a.nnz(); ++ka)
    for (std::size_t kb = 0; kb < b.nnz(); ++kb)
      t.push_back({a.row_indices()[ka] * b.rows() + b.row_indices()[kb],
                   a.col_indices()[ka] * b.cols() + b.col_indices()[kb],
                   a.values()[ka] * b.values()[kb]});
  return SparseMatrix<T>::from_triplets(a.rows() * b.rows(), a.cols() * b.cols(), std::move(t));
}

}  // namespace spintime
