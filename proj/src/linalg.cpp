#include "spintime/linalg.hpp"

#include <cmath>

#include "spintime/error.hpp"

namespace spintime {

std::string Inertia::to_string() const {
  return "(" + std::to_string(positive) + "," + std::to_string(negative) + "," + std::to_string(zero) + ")";
}

Inertia sylvester_inertia(const DenseMatrix<Rational>& symmetric) {
  if (!symmetric.is_symmetric()) throw ArgumentError("sylvester_inertia: matrix is not symmetric");
  DenseMatrix<Rational> a = symmetric;
  const std::size_t n = a.rows();
  Inertia result;

  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t diag = k + 1;
      while (diag < n && a(diag, diag) == 0) ++diag;
      if (diag < n) {
        swap_index(k, diag);
      } else {
        std::size_t off = k + 1;
        while (off < n && a(k, off) == 0) ++off;
        if (off == n) {
          ++result.zero;  // row k of the reduced form is identically zero
          continue;
        }
        // Congruence e_k <- e_k + e_off; new pivot is 2 a_{k,off} != 0.
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(off, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, off);
      }
    }
    const Rational pivot = a(k, k);
    if (pivot > 0) ++result.positive;
    else ++result.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t j = k; j < n; ++j) a(j, i) = a(i, j);
    }
  }
  return result;
}

Inertia eigen_inertia(const Eigen::MatrixXd& symmetric, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric, Eigen::EigenvaluesOnly);
  Inertia result;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double v = solver.eigenvalues()(i);
    if (v > tol) ++result.positive;
    else if (v < -tol) ++result.negative;
    else ++result.zero;
  }
  return result;
}

std::vector<std::vector<Rational>> nullspace(const DenseMatrix<Rational>& m) {
  DenseMatrix<Rational> a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivot_cols) is_pivot[c] = 1;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(DenseMatrix<Rational> a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw ArgumentError("solve: dimension mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      std::swap(b[p], b[c]);
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      b[i] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

std::size_t numeric_rank(const Eigen::MatrixXd& m, double tol) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(tol);
  return static_cast<std::size_t>(lu.rank());
}

Eigen::MatrixXd to_eigen(const DenseMatrix<Rational>& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(m(i, j));
  return out;
}

Eigen::MatrixXd to_eigen(const SparseMatrix<Rational>& m) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t k = 0; k < m.nnz(); ++k)
    out(static_cast<Eigen::Index>(m.row_indices()[k]), static_cast<Eigen::Index>(m.col_indices()[k])) =
        to_double(m.values()[k]);
  return out;
}

}  // namespace spintime
