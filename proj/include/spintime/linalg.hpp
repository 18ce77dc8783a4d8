#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spintime/dense.hpp"
#include "spintime/rational.hpp"
#include "spintime/sparse.hpp"

namespace spintime {

// Counts of positive, negative and zero directions of a symmetric form.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int signature() const { return positive - negative; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
  std::string to_string() const;
};

// Sylvester inertia by exact congruence (LDL^T with symmetric pivoting and
// the a_kk := a_kk + 2 a_kj + a_jj trick for zero diagonals).
Inertia sylvester_inertia(const DenseMatrix<Rational>& symmetric);

// Inertia from eigenvalue signs; |lambda| <= tol counts as zero.
Inertia eigen_inertia(const Eigen::MatrixXd& symmetric, double tol);

// Basis of the right null space, exact, in reduced-echelon normal form.
std::vector<std::vector<Rational>> nullspace(const DenseMatrix<Rational>& m);

// Solves A x = b exactly for square nonsingular A; nullopt when singular.
std::optional<std::vector<Rational>> solve(DenseMatrix<Rational> a, std::vector<Rational> b);

// Rank by fully pivoted elimination; pivots with |p| <= tol * max|a_ij| are zero.
std::size_t numeric_rank(const Eigen::MatrixXd& m, double tol);

Eigen::MatrixXd to_eigen(const DenseMatrix<Rational>& m);
Eigen::MatrixXd to_eigen(const SparseMatrix<Rational>& m);

}  // namespace spintime
