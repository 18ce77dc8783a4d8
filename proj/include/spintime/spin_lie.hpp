#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spintime/clifford.hpp"
#include "spintime/dense.hpp"
#include "spintime/linalg.hpp"
#include "spintime/sparse.hpp"

namespace spintime {

// J_ab = c gamma_a gamma_b with a < b (1-based).
struct SoGenerator {
  int a = 0;
  int b = 0;
  Rational coefficient;
  CliffordElement element;

  std::string label() const;  // "J[a,b]"
};

// The coefficient c is 1/2 when half is set, else 1.
Rational generator_coefficient(bool half);

// All C(n,2) generators in lexicographic pair order.
std::vector<SoGenerator> so_generators(const Algebra& alg, bool half = true);

// Position of the generator for the unordered pair {a,b}; throws when absent.
std::size_t generator_index(const std::vector<SoGenerator>& gens, int a, int b);

// [e_i, e_j] = sum_k C(i,j,k) e_k.
struct StructureTensor {
  std::size_t size = 0;
  std::vector<Rational> C;

  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return C[(i * size + j) * size + k];
  }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return C[(i * size + j) * size + k]; }

  // Exact checks over all index triples.
  bool satisfies_jacobi() const;
  bool is_antisymmetric() const;
  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;
};

// Expands each bracket in the span of gens; AlgebraError naming the pair on
// failure. Jacobi is checked before returning.
StructureTensor structure_constants(const Algebra& alg, const std::vector<SoGenerator>& gens);
StructureTensor structure_constants(const Algebra& alg, const std::vector<CliffordElement>& basis);

// Same for linear operators, using exact Frobenius Gram solves and then an
// exact reconstruction check of every commutator.
StructureTensor structure_constants(const std::vector<SparseMatrix<Rational>>& ops);

struct KillingMatrix {
  DenseMatrix<Rational> K;
  Inertia inertia;        // exact, Sylvester
  Inertia float_inertia;  // eigenvalue signs at tol_eig
};

KillingMatrix killing_form(const StructureTensor& st, double tol_eig = 1e-9);

// K(x, y) for coordinate vectors over the generator basis.
Rational killing_value(const KillingMatrix& k, const std::vector<Rational>& x, const std::vector<Rational>& y);

// Coordinates of [x, y] from coordinates of x and y.
std::vector<Rational> bracket(const StructureTensor& st, const std::vector<Rational>& x,
                              const std::vector<Rational>& y);

struct AdjointOperator {
  CliffordElement source;
  SparseMatrix<Rational> matrix;  // y -> x y - y x on the blade basis
};

AdjointOperator adjoint_operator(const CliffordElement& x, const Algebra& alg);

enum class OrbitalBlock { X, P, Lorentz, C };
std::string to_string(OrbitalBlock b);

struct BlockSummary {
  OrbitalBlock block;
  std::vector<std::size_t> members;
  Inertia inertia;
};

struct PropositionReport {
  std::vector<BlockSummary> blocks;  // X, P, Lorentz, C
  bool block_diagonal = false;
  std::vector<std::pair<std::size_t, std::size_t>> off_block_nonzero;
  int signature_sum = 0;
  Inertia total;
};

// x-block (m,6), p-block (m,5), Lorentz (m',m) with m',m <= 4, C = (5,6).
std::vector<OrbitalBlock> default_partition(const std::vector<SoGenerator>& gens);

PropositionReport proposition_blocks(const KillingMatrix& k, const std::vector<OrbitalBlock>& partition);

}  // namespace spintime
