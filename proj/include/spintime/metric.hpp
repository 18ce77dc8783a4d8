#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spintime/clifford.hpp"
#include "spintime/spin_lie.hpp"
#include "spintime/sparse.hpp"

namespace spintime {

using IndexPair = std::pair<int, int>;

// [gamma_m gamma_axis, gamma_m' gamma_axis] = scale * gamma_m gamma_m'.
struct CurvatureCommutator {
  int m = 0, m_prime = 0, axis = 5;
  CliffordElement commutator;
  Rational scale;            // -2 g_axis when m != m', else 0
  bool matrix_agrees = false;  // checked in the 8x8 (or other even) rep
};

// ContractError unless gamma_axis squares to -1; ArgumentError when m or m'
// coincides with the axis. m == m' gives the zero commutator.
CurvatureCommutator curvature_commutator(int m, int m_prime, const Signature& sig = Signature::pq(3, 3),
                                         int axis = 5);

// Delta J_A o Delta J_B on the full algebra, J = c gamma_a gamma_b.
struct KillingOperatorPair {
  IndexPair a, b;
  SparseMatrix<Rational> op;
  Rational trace;
};

KillingOperatorPair killing_operator(IndexPair a, IndexPair b, const Algebra& alg, bool half = true);

// Right multiplication by gamma_a rebuilt from Grassmann operators on the
// blade basis: R_a = (mu_a - g_aa delta_a) Pi, with Pi the grade involution
// written as prod_b (delta_b mu_b - mu_b delta_b). Left multiplication is
// mu_a + g_aa delta_a.
SparseMatrix<Rational> left_from_grassmann(int a, const Algebra& alg);
SparseMatrix<Rational> right_from_grassmann(int a, const Algebra& alg);
SparseMatrix<Rational> grade_involution(const Algebra& alg);
// Delta(c gamma_a gamma_b) assembled only from the operators above.
SparseMatrix<Rational> adjoint_from_grassmann(IndexPair ab, const Algebra& alg, bool half = true);

enum class MetricCarrier { Adjoint64, Spinor8 };
std::string to_string(MetricCarrier c);

// Operator on cell^N written as a sum of elementary tensors. Each term picks
// one of the listed cell operators per slot (index 0 is the identity).
struct TensorSum {
  struct Term {
    Rational coefficient;
    std::vector<std::size_t> factors;  // one entry per slot
  };
  int cells = 0;
  std::vector<SparseMatrix<Rational>> cell_ops;
  std::vector<Term> terms;

  // Exact squared Frobenius norm from per-slot cell Gram products.
  Rational frobenius_squared() const;
  SparseMatrix<Rational> materialize() const;
};

// Q(Delta_A) Q(Delta_B) split under the exchange A <-> B:
// sym = (Q_A Q_B + Q_B Q_A)/2 and skew = Q([Delta_A, Delta_B])/2.
struct QuantifiedMetric {
  IndexPair a, b;
  int cells = 0;
  MetricCarrier carrier = MetricCarrier::Adjoint64;
  TensorSum product;
  TensorSum sym;
  TensorSum skew;
};

// Adjoint carrier while 64^N fits the dimension cap, spinor carrier beyond.
QuantifiedMetric quantified_metric(IndexPair a, IndexPair b, int cells, const Signature& sig = Signature::pq(3, 3),
                                   bool half = true);
QuantifiedMetric quantified_metric(IndexPair a, IndexPair b, int cells, MetricCarrier carrier,
                                   const Signature& sig = Signature::pq(3, 3), bool half = true);

struct SymmetryReport {
  Rational sym_squared;
  Rational skew_squared;
  double sym_norm = 0;
  double skew_norm = 0;
  double ratio = 0;
  std::vector<int> shared_indices;
};

SymmetryReport metric_symmetry_analysis(const QuantifiedMetric& qm);

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// 1/(c T)^2 in m^-2; with natural units c = 1 and T is dimensionless.
double curvature_unit(double t_seconds, bool natural_units = false);

}  // namespace spintime
