#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spintime/clifford.hpp"
#include "spintime/sparse.hpp"

namespace spintime {

using Complex = std::complex<double>;

// Dimension cap for N-cell spaces: 2^24, lowered (never raised) by the
// SPINTIME_MAX_DIM environment variable.
std::size_t max_dimension();
// cell_dim^cells, or ResourceError when it exceeds max_dimension().
std::size_t checked_power(std::size_t cell_dim, int cells);

// scale * sum_k 1 (x) ... (x) cell (slot k) (x) ... (x) 1 on cell_dim^N.
// Slot 1 is the most significant tensor factor.
class QuantifiedOperator {
 public:
  QuantifiedOperator() = default;
  QuantifiedOperator(SparseMatrix<Rational> cell, int cells, Rational scale = Rational(1), std::string label = "");

  int cells() const { return cells_; }
  std::size_t cell_dim() const { return cell_.rows(); }
  std::size_t dim() const { return dim_; }
  const SparseMatrix<Rational>& cell() const { return cell_; }
  const Rational& scale() const { return scale_; }
  const std::string& label() const { return label_; }

  // Exact sparse operator; only call when dim() is modest.
  SparseMatrix<Rational> materialize() const;

  // y = op x without materializing.
  void apply(std::span<const Complex> x, std::span<Complex> y) const;
  std::vector<Complex> apply(const std::vector<Complex>& x) const;

 private:
  SparseMatrix<Rational> cell_;
  int cells_ = 0;
  std::size_t dim_ = 0;
  Rational scale_ = 1;
  std::string label_;
};

QuantifiedOperator quantify_operator(const SparseMatrix<Rational>& cell, int cells, std::string label = "");
QuantifiedOperator quantify_operator(const CliffordElement& x, const GammaRep& rep, int cells,
                                     std::string label = "");

// Default cell: the 8-dimensional real spinor representation of Cliff(3,3).
GammaRep cell_representation(const Signature& sig = Signature::pq(3, 3));

// x^m = Q(J_m6), p_m = Q(J_m5)/N, ihat = Q(J_65)/N, with J_ab = c gamma_a gamma_b
// and m = 1..4. J[k] is Q(J_ab) for the k-th pair in lexicographic order.
struct YangVariables {
  int cells = 0;
  bool half = true;
  Rational coefficient;
  Signature signature;
  std::vector<QuantifiedOperator> x;  // x[m-1]
  std::vector<QuantifiedOperator> p;  // p[m-1]
  QuantifiedOperator ihat;
  std::vector<std::pair<int, int>> pairs;
  std::vector<QuantifiedOperator> J;
};

YangVariables yang_orbitals(int cells, const Signature& sig = Signature::pq(3, 3), bool half = true);

struct Spectrum {
  // Imaginary parts for antisymmetric input, eigenvalues for symmetric input.
  std::vector<double> values;
  bool imaginary = true;
  // False when only the extremal pair was computed (dimension above 2^13).
  bool complete = true;
};

inline constexpr std::size_t kDenseSpectrumLimit = std::size_t{1} << 13;

// Antisymmetric or symmetric input; anything else is a ContractError.
Spectrum spectrum(const QuantifiedOperator& op);
Spectrum spectrum(const SparseMatrix<Rational>& op);

// Product of per-cell eigenvectors w with J_65 w = i s w, s > 0 maximal.
struct PolarizedState {
  int cells = 0;
  std::vector<Complex> cell_vector;
  std::vector<Complex> vector;
  double cell_extremum = 0;  // s
  double j65 = 0;            // N s, so <Q(J_65)> = i j65
};

PolarizedState polarized_state(int cells, const Signature& sig = Signature::pq(3, 3), bool half = true);

double norm(const std::vector<Complex>& v);
// <u, v> with the conjugate on u.
Complex inner(const std::vector<Complex>& u, const std::vector<Complex>& v);

struct ContractionRow {
  int cells = 0;
  double ihat_expectation = 0;  // imaginary part of <ihat>
  double ihat_square = 0;       // real part of <ihat^2>
  double vacuum_residual = 0;   // |(ihat - <ihat>) psi|
  double bracket_residual = 0;  // |([x,p] + 2c g_mm <ihat>) psi|
  double centralization = 0;    // excitation residual, see contraction_experiment
};

struct ContractionResult {
  int m = 1;
  bool half = true;
  std::vector<ContractionRow> rows;
  double slope = 0;      // least squares fit of log(centralization) against log N
  double intercept = 0;
};

// For each N: on the polarized state psi, the vacuum and bracket residuals,
// and the residual |(ihat - <ihat>_psi) phi| on the normalized excitations
// phi = x^m psi / |x^m psi| and p_m psi / |p_m psi| (the larger is kept).
ContractionResult contraction_experiment(const std::vector<int>& cell_counts, int m,
                                         const Signature& sig = Signature::pq(3, 3), bool half = true);

struct UmklappReport {
  int n1 = 0, n2 = 0, m = 1;
  double max1 = 0, max2 = 0, max12 = 0;
  double bound = 0;  // (N1 + N2) s
  bool additive = false;
  bool bounded = false;
  std::vector<double> composite_spectrum;
};

// Extremal eigenvalues of Q(J_m5) at N1, N2 and N1+N2.
UmklappReport umklapp_check(int n1, int n2, int m, const Signature& sig = Signature::pq(3, 3), bool half = true,
                            double tol = 1e-9);

}  // namespace spintime
