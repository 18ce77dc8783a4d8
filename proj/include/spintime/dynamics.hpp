#pragma once

#include <Eigen/Dense>

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "spintime/clifford.hpp"
#include "spintime/sparse.hpp"

namespace spintime {

// A = sum_{m,m',m''} J^{m''m'} J_{m'}^{m} J_{mm''} with every J the
// quantified c gamma gamma and indices raised by the diagonal metric.
struct YangDiracOperator {
  int cells = 0;
  bool half = true;
  SparseMatrix<Rational> op;
};

YangDiracOperator yang_dirac_operator(int cells, const Signature& sig = Signature::pq(3, 3), bool half = true);

// Same contraction carried out in the cell Clifford algebra, for grade
// inspection at N = 1.
CliffordElement yang_dirac_element(const Signature& sig = Signature::pq(3, 3), bool half = true);

struct DynamicsVector {
  Eigen::MatrixXd exponent;  // antisymmetric part of sum_k ihat_k S_k
  Eigen::MatrixXd matrix;    // exp(exponent)
  double discarded_symmetric_norm = 0;
  double orthogonality_error = 0;  // |D^T D - 1|_F
};

inline constexpr double kTolExp = 1e-10;

// Each component must be antisymmetric within tol (relative to its norm).
DynamicsVector dynamics_vector(const std::array<Eigen::MatrixXd, 3>& s_iso,
                               const std::array<Eigen::MatrixXd, 3>& ihat_iso, double tol = 1e-12);
// exp of one antisymmetric exponent, with the same bookkeeping.
DynamicsVector dynamics_from_exponent(const Eigen::MatrixXd& exponent);

// E = Psi_n ... Psi_1, factors listed in application order Psi_1 first.
struct HistoryPort {
  std::vector<Eigen::MatrixXd> factors;
  Eigen::MatrixXd product() const;
};

struct GreenContraction {
  double value = 0;         // tr(D E) / tr(D), NaN when not normalizable
  double unnormalized = 0;  // tr(D E)
  double trace_d = 0;
  bool normalized = false;
  std::string status;  // "ok" or a reason
};

GreenContraction green_contraction(const DynamicsVector& d, const HistoryPort& e, double tol = 1e-12);

// Clifford polynomial: terms "c * g(a) g(b) ..." joined by '+', '#' comments.
struct Polynomial {
  struct Term {
    Rational coefficient;
    std::vector<int> word;
    friend bool operator==(const Term&, const Term&) = default;
  };
  std::vector<Term> terms;

  std::string to_string() const;  // canonical form, parses back to *this
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

inline constexpr std::size_t kMaxWordLength = 10000;

// generator_count bounds the accepted indices; 0 means unchecked.
Polynomial parse_polynomial(std::string_view text, int generator_count = 0);

// Exact trace by sequential sparse multiplication.
Rational trace_polynomial(const Polynomial& p, const GammaRep& rep);
Rational trace_word(const std::vector<int>& word, const GammaRep& rep);

}  // namespace spintime
