#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spintime/clifford.hpp"
#include "spintime/sparse.hpp"

namespace spintime {

// Element of the Grassmann algebra on e^1..e^n, keyed by index subsets.
class GrassmannElement {
 public:
  using Terms = std::map<Mask, Rational>;

  GrassmannElement() = default;
  static GrassmannElement monomial(Mask mask, const Rational& c = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Mask mask) const;
  void add_term(Mask mask, const Rational& c);

  GrassmannElement& operator+=(const GrassmannElement& o);
  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator*(const Rational& s, const GrassmannElement& a);
  friend bool operator==(const GrassmannElement&, const GrassmannElement&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

class GrassmannAlgebra {
 public:
  explicit GrassmannAlgebra(int n);

  int generator_count() const { return n_; }
  std::size_t dimension() const { return std::size_t{1} << n_; }

  GrassmannElement generator(int a) const;
  GrassmannElement wedge(const GrassmannElement& x, const GrassmannElement& y) const;
  // Left derivative by e^a: moves e^a to the front, then drops it.
  GrassmannElement derive(int a, const GrassmannElement& x) const;

  // Matrices of left multiplication by e^a and left derivation on the
  // monomial basis (basis index = mask).
  SparseMatrix<Rational> mu(int a) const;
  SparseMatrix<Rational> delta(int a) const;

  std::vector<Rational> to_vector(const GrassmannElement& x) const;
  GrassmannElement from_vector(const std::vector<Rational>& v) const;

 private:
  void check_index(int a) const;
  int n_;
};

// gamma^1..4 = mu_1..4 and gamma^5..8 = delta_1..4 on the 16-dim space.
std::vector<SparseMatrix<Rational>> flavor_gammas();

enum class FermionKind { Lepton, Quark };
enum class Color { None, R, G, B };
enum class IsospinSlot { None, U, D };

std::string to_string(FermionKind k);
std::string to_string(Color c);
std::string to_string(IsospinSlot s);

struct FlavorLabel {
  int serial = 0;
  int tier = 0;
  FermionKind kind = FermionKind::Lepton;
  Color color = Color::None;
  IsospinSlot isospin = IsospinSlot::None;
  std::string binary;  // four places, most significant first
  std::string symbol;  // nested set notation, s_0 = {}
  Mask mask = 0;       // basis monomial: bit k is e^{k+1}
};

// Serial s is the hereditarily finite set whose members are the s_k with bit
// k of s set; the tier is the least r with s < dim S(r).
FlavorLabel classify_flavor(int serial);
std::vector<FlavorLabel> hyperbinary_basis();
std::string set_symbol(unsigned serial);

// CSV with header serial,symbol,tier,kind,color,isospin_slot.
void write_flavor_csv(std::ostream& os, const std::vector<FlavorLabel>& labels);

// I_k = sum_{a,b in 5..8} (T_k)_{ab} mu_a delta_b on the 8-generator algebra,
// where T_k realifies -i sigma_k / 2 on the doublets z1 = e^5 + i e^6,
// z2 = e^7 + i e^8.
struct IsospinGenerators {
  std::array<SparseMatrix<Rational>, 3> I;
  std::array<DenseMatrix<Rational>, 3> tau;  // 4x4 blocks over e^5..e^8
  // [I_a, I_b] = sum_k closure(a,b,k) I_k
  std::array<std::array<std::array<Rational, 3>, 3>, 3> closure;
};

IsospinGenerators isospin_generators();

// ----------------------------------------------------------------- triality

enum class TrialitySpace { V, SPlus, SMinus };
std::string to_string(TrialitySpace s);

// Cliff(4,4) in 16x16 real matrices, chirality omega = Gamma_1 ... Gamma_8,
// S+- its +-1 eigenspaces, and the conjugation A with A Gamma_n = Gamma_n^T A.
struct TrialityTriple {
  GammaRep rep;
  DenseMatrix<Rational> omega;
  DenseMatrix<Rational> splus;   // 16 x 8 basis columns
  DenseMatrix<Rational> sminus;  // 16 x 8 basis columns
  DenseMatrix<Rational> conjugation;
};

TrialityTriple make_triality();

// T(v, psi+, psi-) = (P+ psi+)^T A Gamma(v) (P- psi-), Gamma(v) = sum v_n Gamma_n.
double triality_form(const TrialityTriple& t, const Eigen::VectorXd& v, const Eigen::VectorXd& splus,
                     const Eigen::VectorXd& sminus);

struct DualityResult {
  TrialitySpace fixed = TrialitySpace::V;
  Eigen::MatrixXd pairing;  // 8 x 8 over the remaining two spaces, in V, S+, S- order
  std::size_t rank = 0;
};

DualityResult triality_duality(const TrialityTriple& t, TrialitySpace fixed, const Eigen::VectorXd& vec,
                               double tol = 1e-9);

// Quadratic form of V: sum g_nn v_n^2.
double neutral_norm(const Eigen::VectorXd& v);

// Association between the 16 basis elements of S(3) and the 16 monadics
// (grade-1 part) of the Grassmann algebra one rank up, with
// dissociate(associate(s)) = s.
GrassmannElement associate(const std::vector<Rational>& s3);
std::vector<Rational> dissociate(const GrassmannElement& x);

}  // namespace spintime
