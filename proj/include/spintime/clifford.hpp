#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spintime/rational.hpp"
#include "spintime/sparse.hpp"

namespace spintime {

// Generator indices are 1-based throughout the public API, matching the
// usual gamma^1 ... gamma^n labelling. Bit (a-1) of a Mask is generator a.
using Mask = std::uint32_t;

inline constexpr int kMaxGenerators = 16;

class Signature {
 public:
  Signature() = default;

  // Default frame: generators 1..p square to +1, p+1..p+q to -1. For (3,3)
  // this is g_11 = g_22 = g_33 = -g_44 = -g_55 = -g_66 = 1.
  static Signature pq(int p, int q);
  static Signature from_diag(std::vector<int> diag);

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return static_cast<int>(diag_.size()); }
  const std::vector<int>& diag() const { return diag_; }

  // g_aa for 1-based a; g is diagonal in every frame we use.
  int metric(int a) const;

  std::string to_string() const;
  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_ = 0;
  int q_ = 0;
  std::vector<int> diag_;
};

struct Blade {
  Mask mask = 0;
  int sign = 1;

  static Blade unit() { return {}; }
  static Blade generator(int a);
  int grade() const;
  friend bool operator==(const Blade&, const Blade&) = default;
};

// Sign of reordering the concatenation e_A e_B into canonical increasing
// order, ignoring metric contractions.
int reorder_sign(Mask a, Mask b);

// Signed product of two blades. Repeated generators contract with g_aa.
Blade blade_product(const Blade& a, const Blade& b, const Signature& sig);

// Sparse real-coefficient sum of blades, no zero coefficients stored.
class CliffordElement {
 public:
  using Terms = std::map<Mask, Rational>;

  CliffordElement() = default;
  static CliffordElement scalar(const Rational& c);
  static CliffordElement blade(Mask mask, const Rational& c = Rational(1));
  static CliffordElement from_blade(const Blade& b);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Mask mask) const;
  void add_term(Mask mask, const Rational& c);

  // Sorted list of grades with nonzero content.
  std::vector<int> grades() const;
  Rational scalar_part() const { return coefficient(0); }

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement& operator*=(const Rational& s);

  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(const Rational& s, CliffordElement a) { return a *= s; }
  friend CliffordElement operator-(CliffordElement a) { return a *= Rational(-1); }
  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

  // e.g. "1/2*e12 - e3 + 2"; "0" for the empty sum.
  std::string to_string() const;

 private:
  Terms terms_;
};

CliffordElement grade_project(const CliffordElement& x, int k);

// Multiplication table folded into one sign per (A, B): e_A e_B = s e_{A^B}.
struct ProductTable {
  std::size_t dimension = 0;
  std::vector<std::int8_t> signs;  // row-major dimension x dimension

  int sign(Mask a, Mask b) const { return signs[static_cast<std::size_t>(a) * dimension + b]; }
};

// Immutable handle for Cliff(p,q); all methods are pure.
class Algebra {
 public:
  explicit Algebra(Signature sig);

  const Signature& signature() const { return sig_; }
  int generator_count() const { return sig_.n(); }
  std::size_t dimension() const { return std::size_t{1} << sig_.n(); }

  CliffordElement unit() const { return CliffordElement::scalar(1); }
  CliffordElement generator(int a) const;
  // gamma_a gamma_b for a != b (1-based), coefficient c.
  CliffordElement bivector(int a, int b, const Rational& c = Rational(1)) const;
  // Ordered product of the listed generators.
  CliffordElement word(const std::vector<int>& generators) const;

  int product_sign(Mask a, Mask b) const;
  // Only for algebras of at most 8 generators.
  ProductTable product_table() const;

  CliffordElement multiply(const CliffordElement& x, const CliffordElement& y) const;
  CliffordElement commutator(const CliffordElement& x, const CliffordElement& y) const;
  CliffordElement anticommutator(const CliffordElement& x, const CliffordElement& y) const;

  // Matrices of y -> x y and y -> y x on the blade basis.
  SparseMatrix<Rational> left_multiplication(const CliffordElement& x) const;
  SparseMatrix<Rational> right_multiplication(const CliffordElement& x) const;

 private:
  void check_index(int a) const;
  Signature sig_;
};

Algebra make_algebra(const Signature& sig);

// Real matrix representation Gamma_1..Gamma_n. Every matrix is a signed
// permutation matrix, hence orthogonal with Gamma_a^T = g_aa Gamma_a.
struct GammaRep {
  Signature signature;
  std::size_t dim = 1;
  std::vector<SparseMatrix<Rational>> gammas;

  const SparseMatrix<Rational>& gamma(int a) const { return gammas.at(static_cast<std::size_t>(a - 1)); }
  SparseMatrix<Rational> identity() const { return SparseMatrix<Rational>::identity(dim); }
  // Gamma_a Gamma_b (a != b) times c.
  SparseMatrix<Rational> bivector(int a, int b, const Rational& c = Rational(1)) const;
  // Product of the gammas named in the mask, in increasing index order.
  SparseMatrix<Rational> blade(Mask mask) const;
};

// Irreducible real representation for even p+q <= 8, built by recursive
// doubling. Throws UnsupportedError otherwise.
GammaRep matrix_rep(const Signature& sig);

// Smallest real irreducible dimension for even n = p+q.
std::size_t minimal_real_dimension(const Signature& sig);

// Image of a Clifford element under a representation.
SparseMatrix<Rational> represent(const CliffordElement& x, const GammaRep& rep);

// Checks Gamma_a Gamma_b + Gamma_b Gamma_a = 2 g_ab 1 exactly.
bool satisfies_anticommutator(const GammaRep& rep);

// dim S(r) = 2^dim S(r-1), dim S(0) = 1; delta(r) = dim(r) - dim(r-1).
// Ranks >= 5 are exponent towers and carry no exact value.
struct RankDimension {
  int rank = 0;
  std::optional<BigInt> dim;
  std::optional<BigInt> delta;
  std::string dim_text;
  std::string delta_text;
};

RankDimension rank_dimensions(int r);

}  // namespace spintime
