#include "spintime/flavor.hpp"

#include <Eigen/LU>

#include <bit>
#include <cmath>
#include <sstream>

#include "spintime/error.hpp"
#include "spintime/linalg.hpp"
#include "spintime/spin_lie.hpp"

namespace spintime {

// --------------------------------------------------------------- Grassmann

GrassmannElement GrassmannElement::monomial(Mask mask, const Rational& c) {
  GrassmannElement x;
  x.add_term(mask, c);
  return x;
}

Rational GrassmannElement::coefficient(Mask mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GrassmannElement::add_term(Mask mask, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GrassmannElement operator*(const Rational& s, const GrassmannElement& a) {
  GrassmannElement out;
  for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
  return out;
}

std::string GrassmannElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    os << (first ? "" : " + ") << spintime::to_string(c);
    first = false;
    for (Mask m = mask; m != 0; m &= m - 1) os << "*e" << (std::countr_zero(m) + 1);
  }
  return os.str();
}

GrassmannAlgebra::GrassmannAlgebra(int n) : n_(n) {
  if (n < 0) throw ArgumentError("Grassmann generator count must be non-negative");
  if (n > kMaxGenerators) throw ResourceError("Grassmann algebra is capped at 16 generators");
}

void GrassmannAlgebra::check_index(int a) const {
  if (a < 1 || a > n_) throw ArgumentError("Grassmann index " + std::to_string(a) + " out of range");
}

namespace {

// Number of generators in mask with index below bit.
int below(Mask mask, Mask bit) { return std::popcount(mask & (bit - 1)); }

}  // namespace

GrassmannElement GrassmannAlgebra::generator(int a) const {
  check_index(a);
  return GrassmannElement::monomial(Mask{1} << (a - 1));
}

GrassmannElement GrassmannAlgebra::wedge(const GrassmannElement& x, const GrassmannElement& y) const {
  GrassmannElement out;
  for (const auto& [ma, ca] : x.terms())
    for (const auto& [mb, cb] : y.terms()) {
      if (ma & mb) continue;
      const Rational c = ca * cb;
      out.add_term(ma | mb, reorder_sign(ma, mb) > 0 ? c : Rational(-c));
    }
  return out;
}

GrassmannElement GrassmannAlgebra::derive(int a, const GrassmannElement& x) const {
  check_index(a);
  const Mask bit = Mask{1} << (a - 1);
  GrassmannElement out;
  for (const auto& [m, c] : x.terms())
    if (m & bit) out.add_term(m ^ bit, below(m, bit) % 2 ? Rational(-c) : c);
  return out;
}

SparseMatrix<Rational> GrassmannAlgebra::mu(int a) const {
  check_index(a);
  const Mask bit = Mask{1} << (a - 1);
  std::vector<Triplet<Rational>> t;
  for (Mask m = 0; m < dimension(); ++m)
    if (!(m & bit)) t.push_back({m | bit, m, Rational(below(m, bit) % 2 ? -1 : 1)});
  return SparseMatrix<Rational>::from_triplets(dimension(), dimension(), std::move(t));
}

SparseMatrix<Rational> GrassmannAlgebra::delta(int a) const {
  check_index(a);
  const Mask bit = Mask{1} << (a - 1);
  std::vector<Triplet<Rational>> t;
  for (Mask m = 0; m < dimension(); ++m)
    if (m & bit) t.push_back({m ^ bit, m, Rational(below(m, bit) % 2 ? -1 : 1)});
  return SparseMatrix<Rational>::from_triplets(dimension(), dimension(), std::move(t));
}

std::vector<Rational> GrassmannAlgebra::to_vector(const GrassmannElement& x) const {
  std::vector<Rational> v(dimension());
  for (const auto& [m, c] : x.terms()) {
    if (m >= dimension()) throw ArgumentError("element uses generators outside the algebra");
    v[m] = c;
  }
  return v;
}

GrassmannElement GrassmannAlgebra::from_vector(const std::vector<Rational>& v) const {
  if (v.size() != dimension()) throw ArgumentError("vector length does not match the algebra dimension");
  GrassmannElement x;
  for (Mask m = 0; m < v.size(); ++m) x.add_term(m, v[m]);
  return x;
}

std::vector<SparseMatrix<Rational>> flavor_gammas() {
  const GrassmannAlgebra g(4);
  std::vector<SparseMatrix<Rational>> out;
  for (int a = 1; a <= 4; ++a) out.push_back(g.mu(a));
  for (int a = 1; a <= 4; ++a) out.push_back(g.delta(a));
  return out;
}

// ------------------------------------------------------------------ flavor

std::string to_string(FermionKind k) { return k == FermionKind::Lepton ? "lepton" : "quark"; }

std::string to_string(Color c) {
  switch (c) {
    case Color::R: return "R";
    case Color::G: return "G";
    case Color::B: return "B";
    case Color::None: break;
  }
  return "none";
}

std::string to_string(IsospinSlot s) {
  switch (s) {
    case IsospinSlot::U: return "U";
    case IsospinSlot::D: return "D";
    case IsospinSlot::None: break;
  }
  return "none";
}

std::string set_symbol(unsigned serial) {
  std::string out = "{";
  bool first = true;
  for (unsigned k = 0; (serial >> k) != 0; ++k)
    if ((serial >> k) & 1u) {
      out += first ? "" : ",";
      out += set_symbol(k);
      first = false;
    }
  return out + "}";
}

FlavorLabel classify_flavor(int serial) {
  if (serial < 0 || serial > 15) throw ArgumentError("flavor serial must be in 0..15");
  FlavorLabel f;
  f.serial = serial;
  f.mask = static_cast<Mask>(serial);
  // dim S(r) = 1, 2, 4, 16.
  f.tier = serial < 1 ? 0 : serial < 2 ? 1 : serial < 4 ? 2 : 3;
  const int lepton_part = serial % 4;
  const int color_part = serial / 4;
  if (f.tier == 3) {
    f.kind = FermionKind::Quark;
    f.color = color_part == 1 ? Color::R : color_part == 2 ? Color::G : Color::B;
  }
  if (lepton_part == 1) f.isospin = IsospinSlot::U;
  if (lepton_part == 2) f.isospin = IsospinSlot::D;
  for (int k = 3; k >= 0; --k) f.binary += ((serial >> k) & 1) ? '1' : '0';
  f.symbol = set_symbol(static_cast<unsigned>(serial));
  return f;
}

std::vector<FlavorLabel> hyperbinary_basis() {
  std::vector<FlavorLabel> out;
  for (int s = 0; s < 16; ++s) out.push_back(classify_flavor(s));
  return out;
}

void write_flavor_csv(std::ostream& os, const std::vector<FlavorLabel>& labels) {
  os << "serial,symbol,tier,kind,color,isospin_slot\n";
  for (const auto& f : labels)
    os << f.serial << ",\"" << f.symbol << "\"," << f.tier << "," << to_string(f.kind) << "," << to_string(f.color)
       << "," << to_string(f.isospin) << "\n";
}

// ----------------------------------------------------------------- isospin

IsospinGenerators isospin_generators() {
  // -i sigma_k / 2 as (re, im) pairs, numerators over 2.
  using C2 = std::array<std::array<std::pair<int, int>, 2>, 2>;
  const std::array<C2, 3> m = {{
      {{{{{0, 0}, {0, -1}}}, {{{0, -1}, {0, 0}}}}},
      {{{{{0, 0}, {-1, 0}}}, {{{1, 0}, {0, 0}}}}},
      {{{{{0, -1}, {0, 0}}}, {{{0, 0}, {0, 1}}}}},
  }};
  const GrassmannAlgebra g(8);
  IsospinGenerators out;
  for (int k = 0; k < 3; ++k) {
    DenseMatrix<Rational> t(4, 4);
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) {
        const Rational re(m[k][p][q].first, 2), im(m[k][p][q].second, 2);
        t(2 * p, 2 * q) = re;
        t(2 * p, 2 * q + 1) = -im;
        t(2 * p + 1, 2 * q) = im;
        t(2 * p + 1, 2 * q + 1) = re;
      }
    SparseMatrix<Rational> op(g.dimension(), g.dimension());
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (t(a, b) != 0) op = op + t(a, b) * (g.mu(5 + a) * g.delta(5 + b));
    out.tau[k] = std::move(t);
    out.I[k] = std::move(op);
  }
  const std::vector<SparseMatrix<Rational>> ops(out.I.begin(), out.I.end());
  StructureTensor st;
  try {
    st = structure_constants(ops);
  } catch (const AlgebraError& e) {
    throw AlgebraError(std::string("isospin generators do not close: ") + e.what());
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int k = 0; k < 3; ++k) out.closure[a][b][k] = st(a, b, k);
  return out;
}

// ---------------------------------------------------------------- triality

std::string to_string(TrialitySpace s) {
  switch (s) {
    case TrialitySpace::V: return "V";
    case TrialitySpace::SPlus: return "S+";
    case TrialitySpace::SMinus: return "S-";
  }
  return "?";
}

namespace {

DenseMatrix<Rational> columns(const std::vector<std::vector<Rational>>& vecs, std::size_t rows) {
  DenseMatrix<Rational> m(rows, vecs.size());
  for (std::size_t j = 0; j < vecs.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = vecs[j][i];
  return m;
}

// Solves X Gamma_n = Gamma_n^T X in floating point, then rounds the kernel
// vector to integers and checks the result exactly.
DenseMatrix<Rational> solve_conjugation(const GammaRep& rep) {
  const auto d = static_cast<Eigen::Index>(rep.dim);
  const auto n = static_cast<Eigen::Index>(rep.gammas.size());
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(n * d * d, d * d);
  for (Eigen::Index g = 0; g < n; ++g) {
    const Eigen::MatrixXd G = to_eigen(rep.gammas[static_cast<std::size_t>(g)]);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        const Eigen::Index row = (g * d + i) * d + j;
        for (Eigen::Index k = 0; k < d; ++k) {
          sys(row, i * d + k) += G(k, j);
          sys(row, k * d + j) -= G(k, i);
        }
      }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
  lu.setThreshold(1e-12);
  const Eigen::MatrixXd kernel = lu.kernel();
  if (kernel.cols() != 1)
    throw ConstructionError("conjugation intertwiner is not unique (kernel dimension " +
                            std::to_string(kernel.cols()) + ")");
  Eigen::VectorXd x = kernel.col(0);
  Eigen::Index arg = 0;
  x.cwiseAbs().maxCoeff(&arg);
  x /= x(arg);
  DenseMatrix<Rational> a(rep.dim, rep.dim);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      const double v = x(i * d + j);
      if (std::abs(v - std::round(v)) > 1e-9) throw ConstructionError("conjugation intertwiner is not integral");
      a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(static_cast<long>(std::round(v)));
    }
  for (const auto& g : rep.gammas) {
    const auto G = g.to_dense();
    if (!(a * G == G.transpose() * a)) throw ConstructionError("rounded conjugation fails the exact check");
  }
  return a;
}

void check_length(const Eigen::VectorXd& v, const char* what) {
  if (v.size() != 8) throw ArgumentError(std::string(what) + " must have 8 components");
}

}  // namespace

TrialityTriple make_triality() {
  TrialityTriple t;
  t.rep = matrix_rep(Signature::pq(4, 4));
  SparseMatrix<Rational> w = t.rep.identity();
  for (const auto& g : t.rep.gammas) w = w * g;
  t.omega = w.to_dense();
  const auto id = DenseMatrix<Rational>::identity(t.rep.dim);
  const auto plus = nullspace(t.omega - id);
  const auto minus = nullspace(t.omega + id);
  if (plus.size() != 8 || minus.size() != 8) throw ConstructionError("half-spinor spaces are not 8-dimensional");
  t.splus = columns(plus, t.rep.dim);
  t.sminus = columns(minus, t.rep.dim);
  t.conjugation = solve_conjugation(t.rep);
  return t;
}

namespace {

Eigen::MatrixXd gamma_of(const TrialityTriple& t, const Eigen::VectorXd& v) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(16, 16);
  for (int n = 0; n < 8; ++n) g += v(n) * to_eigen(t.rep.gammas[static_cast<std::size_t>(n)]);
  return g;
}

}  // namespace

double triality_form(const TrialityTriple& t, const Eigen::VectorXd& v, const Eigen::VectorXd& splus,
                     const Eigen::VectorXd& sminus) {
  check_length(v, "vector");
  check_length(splus, "S+ spinor");
  check_length(sminus, "S- spinor");
  const Eigen::VectorXd a = to_eigen(t.splus) * splus;
  const Eigen::VectorXd b = to_eigen(t.sminus) * sminus;
  return a.dot(to_eigen(t.conjugation) * gamma_of(t, v) * b);
}

DualityResult triality_duality(const TrialityTriple& t, TrialitySpace fixed, const Eigen::VectorXd& vec,
                               double tol) {
  check_length(vec, "fixed vector");
  if (vec.norm() == 0) throw ArgumentError("triality_duality needs a nonzero vector");
  const Eigen::MatrixXd A = to_eigen(t.conjugation);
  const Eigen::MatrixXd P = to_eigen(t.splus);
  const Eigen::MatrixXd M = to_eigen(t.sminus);
  DualityResult r;
  r.fixed = fixed;
  switch (fixed) {
    case TrialitySpace::V:
      r.pairing = P.transpose() * A * gamma_of(t, vec) * M;
      break;
    case TrialitySpace::SPlus: {
      const Eigen::RowVectorXd left = (P * vec).transpose() * A;
      r.pairing.resize(8, 8);
      for (int n = 0; n < 8; ++n)
        r.pairing.row(n) = left * to_eigen(t.rep.gammas[static_cast<std::size_t>(n)]) * M;
      break;
    }
    case TrialitySpace::SMinus: {
      const Eigen::VectorXd right = M * vec;
      r.pairing.resize(8, 8);
      for (int n = 0; n < 8; ++n)
        r.pairing.row(n) = (P.transpose() * A * to_eigen(t.rep.gammas[static_cast<std::size_t>(n)]) * right).transpose();
      break;
    }
  }
  r.rank = numeric_rank(r.pairing, tol);
  return r;
}

double neutral_norm(const Eigen::VectorXd& v) {
  check_length(v, "vector");
  double s = 0;
  for (int n = 0; n < 8; ++n) s += (n < 4 ? 1.0 : -1.0) * v(n) * v(n);
  return s;
}

GrassmannElement associate(const std::vector<Rational>& s3) {
  if (s3.size() != 16) throw ArgumentError("associate expects the 16 coordinates of S(3)");
  GrassmannElement x;
  for (std::size_t k = 0; k < 16; ++k) x.add_term(Mask{1} << k, s3[k]);
  return x;
}

std::vector<Rational> dissociate(const GrassmannElement& x) {
  std::vector<Rational> out(16);
  for (const auto& [m, c] : x.terms())
    if (std::popcount(m) == 1 && m < (Mask{1} << 16)) out[static_cast<std::size_t>(std::countr_zero(m))] = c;
  return out;
}

}  // namespace spintime
