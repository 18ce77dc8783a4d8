#include "spintime/spin_lie.hpp"

#include <map>

#include "spintime/error.hpp"

namespace spintime {

std::string SoGenerator::label() const { return "J[" + std::to_string(a) + "," + std::to_string(b) + "]"; }

Rational generator_coefficient(bool half) { return half ? Rational(1, 2) : Rational(1); }

std::vector<SoGenerator> so_generators(const Algebra& alg, bool half) {
  const int n = alg.generator_count();
  if (n < 2) throw ArgumentError("so_generators needs at least two generators");
  const Rational c = generator_coefficient(half);
  std::vector<SoGenerator> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.push_back({a, b, c, alg.bivector(a, b, c)});
  return out;
}

std::size_t generator_index(const std::vector<SoGenerator>& gens, int a, int b) {
  if (a > b) std::swap(a, b);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].a == a && gens[i].b == b) return i;
  throw ArgumentError("no generator for pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

bool StructureTensor::is_antisymmetric() const {
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      for (std::size_t k = 0; k < size; ++k)
        if ((*this)(i, j, k) != -(*this)(j, i, k)) return false;
  return true;
}

bool StructureTensor::satisfies_jacobi() const {
  const std::size_t n = size;
  // [[e_i,e_j],e_k] + cyclic, expanded coefficient by coefficient.
  std::vector<Rational> acc(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::fill(acc.begin(), acc.end(), Rational(0));
        const std::size_t cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& t : cyc)
          for (std::size_t m = 0; m < n; ++m) {
            const Rational& c1 = (*this)(t[0], t[1], m);
            if (c1 == 0) continue;
            for (std::size_t l = 0; l < n; ++l) acc[l] += c1 * (*this)(m, t[2], l);
          }
        for (const auto& v : acc)
          if (v != 0) return false;
      }
  return true;
}

namespace {

// Coefficients of v in an independent family given by its Gram matrix and the
// inner products <b_i, v>; the caller verifies the reconstruction.
std::vector<Rational> gram_coordinates(const DenseMatrix<Rational>& gram, std::vector<Rational> rhs) {
  auto x = solve(gram, std::move(rhs));
  if (!x) throw AlgebraError("basis is linearly dependent");
  return *x;
}

Rational dot(const CliffordElement& x, const CliffordElement& y) {
  Rational s = 0;
  for (const auto& [mask, c] : x.terms()) s += c * y.coefficient(mask);
  return s;
}

}  // namespace

StructureTensor structure_constants(const Algebra& alg, const std::vector<CliffordElement>& basis) {
  const std::size_t n = basis.size();
  DenseMatrix<Rational> gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = dot(basis[i], basis[j]);
  StructureTensor st;
  st.size = n;
  st.C.assign(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const CliffordElement br = alg.commutator(basis[i], basis[j]);
      std::vector<Rational> rhs(n);
      for (std::size_t k = 0; k < n; ++k) rhs[k] = dot(basis[k], br);
      const auto coords = gram_coordinates(gram, std::move(rhs));
      CliffordElement rebuilt;
      for (std::size_t k = 0; k < n; ++k) rebuilt += coords[k] * basis[k];
      if (!(rebuilt == br))
        throw AlgebraError("bracket of basis elements " + std::to_string(i) + " and " + std::to_string(j) +
                           " leaves the span: " + br.to_string());
      for (std::size_t k = 0; k < n; ++k) {
        st(i, j, k) = coords[k];
        st(j, i, k) = -coords[k];
      }
    }
  if (!st.satisfies_jacobi()) throw AlgebraError("structure constants violate the Jacobi identity");
  return st;
}

StructureTensor structure_constants(const Algebra& alg, const std::vector<SoGenerator>& gens) {
  std::vector<CliffordElement> basis;
  basis.reserve(gens.size());
  for (const auto& g : gens) basis.push_back(g.element);
  try {
    return structure_constants(alg, basis);
  } catch (const AlgebraError& e) {
    throw AlgebraError(std::string("so generators: ") + e.what());
  }
}

StructureTensor structure_constants(const std::vector<SparseMatrix<Rational>>& ops) {
  const std::size_t n = ops.size();
  DenseMatrix<Rational> gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) gram(i, j) = gram(j, i) = frobenius_inner(ops[i], ops[j]);
  StructureTensor st;
  st.size = n;
  st.C.assign(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto br = commutator(ops[i], ops[j]);
      std::vector<Rational> rhs(n);
      for (std::size_t k = 0; k < n; ++k) rhs[k] = frobenius_inner(ops[k], br);
      const auto coords = gram_coordinates(gram, std::move(rhs));
      SparseMatrix<Rational> rebuilt(br.rows(), br.cols());
      for (std::size_t k = 0; k < n; ++k)
        if (coords[k] != 0) rebuilt = rebuilt + coords[k] * ops[k];
      if (!(rebuilt == br))
        throw AlgebraError("operator bracket " + std::to_string(i) + "," + std::to_string(j) + " leaves the span");
      for (std::size_t k = 0; k < n; ++k) {
        st(i, j, k) = coords[k];
        st(j, i, k) = -coords[k];
      }
    }
  if (!st.satisfies_jacobi()) throw AlgebraError("operator structure constants violate the Jacobi identity");
  return st;
}

KillingMatrix killing_form(const StructureTensor& st, double tol_eig) {
  const std::size_t n = st.size;
  KillingMatrix km;
  km.K = DenseMatrix<Rational>(n, n);
  // (ad_a)_{cd} = C(a,d,c), so tr(ad_a ad_b) = sum_{c,d} C(a,d,c) C(b,c,d).
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Rational s = 0;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const Rational& x = st(a, d, c);
          if (x != 0) s += x * st(b, c, d);
        }
      km.K(a, b) = s;
      km.K(b, a) = s;
    }
  km.inertia = sylvester_inertia(km.K);
  km.float_inertia = eigen_inertia(to_eigen(km.K), tol_eig);
  return km;
}

Rational killing_value(const KillingMatrix& k, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const std::size_t n = k.K.rows();
  if (x.size() != n || y.size() != n) throw ArgumentError("killing_value: coordinate length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (y[j] != 0) s += x[i] * k.K(i, j) * y[j];
  }
  return s;
}

std::vector<Rational> bracket(const StructureTensor& st, const std::vector<Rational>& x,
                              const std::vector<Rational>& y) {
  const std::size_t n = st.size;
  if (x.size() != n || y.size() != n) throw ArgumentError("bracket: coordinate length mismatch");
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += w * st(i, j, k);
    }
  }
  return out;
}

AdjointOperator adjoint_operator(const CliffordElement& x, const Algebra& alg) {
  if (alg.dimension() > 256) throw ResourceError("adjoint_operator is capped at 256-dimensional algebras");
  return {x, alg.left_multiplication(x) - alg.right_multiplication(x)};
}

std::string to_string(OrbitalBlock b) {
  switch (b) {
    case OrbitalBlock::X: return "x";
    case OrbitalBlock::P: return "p";
    case OrbitalBlock::Lorentz: return "lorentz";
    case OrbitalBlock::C: return "C";
  }
  return "?";
}

std::vector<OrbitalBlock> default_partition(const std::vector<SoGenerator>& gens) {
  std::vector<OrbitalBlock> out;
  for (const auto& g : gens) {
    if (g.b > 6) throw ArgumentError("default_partition expects the 15 generators of a 6-generator algebra");
    if (g.a == 5 && g.b == 6) out.push_back(OrbitalBlock::C);
    else if (g.b == 6) out.push_back(OrbitalBlock::X);
    else if (g.b == 5) out.push_back(OrbitalBlock::P);
    else out.push_back(OrbitalBlock::Lorentz);
  }
  return out;
}

PropositionReport proposition_blocks(const KillingMatrix& k, const std::vector<OrbitalBlock>& partition) {
  const std::size_t n = k.K.rows();
  if (partition.size() != n)
    throw ArgumentError("partition covers " + std::to_string(partition.size()) + " generators, expected " +
                        std::to_string(n));
  PropositionReport rep;
  for (OrbitalBlock b : {OrbitalBlock::X, OrbitalBlock::P, OrbitalBlock::Lorentz, OrbitalBlock::C}) {
    BlockSummary s{b, {}, {}};
    for (std::size_t i = 0; i < n; ++i)
      if (partition[i] == b) s.members.push_back(i);
    DenseMatrix<Rational> sub(s.members.size(), s.members.size());
    for (std::size_t i = 0; i < s.members.size(); ++i)
      for (std::size_t j = 0; j < s.members.size(); ++j) sub(i, j) = k.K(s.members[i], s.members[j]);
    s.inertia = s.members.empty() ? Inertia{} : sylvester_inertia(sub);
    rep.signature_sum += s.inertia.signature();
    rep.blocks.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (partition[i] != partition[j] && k.K(i, j) != 0) rep.off_block_nonzero.emplace_back(i, j);
  rep.block_diagonal = rep.off_block_nonzero.empty();
  rep.total = k.inertia;
  return rep;
}

}  // namespace spintime
