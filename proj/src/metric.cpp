#include "spintime/metric.hpp"

#include <algorithm>
#include <cmath>

#include "spintime/error.hpp"
#include "spintime/flavor.hpp"
#include "spintime/quantify.hpp"

namespace spintime {

namespace {

void check_generator(int a, const Signature& sig) {
  if (a < 1 || a > sig.n())
    throw ArgumentError("generator index " + std::to_string(a) + " out of range for " + sig.to_string());
}

void check_pair(IndexPair p, const Signature& sig) {
  check_generator(p.first, sig);
  check_generator(p.second, sig);
  if (p.first == p.second) throw ArgumentError("index pair needs two distinct indices");
}

}  // namespace

CurvatureCommutator curvature_commutator(int m, int m_prime, const Signature& sig, int axis) {
  check_generator(m, sig);
  check_generator(m_prime, sig);
  check_generator(axis, sig);
  if (sig.metric(axis) != -1)
    throw ContractError("gamma_" + std::to_string(axis) + " squares to +1 in " + sig.to_string());
  if (m == axis || m_prime == axis) throw ArgumentError("curvature indices must differ from the axis");
  const Algebra alg(sig);
  CurvatureCommutator out;
  out.m = m;
  out.m_prime = m_prime;
  out.axis = axis;
  out.commutator = alg.commutator(alg.word({m, axis}), alg.word({m_prime, axis}));
  if (m != m_prime) {
    const Blade target = blade_product(Blade::generator(m), Blade::generator(m_prime), sig);
    out.scale = target.sign * out.commutator.coefficient(target.mask);
  } else {
    out.scale = 0;
  }
  if (sig.n() % 2 == 0 && sig.n() <= 8) {
    const GammaRep rep = matrix_rep(sig);
    const auto lhs = commutator(rep.gamma(m) * rep.gamma(axis), rep.gamma(m_prime) * rep.gamma(axis));
    out.matrix_agrees = lhs == represent(out.commutator, rep);
  }
  return out;
}

KillingOperatorPair killing_operator(IndexPair a, IndexPair b, const Algebra& alg, bool half) {
  check_pair(a, alg.signature());
  check_pair(b, alg.signature());
  const Rational c = generator_coefficient(half);
  const auto da = adjoint_operator(alg.bivector(a.first, a.second, c), alg).matrix;
  const auto db = adjoint_operator(alg.bivector(b.first, b.second, c), alg).matrix;
  KillingOperatorPair out{a, b, da * db, 0};
  out.trace = out.op.trace();
  return out;
}

// The blade basis of the Clifford algebra doubles as the monomial basis of
// the Grassmann algebra on the same generators.
SparseMatrix<Rational> left_from_grassmann(int a, const Algebra& alg) {
  check_generator(a, alg.signature());
  const GrassmannAlgebra g(alg.generator_count());
  return g.mu(a) + Rational(alg.signature().metric(a)) * g.delta(a);
}

SparseMatrix<Rational> grade_involution(const Algebra& alg) {
  const GrassmannAlgebra g(alg.generator_count());
  auto pi = SparseMatrix<Rational>::identity(g.dimension());
  for (int b = 1; b <= g.generator_count(); ++b) pi = pi * (g.delta(b) * g.mu(b) - g.mu(b) * g.delta(b));
  return pi;
}

SparseMatrix<Rational> right_from_grassmann(int a, const Algebra& alg) {
  check_generator(a, alg.signature());
  const GrassmannAlgebra g(alg.generator_count());
  return (g.mu(a) - Rational(alg.signature().metric(a)) * g.delta(a)) * grade_involution(alg);
}

SparseMatrix<Rational> adjoint_from_grassmann(IndexPair ab, const Algebra& alg, bool half) {
  check_pair(ab, alg.signature());
  const auto la = left_from_grassmann(ab.first, alg), lb = left_from_grassmann(ab.second, alg);
  const auto ra = right_from_grassmann(ab.first, alg), rb = right_from_grassmann(ab.second, alg);
  // y -> y gamma_a gamma_b applies R_a first.
  return generator_coefficient(half) * (la * lb - rb * ra);
}

std::string to_string(MetricCarrier c) { return c == MetricCarrier::Adjoint64 ? "adjoint64" : "spinor8"; }

Rational TensorSum::frobenius_squared() const {
  const std::size_t k = cell_ops.size();
  DenseMatrix<Rational> gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) gram(i, j) = gram(j, i) = frobenius_inner(cell_ops[i], cell_ops[j]);
  Rational total = 0;
  for (const auto& s : terms)
    for (const auto& t : terms) {
      Rational prod = s.coefficient * t.coefficient;
      for (int slot = 0; slot < cells && prod != 0; ++slot)
        prod *= gram(s.factors[static_cast<std::size_t>(slot)], t.factors[static_cast<std::size_t>(slot)]);
      total += prod;
    }
  return total;
}

SparseMatrix<Rational> TensorSum::materialize() const {
  const std::size_t d = cell_ops.at(0).rows();
  const std::size_t dim = checked_power(d, cells);
  SparseMatrix<Rational> out(dim, dim);
  for (const auto& t : terms) {
    SparseMatrix<Rational> acc = SparseMatrix<Rational>::identity(1);
    for (std::size_t f : t.factors) acc = kron(acc, cell_ops[f]);
    out = out + t.coefficient * acc;
  }
  return out;
}

QuantifiedMetric quantified_metric(IndexPair a, IndexPair b, int cells, const Signature& sig, bool half) {
  MetricCarrier carrier = MetricCarrier::Adjoint64;
  try {
    checked_power(std::size_t{1} << sig.n(), cells);
  } catch (const ResourceError&) {
    carrier = MetricCarrier::Spinor8;
  }
  return quantified_metric(a, b, cells, carrier, sig, half);
}

QuantifiedMetric quantified_metric(IndexPair a, IndexPair b, int cells, MetricCarrier carrier, const Signature& sig,
                                   bool half) {
  check_pair(a, sig);
  check_pair(b, sig);
  const Rational c = generator_coefficient(half);
  SparseMatrix<Rational> da, db;
  if (carrier == MetricCarrier::Adjoint64) {
    const Algebra alg(sig);
    checked_power(alg.dimension(), cells);
    da = adjoint_operator(alg.bivector(a.first, a.second, c), alg).matrix;
    db = adjoint_operator(alg.bivector(b.first, b.second, c), alg).matrix;
  } else {
    const GammaRep rep = matrix_rep(sig);
    checked_power(rep.dim, cells);
    da = rep.bivector(a.first, a.second, c);
    db = rep.bivector(b.first, b.second, c);
  }
  enum : std::size_t { I, A, B, AB, BA };
  const std::vector<SparseMatrix<Rational>> ops = {SparseMatrix<Rational>::identity(da.rows()), da, db, da * db,
                                                   db * da};
  QuantifiedMetric qm;
  qm.a = a;
  qm.b = b;
  qm.cells = cells;
  qm.carrier = carrier;
  for (TensorSum* t : {&qm.product, &qm.sym, &qm.skew}) {
    t->cells = cells;
    t->cell_ops = ops;
  }
  const auto n = static_cast<std::size_t>(cells);
  auto term = [n](Rational coef, std::vector<std::pair<std::size_t, std::size_t>> placed) {
    TensorSum::Term t{std::move(coef), std::vector<std::size_t>(n, I)};
    for (const auto& [slot, op] : placed) t.factors[slot] = op;
    return t;
  };
  const Rational half_r(1, 2);
  for (std::size_t k = 0; k < n; ++k) {
    qm.product.terms.push_back(term(1, {{k, AB}}));
    qm.sym.terms.push_back(term(half_r, {{k, AB}}));
    qm.sym.terms.push_back(term(half_r, {{k, BA}}));
    qm.skew.terms.push_back(term(half_r, {{k, AB}}));
    qm.skew.terms.push_back(term(-half_r, {{k, BA}}));
    for (std::size_t l = 0; l < n; ++l) {
      if (l == k) continue;
      qm.product.terms.push_back(term(1, {{k, A}, {l, B}}));
      qm.sym.terms.push_back(term(half_r, {{k, A}, {l, B}}));
      qm.sym.terms.push_back(term(half_r, {{k, B}, {l, A}}));
    }
  }
  return qm;
}

SymmetryReport metric_symmetry_analysis(const QuantifiedMetric& qm) {
  SymmetryReport r;
  r.sym_squared = qm.sym.frobenius_squared();
  r.skew_squared = qm.skew.frobenius_squared();
  r.sym_norm = std::sqrt(to_double(r.sym_squared));
  r.skew_norm = std::sqrt(to_double(r.skew_squared));
  r.ratio = r.sym_norm > 0 ? r.skew_norm / r.sym_norm : std::nan("");
  for (int x : {qm.a.first, qm.a.second})
    if (x == qm.b.first || x == qm.b.second) r.shared_indices.push_back(x);
  std::sort(r.shared_indices.begin(), r.shared_indices.end());
  return r;
}

double curvature_unit(double t_seconds, bool natural_units) {
  if (!(t_seconds > 0) || !std::isfinite(t_seconds)) throw ArgumentError("curvature_unit needs T > 0");
  const double c = natural_units ? 1.0 : kSpeedOfLight;
  const double ct = c * t_seconds;
  return 1.0 / (ct * ct);
}

}  // namespace spintime
