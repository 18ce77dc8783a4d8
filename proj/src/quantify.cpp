#include "spintime/quantify.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "spintime/error.hpp"
#include "spintime/linalg.hpp"
#include "spintime/rng.hpp"

namespace spintime {

std::size_t max_dimension() {
  constexpr std::size_t kCap = std::size_t{1} << 24;
  if (const char* env = std::getenv("SPINTIME_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < kCap) return static_cast<std::size_t>(v);
  }
  return kCap;
}

std::size_t checked_power(std::size_t cell_dim, int cells) {
  if (cells < 1) throw ArgumentError("cell count must be at least 1");
  const std::size_t cap = max_dimension();
  std::size_t d = 1;
  for (int i = 0; i < cells; ++i) {
    if (d > cap / std::max<std::size_t>(cell_dim, 1)) d = cap + 1;
    else d *= cell_dim;
    if (d > cap)
      throw ResourceError(std::to_string(cell_dim) + "^" + std::to_string(cells) + " exceeds the dimension cap " +
                          std::to_string(cap));
  }
  return d;
}

namespace {

struct CellEntry {
  std::size_t row, col;
  double value;
};

std::vector<std::vector<CellEntry>> cell_rows(const SparseMatrix<Rational>& cell, const Rational& scale) {
  std::vector<std::vector<CellEntry>> rows(cell.rows());
  for (std::size_t k = 0; k < cell.nnz(); ++k)
    rows[cell.row_indices()[k]].push_back(
        {cell.row_indices()[k], cell.col_indices()[k], to_double(scale * cell.values()[k])});
  return rows;
}

template <class V>
void apply_sum(const std::vector<std::vector<CellEntry>>& rows, std::size_t d, int cells, std::span<const V> x,
               std::span<V> y) {
  const std::size_t dim = x.size();
  std::fill(y.begin(), y.end(), V{});
  std::size_t stride = dim / d;
  for (int k = 0; k < cells; ++k, stride /= d) {
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t r = (i / stride) % d;
      V acc{};
      for (const auto& e : rows[r]) acc += e.value * x[i + e.col * stride - r * stride];
      y[i] += acc;
    }
  }
}

}  // namespace

QuantifiedOperator::QuantifiedOperator(SparseMatrix<Rational> cell, int cells, Rational scale, std::string label)
    : cell_(std::move(cell)), cells_(cells), scale_(std::move(scale)), label_(std::move(label)) {
  if (!cell_.square()) throw ArgumentError("quantify: cell operator must be square");
  if (cell_.rows() == 0) throw ArgumentError("quantify: empty cell operator");
  dim_ = checked_power(cell_.rows(), cells);
}

SparseMatrix<Rational> QuantifiedOperator::materialize() const {
  const std::size_t d = cell_dim();
  std::vector<Triplet<Rational>> t;
  t.reserve(static_cast<std::size_t>(cells_) * (dim_ / d) * cell_.nnz());
  std::size_t stride = dim_ / d;
  for (int k = 0; k < cells_; ++k, stride /= d)
    for (std::size_t i = 0; i < dim_; ++i) {
      const std::size_t r = (i / stride) % d;
      for (std::size_t e = cell_.row_begin(r); e < cell_.row_end(r); ++e) {
        const std::size_t c = cell_.col_indices()[e];
        t.push_back({i, i + c * stride - r * stride, scale_ * cell_.values()[e]});
      }
    }
  return SparseMatrix<Rational>::from_triplets(dim_, dim_, std::move(t));
}

void QuantifiedOperator::apply(std::span<const Complex> x, std::span<Complex> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw ArgumentError("apply: vector length mismatch");
  apply_sum<Complex>(cell_rows(cell_, scale_), cell_dim(), cells_, x, y);
}

std::vector<Complex> QuantifiedOperator::apply(const std::vector<Complex>& x) const {
  std::vector<Complex> y(x.size());
  apply(std::span<const Complex>(x), std::span<Complex>(y));
  return y;
}

QuantifiedOperator quantify_operator(const SparseMatrix<Rational>& cell, int cells, std::string label) {
  return QuantifiedOperator(cell, cells, Rational(1), std::move(label));
}

QuantifiedOperator quantify_operator(const CliffordElement& x, const GammaRep& rep, int cells, std::string label) {
  if (label.empty()) label = x.to_string();
  return QuantifiedOperator(represent(x, rep), cells, Rational(1), std::move(label));
}

GammaRep cell_representation(const Signature& sig) { return matrix_rep(sig); }

YangVariables yang_orbitals(int cells, const Signature& sig, bool half) {
  if (sig.n() < 6) throw ArgumentError("yang_orbitals needs at least six generators");
  const GammaRep rep = cell_representation(sig);
  YangVariables y;
  y.cells = cells;
  y.half = half;
  y.coefficient = half ? Rational(1, 2) : Rational(1);
  y.signature = sig;
  const Rational inv_n(1, cells);
  auto cell = [&](int a, int b) { return rep.bivector(a, b, y.coefficient); };
  for (int m = 1; m <= 4; ++m) {
    y.x.emplace_back(cell(m, 6), cells, Rational(1), "x^" + std::to_string(m));
    y.p.emplace_back(cell(m, 5), cells, inv_n, "p_" + std::to_string(m));
  }
  y.ihat = QuantifiedOperator(cell(6, 5), cells, inv_n, "ihat");
  for (int a = 1; a <= sig.n(); ++a)
    for (int b = a + 1; b <= sig.n(); ++b) {
      y.pairs.emplace_back(a, b);
      y.J.emplace_back(cell(a, b), cells, Rational(1), "J[" + std::to_string(a) + "," + std::to_string(b) + "]");
    }
  return y;
}

// ------------------------------------------------------------------ spectra

namespace {

enum class Symmetry { Symmetric, Antisymmetric };

Symmetry classify(const SparseMatrix<Rational>& op) {
  if (!op.square()) throw ContractError("spectrum needs a square operator");
  if (op.is_antisymmetric()) return Symmetry::Antisymmetric;
  if (op.is_symmetric()) return Symmetry::Symmetric;
  throw ContractError("spectrum needs a symmetric or antisymmetric operator");
}

// Connected components of the nonzero pattern.
std::vector<std::vector<std::size_t>> components(const SparseMatrix<Rational>& op) {
  const std::size_t n = op.rows();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t k = 0; k < op.nnz(); ++k) {
    const std::size_t a = find(op.row_indices()[k]), b = find(op.col_indices()[k]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == SIZE_MAX) {
      slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[slot[r]].push_back(i);
  }
  return groups;
}

using Apply = std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>;

// Extremal Ritz values of a symmetric operator after a fully
// reorthogonalized Lanczos run.
std::pair<double, double> lanczos_extremes(const Apply& op, std::size_t dim, std::size_t steps) {
  steps = std::min(steps, dim);
  Rng rng(0x5eed);
  Eigen::VectorXd v(static_cast<Eigen::Index>(dim));
  for (auto& c : v) c = rng.uniform(-1, 1);
  v.normalize();
  std::vector<Eigen::VectorXd> basis{v};
  std::vector<double> alpha, beta;
  Eigen::VectorXd w(v.size());
  for (std::size_t j = 0; j < steps; ++j) {
    op(basis[j], w);
    alpha.push_back(basis[j].dot(w));
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) w -= q.dot(w) * q;
    const double b = w.norm();
    if (b < 1e-12 || j + 1 == steps) break;
    beta.push_back(b);
    basis.push_back(w / b);
  }
  const auto k = static_cast<Eigen::Index>(alpha.size());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    t(i, i) = alpha[static_cast<std::size_t>(i)];
    if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t, Eigen::EigenvaluesOnly);
  return {es.eigenvalues()(0), es.eigenvalues()(k - 1)};
}

Spectrum extremal_spectrum(const Apply& op, std::size_t dim, Symmetry sym) {
  Spectrum s;
  s.complete = false;
  s.imaginary = sym == Symmetry::Antisymmetric;
  constexpr std::size_t kSteps = 60;
  if (sym == Symmetry::Symmetric) {
    const auto [lo, hi] = lanczos_extremes(op, dim, kSteps);
    s.values = {lo, hi};
  } else {
    // -A^2 is positive semidefinite with top eigenvalue (max |imag|)^2.
    Eigen::VectorXd tmp;
    const Apply sq = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
      tmp.resize(x.size());
      op(x, tmp);
      op(tmp, y);
      y = -y;
    };
    const double top = std::sqrt(std::max(0.0, lanczos_extremes(sq, dim, kSteps).second));
    s.values = {-top, top};
  }
  return s;
}

Spectrum dense_spectrum(const SparseMatrix<Rational>& op, Symmetry sym) {
  Spectrum s;
  s.imaginary = sym == Symmetry::Antisymmetric;
  s.values.reserve(op.rows());
  for (const auto& group : components(op)) {
    const auto n = static_cast<Eigen::Index>(group.size());
    std::vector<std::size_t> local(op.rows(), SIZE_MAX);
    for (std::size_t i = 0; i < group.size(); ++i) local[group[i]] = i;
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t r : group)
      for (std::size_t k = op.row_begin(r); k < op.row_end(r); ++k)
        block(static_cast<Eigen::Index>(local[r]), static_cast<Eigen::Index>(local[op.col_indices()[k]])) =
            to_double(op.values()[k]);
    if (sym == Symmetry::Symmetric) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block, Eigen::EigenvaluesOnly);
      for (Eigen::Index i = 0; i < n; ++i) s.values.push_back(es.eigenvalues()(i));
    } else {
      // A v = i mu v  <=>  (i A) v = -mu v, and i A is Hermitian.
      const Eigen::MatrixXcd h = Complex(0, 1) * block.cast<Complex>();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
      for (Eigen::Index i = 0; i < n; ++i) s.values.push_back(-es.eigenvalues()(i));
    }
  }
  std::sort(s.values.begin(), s.values.end());
  return s;
}

}  // namespace

Spectrum spectrum(const SparseMatrix<Rational>& op) {
  const Symmetry sym = classify(op);
  if (op.rows() <= kDenseSpectrumLimit) return dense_spectrum(op, sym);
  const auto entries = op.map([](const Rational& r) { return to_double(r); });
  const Apply apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    y.resize(x.size());
    entries.apply(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())),
                  std::span<double>(y.data(), static_cast<std::size_t>(y.size())), [](double v) { return v; });
  };
  return extremal_spectrum(apply, op.rows(), sym);
}

Spectrum spectrum(const QuantifiedOperator& op) {
  if (op.dim() <= kDenseSpectrumLimit) return spectrum(op.materialize());
  // The coproduct sum inherits the cell's symmetry type.
  const Symmetry sym = classify(op.cell());
  const auto rows = cell_rows(op.cell(), op.scale());
  const Apply apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    y.resize(x.size());
    apply_sum<double>(rows, op.cell_dim(), op.cells(),
                      std::span<const double>(x.data(), static_cast<std::size_t>(x.size())),
                      std::span<double>(y.data(), static_cast<std::size_t>(y.size())));
  };
  return extremal_spectrum(apply, op.dim(), sym);
}

// ---------------------------------------------------------- polarized state

double norm(const std::vector<Complex>& v) {
  double s = 0;
  for (const auto& c : v) s += std::norm(c);
  return std::sqrt(s);
}

Complex inner(const std::vector<Complex>& u, const std::vector<Complex>& v) {
  if (u.size() != v.size()) throw ArgumentError("inner: length mismatch");
  Complex s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

PolarizedState polarized_state(int cells, const Signature& sig, bool half) {
  if (sig.n() < 6) throw ArgumentError("polarized_state needs at least six generators");
  const GammaRep rep = cell_representation(sig);
  const SparseMatrix<Rational> j65 = rep.bivector(6, 5, half ? Rational(1, 2) : Rational(1));
  if (!j65.is_antisymmetric())
    throw ConstructionError("J_65 is not antisymmetric in " + sig.to_string() + "; it has no imaginary extremum");
  const std::size_t dim = checked_power(rep.dim, cells);

  // J w = i s w  <=>  (-i J) w = s w with -i J Hermitian.
  const Eigen::MatrixXcd h = Complex(0, -1) * to_eigen(j65).cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const auto top = static_cast<Eigen::Index>(rep.dim - 1);
  const double s = es.eigenvalues()(top);
  if (s <= 1e-12) throw ConstructionError("J_65 has a degenerate zero extremum");
  Eigen::VectorXcd w = es.eigenvectors().col(top);
  // Fix the phase so the largest component is real and positive.
  Eigen::Index arg = 0;
  w.cwiseAbs().maxCoeff(&arg);
  w *= std::abs(w(arg)) / w(arg);
  w.normalize();

  PolarizedState st;
  st.cells = cells;
  st.cell_extremum = s;
  st.j65 = cells * s;
  st.cell_vector.assign(w.data(), w.data() + w.size());
  st.vector = {Complex(1)};
  st.vector.reserve(dim);
  for (int k = 0; k < cells; ++k) {
    std::vector<Complex> next;
    next.reserve(st.vector.size() * rep.dim);
    for (const auto& a : st.vector)
      for (const auto& b : st.cell_vector) next.push_back(a * b);
    st.vector = std::move(next);
  }
  return st;
}

// ------------------------------------------------------------- contraction

ContractionResult contraction_experiment(const std::vector<int>& cell_counts, int m, const Signature& sig,
                                         bool half) {
  if (cell_counts.empty()) throw ArgumentError("contraction_experiment: empty cell-count list");
  if (m < 1 || m > 4) throw ArgumentError("contraction_experiment: orbital index must be 1..4");
  ContractionResult out;
  out.m = m;
  out.half = half;
  const double kappa = half ? 1.0 : 2.0;  // [x^m, p_m] = -kappa g_mm ihat
  const double g = sig.metric(m);
  for (int n : cell_counts) {
    const YangVariables y = yang_orbitals(n, sig, half);
    const PolarizedState st = polarized_state(n, sig, half);
    const auto& psi = st.vector;
    const auto& x = y.x[static_cast<std::size_t>(m - 1)];
    const auto& p = y.p[static_cast<std::size_t>(m - 1)];

    ContractionRow row;
    row.cells = n;
    const auto ipsi = y.ihat.apply(psi);
    const Complex c = inner(psi, ipsi);
    row.ihat_expectation = c.imag();
    row.ihat_square = inner(psi, y.ihat.apply(ipsi)).real();

    std::vector<Complex> r(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) r[i] = ipsi[i] - c * psi[i];
    row.vacuum_residual = norm(r);

    const auto xp = x.apply(p.apply(psi));
    const auto px = p.apply(x.apply(psi));
    for (std::size_t i = 0; i < psi.size(); ++i) r[i] = xp[i] - px[i] + kappa * g * c * psi[i];
    row.bracket_residual = norm(r);

    for (const QuantifiedOperator* op : {&x, &p}) {
      auto phi = op->apply(psi);
      const double len = norm(phi);
      if (len == 0) continue;
      for (auto& v : phi) v /= len;
      const auto iphi = y.ihat.apply(phi);
      for (std::size_t i = 0; i < phi.size(); ++i) r[i] = iphi[i] - c * phi[i];
      row.centralization = std::max(row.centralization, norm(r));
    }
    out.rows.push_back(row);
  }

  // Least squares line through (log N, log residual).
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : out.rows)
    if (row.centralization > 0) pts.emplace_back(std::log(row.cells), std::log(row.centralization));
  if (pts.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [a, b] : pts) {
      sx += a;
      sy += b;
      sxx += a * a;
      sxy += a * b;
    }
    const double k = static_cast<double>(pts.size());
    const double den = k * sxx - sx * sx;
    if (den != 0) {
      out.slope = (k * sxy - sx * sy) / den;
      out.intercept = (sy - out.slope * sx) / k;
    }
  } else {
    out.slope = out.intercept = std::nan("");
  }
  return out;
}

UmklappReport umklapp_check(int n1, int n2, int m, const Signature& sig, bool half, double tol) {
  if (m < 1 || m > 4) throw ArgumentError("umklapp_check: orbital index must be 1..4");
  if (n1 < 1 || n2 < 1) throw ArgumentError("umklapp_check: cell counts must be positive");
  const GammaRep rep = cell_representation(sig);
  const SparseMatrix<Rational> cell = rep.bivector(m, 5, half ? Rational(1, 2) : Rational(1));
  checked_power(rep.dim, n1 + n2);
  auto spectrum_at = [&](int n) { return spectrum(QuantifiedOperator(cell, n)); };
  UmklappReport rep_out;
  rep_out.n1 = n1;
  rep_out.n2 = n2;
  rep_out.m = m;
  const double s = spectrum(cell).values.back();
  const Spectrum a = spectrum_at(n1), b = spectrum_at(n2), ab = spectrum_at(n1 + n2);
  rep_out.max1 = a.values.back();
  rep_out.max2 = b.values.back();
  rep_out.max12 = ab.values.back();
  rep_out.bound = (n1 + n2) * s;
  rep_out.additive = std::abs(rep_out.max12 - (rep_out.max1 + rep_out.max2)) <= tol;
  rep_out.bounded = ab.values.front() >= -rep_out.bound - tol && ab.values.back() <= rep_out.bound + tol;
  if (ab.complete) rep_out.composite_spectrum = ab.values;
  return rep_out;
}

}  // namespace spintime
