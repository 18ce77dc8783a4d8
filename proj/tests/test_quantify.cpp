#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cstdlib>

#include "spintime/error.hpp"
#include "spintime/linalg.hpp"
#include "spintime/quantify.hpp"
#include "spintime/rng.hpp"
#include "spintime/spin_lie.hpp"

using namespace spintime;

namespace {

// Direct Kronecker-sum construction, slot 1 most significant.
SparseMatrix<Rational> kron_sum(const SparseMatrix<Rational>& cell, int n) {
  const auto id = SparseMatrix<Rational>::identity(cell.rows());
  SparseMatrix<Rational> total;
  for (int k = 0; k < n; ++k) {
    SparseMatrix<Rational> term = SparseMatrix<Rational>::identity(1);
    for (int s = 0; s < n; ++s) term = kron(term, s == k ? cell : id);
    total = k == 0 ? term : total + term;
  }
  return total;
}

// Every sum of one cell eigenvalue per slot.
std::vector<double> enumerate_sums(const std::vector<double>& cell, int n) {
  std::vector<double> out = {0.0};
  for (int k = 0; k < n; ++k) {
    std::vector<double> next;
    for (double a : out)
      for (double b : cell) next.push_back(a + b);
    out = next;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> cell_imag_eigs(const SparseMatrix<Rational>& a) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(a), false);
  std::vector<double> v;
  for (int i = 0; i < es.eigenvalues().size(); ++i) v.push_back(es.eigenvalues()(i).imag());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("materialize equals the Kronecker sum") {
  const auto rep = cell_representation();
  const auto cell = rep.bivector(1, 2, Rational(1, 2));
  for (int n = 1; n <= 3; ++n) CHECK(quantify_operator(cell, n).materialize() == kron_sum(cell, n));
  const auto boost = rep.bivector(1, 5);
  CHECK(quantify_operator(boost, 2).materialize() == kron_sum(boost, 2));
}

TEST_CASE("matrix-free apply agrees with the materialized operator") {
  const auto rep = cell_representation();
  const auto op = quantify_operator(rep.bivector(2, 6, Rational(1, 2)), 3);
  const auto m = op.materialize();
  Rng rng(3);
  std::vector<Complex> x(op.dim());
  for (auto& c : x) c = {rng.normal(), rng.normal()};
  const auto y = op.apply(x);
  std::vector<Complex> z(op.dim());
  m.apply<Complex>(x, z, [](const Rational& r) { return Complex(to_double(r)); });
  double err = 0;
  for (std::size_t i = 0; i < y.size(); ++i) err = std::max(err, std::abs(y[i] - z[i]));
  CHECK(err < 1e-12);
}

TEST_CASE("quantified spectra are Kronecker sums of cell spectra") {
  const auto rep = cell_representation();
  for (auto [a, b] : {std::pair{1, 2}, std::pair{4, 6}, std::pair{5, 6}}) {
    const auto cell = rep.bivector(a, b, Rational(1, 2));
    const auto base = cell_imag_eigs(cell);
    for (int n = 1; n <= 3; ++n) {
      const auto sp = spectrum(quantify_operator(cell, n));
      CHECK(sp.imaginary);
      CHECK(sp.complete);
      const auto want = enumerate_sums(base, n);
      REQUIRE(sp.values.size() == want.size());
      for (std::size_t i = 0; i < want.size(); ++i) CHECK(sp.values[i] == doctest::Approx(want[i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("boost spectra are real") {
  const auto rep = cell_representation();
  const auto sp = spectrum(quantify_operator(rep.bivector(1, 5), 2));
  CHECK(!sp.imaginary);
  CHECK(sp.values.front() == doctest::Approx(-2));
  CHECK(sp.values.back() == doctest::Approx(2));
}

TEST_CASE("spectrum rejects operators with no symmetry") {
  const auto rep = cell_representation();
  const auto mixed = rep.bivector(1, 2) + rep.bivector(1, 5);
  CHECK_THROWS_AS(spectrum(mixed), ContractError);
}

TEST_CASE("large spectra fall back to extremal Lanczos values") {
  const auto rep = cell_representation();
  const auto sp = spectrum(quantify_operator(rep.bivector(1, 2), 5));
  CHECK(!sp.complete);
  CHECK(sp.values.front() == doctest::Approx(-5).epsilon(1e-8));
  CHECK(sp.values.back() == doctest::Approx(5).epsilon(1e-8));
}

TEST_CASE("dimension cap") {
  CHECK(checked_power(8, 8) == (std::size_t{1} << 24));
  CHECK_THROWS_AS(checked_power(8, 9), ResourceError);
  setenv("SPINTIME_MAX_DIM", "4096", 1);
  CHECK(max_dimension() == 4096);
  CHECK_THROWS_AS(checked_power(8, 5), ResourceError);
  setenv("SPINTIME_MAX_DIM", "999999999999", 1);  // cannot raise the cap
  CHECK(max_dimension() == (std::size_t{1} << 24));
  unsetenv("SPINTIME_MAX_DIM");
}

TEST_CASE("quantification is a homomorphism") {
  const auto sig = Signature::pq(3, 3);
  const Algebra alg(sig);
  const auto rep = cell_representation(sig);
  const auto gens = so_generators(alg);
  const auto st = structure_constants(alg, gens);
  std::vector<SparseMatrix<Rational>> q;
  for (const auto& g : gens) q.push_back(quantify_operator(g.element, rep, 2).materialize());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) {
      SparseMatrix<Rational> rhs(q[0].rows(), q[0].cols());
      for (std::size_t k = 0; k < q.size(); ++k) rhs = rhs + st(i, j, k) * q[k];
      REQUIRE(commutator(q[i], q[j]) == rhs);
    }
}

TEST_CASE("orbital variables") {
  for (bool half : {true, false}) {
    const Rational c = generator_coefficient(half);
    for (int n = 1; n <= 3; ++n) {
      const auto y = yang_orbitals(n, Signature::pq(3, 3), half);
      CHECK(y.J.size() == 15);
      const auto ihat = y.ihat.materialize();
      for (int m = 1; m <= 4; ++m) {
        const auto x = y.x[static_cast<std::size_t>(m - 1)].materialize();
        const auto p = y.p[static_cast<std::size_t>(m - 1)].materialize();
        const int g = Signature::pq(3, 3).metric(m);
        CHECK(commutator(x, p) == Rational(-2 * g) * c * ihat);
        // ihat commutes with neither x nor p
        CHECK(!commutator(ihat, x).is_zero());
      }
      CHECK(commutator(y.x[0].materialize(), y.p[1].materialize()).is_zero());
    }
  }
}

TEST_CASE("polarized state") {
  for (int n = 1; n <= 4; ++n) {
    const auto ps = polarized_state(n);
    CHECK(ps.cell_extremum == doctest::Approx(0.5));
    CHECK(ps.j65 == doctest::Approx(0.5 * n));
    CHECK(norm(ps.vector) == doctest::Approx(1.0));
    const auto y = yang_orbitals(n);
    const Complex e = inner(ps.vector, y.ihat.apply(ps.vector));
    CHECK(e.real() == doctest::Approx(0).epsilon(1e-12));
    CHECK(e.imag() == doctest::Approx(0.5));
  }
}

TEST_CASE("centralization residual on excitations") {
  // On a normalized single-cell excitation the J_65 eigenvalue drops from s
  // to -s on one cell, so |(ihat - <ihat>) phi| = 2s/N with s = c.
  for (bool half : {true, false}) {
    const double s = half ? 0.5 : 1.0;
    const auto res = contraction_experiment({1, 2, 3, 4}, 1, Signature::pq(3, 3), half);
    REQUIRE(res.rows.size() == 4);
    for (const auto& row : res.rows) {
      CHECK(row.centralization == doctest::Approx(2 * s / row.cells).epsilon(1e-9));
      CHECK(row.vacuum_residual < 1e-12);
      CHECK(row.bracket_residual < 1e-12);
      CHECK(row.ihat_expectation == doctest::Approx(s));
      CHECK(row.ihat_square == doctest::Approx(-s * s));
    }
    CHECK(res.slope == doctest::Approx(-1).epsilon(1e-9));
  }
}

TEST_CASE("extremal eigenvalues add under composition") {
  for (int m = 1; m <= 4; ++m) {
    const auto u = umklapp_check(1, 2, m);
    CHECK(u.additive);
    CHECK(u.bounded);
    CHECK(u.max12 == doctest::Approx(u.max1 + u.max2));
  }
}
