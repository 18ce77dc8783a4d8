#include <doctest.h>

#include <cmath>

#include "spintime/error.hpp"
#include "spintime/metric.hpp"
#include "spintime/quantify.hpp"

using namespace spintime;

namespace {

double frobenius(const SparseMatrix<Rational>& m) { return std::sqrt(to_double(frobenius_inner(m, m))); }

}  // namespace

TEST_CASE("curvature commutators") {
  const auto sig = Signature::pq(3, 3);
  const Algebra alg(sig);
  for (int axis : {5, 6})
    for (int m = 1; m <= 4; ++m)
      for (int mp = m + 1; mp <= 4; ++mp) {
        const auto c = curvature_commutator(m, mp, sig, axis);
        const auto direct = alg.commutator(alg.bivector(m, axis), alg.bivector(mp, axis));
        CHECK(c.commutator == direct);
        CHECK(direct == Rational(2) * alg.bivector(m, mp));  // -2 g_axis with g_axis = -1
        CHECK(c.scale == 2);
        CHECK(c.matrix_agrees);
      }
  CHECK(curvature_commutator(2, 2, sig).commutator.is_zero());
  CHECK_THROWS_AS(curvature_commutator(1, 2, sig, 3), ContractError);
  CHECK_THROWS_AS(curvature_commutator(5, 2, sig, 5), ArgumentError);
}

TEST_CASE("Grassmann reconstruction of left and right multiplication") {
  for (int p = 0; p <= 5; ++p) {
    const auto sig = Signature::pq(p, 5 - p);
    const Algebra alg(sig);
    for (int a = 1; a <= 5; ++a) {
      CHECK(left_from_grassmann(a, alg) == alg.left_multiplication(alg.generator(a)));
      CHECK(right_from_grassmann(a, alg) == alg.right_multiplication(alg.generator(a)));
    }
    const auto pi = grade_involution(alg);
    for (Mask m = 0; m < 32; ++m) CHECK(pi.at(m, m) == (__builtin_popcount(m) % 2 ? -1 : 1));
  }
  const Algebra alg(Signature::pq(3, 3));
  for (const auto& g : so_generators(alg))
    CHECK(adjoint_from_grassmann({g.a, g.b}, alg) == adjoint_operator(g.element, alg).matrix);
}

TEST_CASE("Killing operator traces are proportional to the Killing form") {
  const Algebra alg(Signature::pq(3, 3));
  const auto gens = so_generators(alg);
  const auto k = killing_form(structure_constants(alg, gens));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto ko = killing_operator({gens[i].a, gens[i].b}, {gens[j].a, gens[j].b}, alg);
      CHECK(ko.trace == ko.op.trace());
      CHECK(ko.trace == Rational(4) * k.K(i, j));
    }
}

TEST_CASE("tensor sums against materialized operators") {
  for (auto carrier : {MetricCarrier::Adjoint64, MetricCarrier::Spinor8})
    for (int n = 1; n <= 2; ++n)
      for (auto [a, b] : {std::pair{IndexPair{1, 5}, IndexPair{2, 5}}, std::pair{IndexPair{1, 2}, IndexPair{3, 4}}}) {
        const auto qm = quantified_metric(a, b, n, carrier);
        CHECK(qm.carrier == carrier);
        const auto prod = qm.product.materialize(), sym = qm.sym.materialize(), skew = qm.skew.materialize();
        CHECK(prod == sym + skew);
        CHECK(qm.sym.frobenius_squared() == frobenius_inner(sym, sym));
        CHECK(qm.skew.frobenius_squared() == frobenius_inner(skew, skew));
        const auto rep = metric_symmetry_analysis(qm);
        CHECK(rep.sym_norm == doctest::Approx(frobenius(sym)));
        CHECK(rep.skew_norm == doctest::Approx(frobenius(skew)));
      }
}

TEST_CASE("metric symmetry scaling") {
  for (int n = 1; n <= 4; ++n) {
    const auto distinct = metric_symmetry_analysis(quantified_metric({1, 2}, {3, 4}, n));
    CHECK(distinct.skew_squared == 0);
    CHECK(distinct.shared_indices.empty());
    const auto shared = metric_symmetry_analysis(quantified_metric({1, 5}, {2, 5}, n));
    CHECK(shared.shared_indices == std::vector<int>{5});
    // adjoint carrier: the cross-cell terms of the product are symmetric and
    // carry (N^2 - N) of the N^2 unit-norm-squared contributions
    CHECK(shared.ratio == doctest::Approx(1.0 / std::sqrt(2.0 * n - 1.0)));
  }
  CHECK(quantified_metric({1, 5}, {2, 5}, 5).carrier == MetricCarrier::Spinor8);
}

TEST_CASE("curvature unit") {
  const double t = 5.39e-44;
  const double want = 1.0 / ((299792458.0 * t) * (299792458.0 * t));
  CHECK(curvature_unit(t) == doctest::Approx(want));
  CHECK(curvature_unit(2.0, true) == doctest::Approx(0.25));
  CHECK(std::round(std::log10(curvature_unit(t))) == 70);
  CHECK_THROWS_AS(curvature_unit(0), ArgumentError);
  CHECK_THROWS_AS(curvature_unit(-1), ArgumentError);
}
