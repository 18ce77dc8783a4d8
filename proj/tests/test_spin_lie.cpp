#include <doctest.h>

#include "spintime/error.hpp"
#include "spintime/linalg.hpp"
#include "spintime/rng.hpp"
#include "spintime/spin_lie.hpp"

using namespace spintime;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("+1/2") == Rational(1, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("so(3) structure constants against the Pauli oracle") {
  // J_23 = i s1/2, J_31 = i s2/2, J_12 = i s3/2 in the Pauli realization,
  // so [L_a, L_b] = -eps_abc L_c with L = (J_23, -J_13, J_12).
  const Algebra alg(Signature::pq(3, 0));
  const auto gens = so_generators(alg);
  REQUIRE(gens.size() == 3);
  CHECK(gens[0].label() == "J[1,2]");
  const auto st = structure_constants(alg, gens);
  CHECK(st(2, 1, 0) == 1);   // [J23, J13] = J12
  CHECK(st(1, 2, 0) == -1);
  CHECK(st(0, 2, 1) == 1);   // [J12, J23] = J13
  CHECK(st(1, 0, 2) == 1);   // [J13, J12] = J23
  CHECK(st(0, 0, 0) == 0);
  CHECK(st.is_antisymmetric());
  CHECK(st.satisfies_jacobi());
  const auto k = killing_form(st);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(k.K(i, j) == (i == j ? -2 : 0));
  CHECK(k.inertia == Inertia{0, 3, 0});
}

TEST_CASE("so(3,3) Killing form") {
  const Algebra alg(Signature::pq(3, 3));
  const auto gens = so_generators(alg);
  const auto st = structure_constants(alg, gens);
  CHECK(st.satisfies_jacobi());
  const auto k = killing_form(st);
  CHECK(k.inertia == Inertia{9, 6, 0});
  CHECK(k.float_inertia == Inertia{9, 6, 0});
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int sign = alg.signature().metric(gens[i].a) * alg.signature().metric(gens[i].b);
    // compact generators (equal metric signs) are negative
    CHECK(k.K(i, i) == Rational(8 * -sign));
  }
}

TEST_CASE("Killing form is ad-invariant on random triples") {
  const Algebra alg(Signature::pq(3, 3));
  const auto st = structure_constants(alg, so_generators(alg));
  const auto k = killing_form(st);
  Rng rng(2024);
  auto draw = [&] {
    std::vector<Rational> v(15);
    for (auto& c : v) c = Rational(static_cast<long>(rng.below(9)) - 4);
    return v;
  };
  for (int i = 0; i < 1000; ++i) {
    const auto x = draw(), y = draw(), z = draw();
    REQUIRE(killing_value(k, bracket(st, x, y), z) == -killing_value(k, y, bracket(st, x, z)));
  }
}

TEST_CASE("operator structure constants agree with the blade ones") {
  const auto sig = Signature::pq(2, 2);
  const Algebra alg(sig);
  const auto gens = so_generators(alg, false);
  const auto rep = matrix_rep(sig);
  std::vector<SparseMatrix<Rational>> ops;
  for (const auto& g : gens) ops.push_back(represent(g.element, rep));
  CHECK(structure_constants(ops) == structure_constants(alg, gens));
}

TEST_CASE("non-closing basis is rejected") {
  const Algebra alg(Signature::pq(3, 0));
  CHECK_THROWS_AS(structure_constants(alg, std::vector<CliffordElement>{alg.bivector(1, 2), alg.bivector(1, 3)}),
                  AlgebraError);
}

TEST_CASE("block decomposition of the six-generator algebra") {
  const Algebra alg(Signature::pq(3, 3));
  const auto gens = so_generators(alg);
  const auto rep = proposition_blocks(killing_form(structure_constants(alg, gens)), default_partition(gens));
  REQUIRE(rep.blocks.size() == 4);
  CHECK(rep.blocks[0].inertia == Inertia{3, 1, 0});
  CHECK(rep.blocks[1].inertia == Inertia{3, 1, 0});
  CHECK(rep.blocks[2].inertia == Inertia{3, 3, 0});
  CHECK(rep.blocks[3].inertia == Inertia{0, 1, 0});
  CHECK(rep.signature_sum == 3);
  CHECK(rep.total.signature() == 3);
  CHECK(rep.block_diagonal);
  CHECK(rep.off_block_nonzero.empty());
  CHECK_THROWS_AS(proposition_blocks(killing_form(structure_constants(alg, gens)), {OrbitalBlock::X}),
                  ArgumentError);
}

TEST_CASE("sylvester inertia agrees with eigenvalue signs") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(7);
    DenseMatrix<Rational> m(n, n);
    // low-rank pieces make zero eigenvalues common
    const std::size_t r = rng.below(n + 1);
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<Rational> v(n);
      for (auto& c : v) c = Rational(static_cast<long>(rng.below(5)) - 2);
      const Rational s = rng.below(2) ? 1 : -1;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) += s * v[i] * v[j];
    }
    CHECK(sylvester_inertia(m) == eigen_inertia(to_eigen(m), 1e-9));
  }
  DenseMatrix<Rational> hyp(2, 2);
  hyp(0, 1) = hyp(1, 0) = 1;
  CHECK(sylvester_inertia(hyp) == Inertia{1, 1, 0});
}

TEST_CASE("exact nullspace and solve") {
  DenseMatrix<Rational> m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  const auto ns = nullspace(m);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(m(0, 0) * v[0] + m(0, 1) * v[1] + m(0, 2) * v[2] == 0);
  DenseMatrix<Rational> a(2, 2);
  a(0, 0) = 2; a(0, 1) = 1; a(1, 0) = 1; a(1, 1) = 3;
  const auto x = solve(a, {Rational(3), Rational(5)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(4, 5));
  CHECK((*x)[1] == Rational(7, 5));
  DenseMatrix<Rational> sing(2, 2, Rational(1));
  CHECK(!solve(sing, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("adjoint operators") {
  const Algebra alg(Signature::pq(3, 3));
  for (const auto& g : so_generators(alg)) {
    const auto ad = adjoint_operator(g.element, alg).matrix;
    CHECK(ad == alg.left_multiplication(g.element) - alg.right_multiplication(g.element));
  }
  CHECK_THROWS_AS(adjoint_operator(Algebra(Signature::pq(5, 4)).generator(1), Algebra(Signature::pq(5, 4))),
                  ResourceError);
}
