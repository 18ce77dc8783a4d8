#include <doctest.h>

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "spintime/dynamics.hpp"
#include "spintime/error.hpp"
#include "spintime/linalg.hpp"
#include "spintime/quantify.hpp"
#include "spintime/rng.hpp"
#include "spintime/spin_lie.hpp"

using namespace spintime;

namespace {

Eigen::MatrixXd random_antisymmetric(Rng& rng, int n) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.normal();
  return m - m.transpose();
}

}  // namespace

TEST_CASE("Yang-Dirac element from a direct contraction") {
  const auto sig = Signature::pq(3, 3);
  const Algebra alg(sig);
  const Rational c(1, 2);
  CliffordElement sum;
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (int d = 1; d <= 6; ++d) {
        if (a == b || b == d || a == d) continue;
        const int g = sig.metric(a) * sig.metric(b) * sig.metric(d);
        const auto j1 = alg.bivector(a, b, c), j2 = alg.bivector(b, d, c), j3 = alg.bivector(d, a, c);
        sum += Rational(g) * alg.multiply(alg.multiply(j1, j2), j3);
      }
  CHECK(yang_dirac_element(sig) == sum);
  CHECK(sum.grades() == std::vector<int>{0});
  const auto rep = cell_representation(sig);
  CHECK(yang_dirac_operator(1, sig).op == represent(sum, rep));
}

TEST_CASE("Yang-Dirac operator commutes with quantified generators") {
  for (int n = 1; n <= 2; ++n) {
    const auto a = yang_dirac_operator(n);
    for (const auto& j : yang_orbitals(n).J) CHECK(commutator(a.op, j.materialize()).is_zero());
  }
}

TEST_CASE("exponentials of antisymmetric matrices are orthogonal") {
  Rng rng(77);
  for (int i = 0; i < 50; ++i) {
    Eigen::MatrixXd a = random_antisymmetric(rng, 8);
    a *= 10.0 * rng.uniform() / a.norm();
    const auto d = dynamics_from_exponent(a);
    CHECK(d.orthogonality_error < kTolExp);
    CHECK((d.matrix.transpose() * d.matrix - Eigen::MatrixXd::Identity(8, 8)).norm() < kTolExp);
  }
  Eigen::MatrixXd rot(2, 2);
  rot << 0, -0.3, 0.3, 0;
  const auto d = dynamics_from_exponent(rot);
  CHECK(d.matrix(0, 0) == doctest::Approx(std::cos(0.3)));
  CHECK(d.matrix(1, 0) == doctest::Approx(std::sin(0.3)));
  CHECK_THROWS_AS(dynamics_from_exponent(Eigen::MatrixXd::Identity(2, 2)), ContractError);
}

TEST_CASE("dynamics vector keeps the antisymmetric part") {
  Rng rng(8);
  std::array<Eigen::MatrixXd, 3> s, ih;
  for (int k = 0; k < 3; ++k) {
    s[k] = random_antisymmetric(rng, 8);
    ih[k] = random_antisymmetric(rng, 8);
  }
  const auto d = dynamics_vector(s, ih);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(8, 8);
  for (int k = 0; k < 3; ++k) sum += ih[k] * s[k];
  const Eigen::MatrixXd anti = (sum - sum.transpose()) / 2;
  CHECK((d.exponent - anti).norm() < 1e-12);
  CHECK(d.discarded_symmetric_norm == doctest::Approx(((sum + sum.transpose()) / 2).norm()));
  CHECK((d.matrix - anti.exp()).norm() < 1e-10);
  s[0](0, 1) += 1;
  CHECK_THROWS_AS(dynamics_vector(s, ih), ContractError);
}

TEST_CASE("green contraction") {
  Rng rng(9);
  const auto d = dynamics_from_exponent(random_antisymmetric(rng, 8) * 0.1);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(8, 8);
  const auto g = green_contraction(d, {{id}});
  CHECK(g.normalized);
  CHECK(g.value == doctest::Approx(1.0));
  CHECK(g.status == "ok");
  // ports compose with the first factor applied first
  const Eigen::MatrixXd a = random_antisymmetric(rng, 8), b = random_antisymmetric(rng, 8);
  const HistoryPort port{{a, b}};
  CHECK((port.product() - b * a).norm() < 1e-12);
  CHECK(green_contraction(d, port).unnormalized == doctest::Approx((d.matrix * b * a).trace()));
  // quarter turns in four planes give a traceless D
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(8, 8);
  for (int k = 0; k < 4; ++k) {
    q(2 * k + 1, 2 * k) = M_PI / 2;
    q(2 * k, 2 * k + 1) = -M_PI / 2;
  }
  const auto traceless = green_contraction(dynamics_from_exponent(q), {{id}});
  CHECK(!traceless.normalized);
  CHECK(std::isnan(traceless.value));
  CHECK(std::isfinite(traceless.unnormalized));
  CHECK_THROWS_AS(green_contraction(d, {{Eigen::MatrixXd::Identity(4, 4)}}), ArgumentError);
  CHECK_THROWS_AS(HistoryPort{}.product(), ArgumentError);
}

TEST_CASE("odd ports have zero trace against even dynamics") {
  const auto sig = Signature::pq(3, 3);
  const auto rep = matrix_rep(sig);
  const auto d = dynamics_from_exponent(0.7 * to_eigen(rep.bivector(1, 2)) + 0.2 * to_eigen(rep.bivector(4, 5)));
  for (int a = 1; a <= 6; ++a)
    CHECK(std::abs(green_contraction(d, {{to_eigen(rep.gamma(a))}}).unnormalized) < 1e-12);
}

TEST_CASE("polynomial parsing") {
  const auto p = parse_polynomial("1/2 * g(1) g(2)  # comment\n - 3 g(3) + 4");
  REQUIRE(p.terms.size() == 3);
  CHECK(p.terms[0].coefficient == Rational(1, 2));
  CHECK(p.terms[0].word == std::vector<int>{1, 2});
  CHECK(p.terms[1].coefficient == -3);
  CHECK(p.terms[2].word.empty());
  CHECK(p.to_string() == "1/2 * g(1) g(2) + -3 * g(3) + 4");
  CHECK(parse_polynomial(p.to_string()) == p);
  CHECK(parse_polynomial("0 * g(1) + g(2)").terms.size() == 1);
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("# only a comment"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("g(7)", 6), ParseError);
  CHECK_THROWS_AS(parse_polynomial("g(1) +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2 * h(1)"), ParseError);
  std::string longword;
  for (std::size_t i = 0; i <= kMaxWordLength; ++i) longword += "g(1) ";
  CHECK_THROWS_AS(parse_polynomial(longword), ArgumentError);
}

TEST_CASE("polynomial round trip on random input") {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    Polynomial p;
    const std::size_t terms = 1 + rng.below(4);
    for (std::size_t t = 0; t < terms; ++t) {
      Polynomial::Term term;
      term.coefficient = Rational(static_cast<long>(rng.below(11)) - 5, 1 + static_cast<long>(rng.below(4)));
      if (term.coefficient == 0) term.coefficient = 1;
      for (std::size_t k = rng.below(5); k > 0; --k) term.word.push_back(1 + static_cast<int>(rng.below(6)));
      p.terms.push_back(term);
    }
    CHECK(parse_polynomial(p.to_string()) == p);
  }
}

TEST_CASE("traces") {
  const auto sig = Signature::pq(3, 3);
  const auto rep = matrix_rep(sig);
  for (int a = 1; a <= 6; ++a) {
    CHECK(trace_word({a}, rep) == 0);
    for (int b = 1; b <= 6; ++b) CHECK(trace_word({a, b}, rep) == (a == b ? 8 * sig.metric(a) : 0));
  }
  CHECK(trace_word({}, rep) == 8);
  // g1 g2 g1 g2 = -g1 g1 g2 g2 = -1
  CHECK(trace_word({1, 2, 1, 2}, rep) == -8);
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    std::vector<int> u, v;
    for (std::size_t k = 1 + rng.below(12); k > 0; --k) u.push_back(1 + static_cast<int>(rng.below(6)));
    for (std::size_t k = 1 + rng.below(12); k > 0; --k) v.push_back(1 + static_cast<int>(rng.below(6)));
    std::vector<int> uv = u, vu = v;
    uv.insert(uv.end(), v.begin(), v.end());
    vu.insert(vu.end(), u.begin(), u.end());
    CHECK(trace_word(uv, rep) == trace_word(vu, rep));
    const Polynomial p{{{Rational(2, 3), u}, {Rational(-5), v}}};
    CHECK(trace_polynomial(p, rep) == Rational(2, 3) * trace_word(u, rep) - 5 * trace_word(v, rep));
  }
  CHECK_THROWS_AS(trace_word({7}, rep), ParseError);
}
