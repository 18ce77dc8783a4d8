#include <doctest.h>

#include <algorithm>
#include <array>

#include "spintime/clifford.hpp"
#include "spintime/error.hpp"
#include "spintime/rng.hpp"

using namespace spintime;

namespace {

// Reduce a generator word to canonical form by adjacent swaps, contracting
// equal neighbours with the metric. Independent of the popcount formula.
Blade reduce_word(std::vector<int> w, const Signature& sig) {
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        sign = -sign;
        changed = true;
      } else if (w[i] == w[i + 1]) {
        sign *= sig.metric(w[i]);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  Mask m = 0;
  for (int a : w) m |= Mask{1} << (a - 1);
  return {m, sign};
}

std::vector<int> mask_word(Mask m) {
  std::vector<int> w;
  for (int a = 1; a <= 16; ++a)
    if (m & (Mask{1} << (a - 1))) w.push_back(a);
  return w;
}

}  // namespace

TEST_CASE("signature frames") {
  const auto s = Signature::pq(3, 3);
  CHECK(s.n() == 6);
  CHECK(s.metric(1) == 1);
  CHECK(s.metric(4) == -1);
  CHECK(s.metric(6) == -1);
  const auto d = Signature::from_diag({-1, 1, -1, 1});
  CHECK(d.p() == 2);
  CHECK(d.q() == 2);
  CHECK(d.metric(1) == -1);
  CHECK_THROWS_AS(Signature::from_diag({1, 0}), ArgumentError);
  CHECK_THROWS_AS(s.metric(7), ArgumentError);
}

TEST_CASE("reorder sign matches bubble sort") {
  const auto sig = Signature::pq(4, 4);
  for (Mask a = 0; a < 256; ++a)
    for (Mask b = 0; b < 256; ++b) {
      if (a & b) continue;
      auto w = mask_word(a);
      const auto wb = mask_word(b);
      w.insert(w.end(), wb.begin(), wb.end());
      REQUIRE(reorder_sign(a, b) == reduce_word(w, sig).sign);
    }
}

TEST_CASE("blade product matches word reduction") {
  for (const auto& sig : {Signature::pq(3, 3), Signature::pq(2, 4), Signature::from_diag({-1, 1, 1, -1, -1})}) {
    const Mask dim = Mask{1} << sig.n();
    for (Mask a = 0; a < dim; ++a)
      for (Mask b = 0; b < dim; ++b) {
        auto w = mask_word(a);
        const auto wb = mask_word(b);
        w.insert(w.end(), wb.begin(), wb.end());
        REQUIRE(blade_product({a, 1}, {b, 1}, sig) == reduce_word(w, sig));
      }
  }
}

TEST_CASE("generators square to the metric and anticommute") {
  const Algebra alg(Signature::pq(3, 3));
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      const auto ac = alg.anticommutator(alg.generator(a), alg.generator(b));
      CHECK(ac == (a == b ? CliffordElement::scalar(2 * alg.signature().metric(a)) : CliffordElement()));
    }
}

TEST_CASE("associativity exhaustive up to six generators") {
  for (int p = 0; p <= 6; ++p) {
    const auto sig = Signature::pq(p, 6 - p);
    const Mask dim = 64;
    for (Mask a = 0; a < dim; ++a)
      for (Mask b = 0; b < dim; ++b)
        for (Mask c = 0; c < dim; c += 3) {
          const auto l = blade_product(blade_product({a, 1}, {b, 1}, sig), {c, 1}, sig);
          const auto r = blade_product({a, 1}, blade_product({b, 1}, {c, 1}, sig), sig);
          REQUIRE(l == r);
        }
  }
}

TEST_CASE("associativity randomized on sixteen generators") {
  const auto sig = Signature::pq(8, 8);
  Rng rng(7);
  for (int i = 0; i < 20000; ++i) {
    const Mask a = static_cast<Mask>(rng.below(1u << 16)), b = static_cast<Mask>(rng.below(1u << 16)),
               c = static_cast<Mask>(rng.below(1u << 16));
    REQUIRE(blade_product(blade_product({a, 1}, {b, 1}, sig), {c, 1}, sig) ==
            blade_product({a, 1}, blade_product({b, 1}, {c, 1}, sig), sig));
  }
}

TEST_CASE("element algebra") {
  const Algebra alg(Signature::pq(3, 3));
  const auto e12 = alg.bivector(1, 2);
  CHECK(alg.multiply(e12, e12) == CliffordElement::scalar(-1));
  const auto e45 = alg.bivector(4, 5);
  CHECK(alg.multiply(e45, e45) == CliffordElement::scalar(-1));
  const auto e14 = alg.bivector(1, 4);
  CHECK(alg.multiply(e14, e14) == CliffordElement::scalar(1));
  CHECK(alg.word({2, 1}) == -e12);
  CHECK(alg.bivector(1, 2, Rational(1, 2)).to_string() == "1/2*e[1,2]");
  CHECK(CliffordElement().to_string() == "0");
  const auto x = alg.unit() + e12 + alg.word({1, 2, 3});
  CHECK(x.grades() == std::vector<int>{0, 2, 3});
  CHECK(grade_project(x, 2) == e12);
  CHECK((x - x).is_zero());
  CHECK_THROWS_AS(alg.generator(0), ArgumentError);
  CHECK_THROWS_AS(alg.bivector(2, 2), ArgumentError);
}

TEST_CASE("left and right multiplication matrices") {
  const Algebra alg(Signature::pq(2, 2));
  const auto x = alg.bivector(1, 3) + alg.generator(2);
  const auto l = alg.left_multiplication(x);
  const auto r = alg.right_multiplication(x);
  for (Mask b = 0; b < 16; ++b) {
    const auto y = CliffordElement::blade(b);
    const auto xy = alg.multiply(x, y), yx = alg.multiply(y, x);
    for (Mask a = 0; a < 16; ++a) {
      CHECK(l.at(a, b) == xy.coefficient(a));
      CHECK(r.at(a, b) == yx.coefficient(a));
    }
  }
}

TEST_CASE("size caps") {
  CHECK_NOTHROW(Algebra(Signature::pq(8, 8)));
  CHECK_THROWS_AS(Algebra(Signature::pq(9, 8)), ResourceError);
  CHECK_THROWS_AS(Algebra(Signature::pq(5, 4)).product_table(), ResourceError);
  CHECK(Algebra(Signature::pq(2, 1)).product_table().sign(3, 3) == -1);
}

TEST_CASE("two-dimensional representations found by brute force") {
  // Enumerate all 2x2 matrices over {-1, 0, 1} and look for pairs with
  // G1^2 = 1, G2^2 = -1, G1 G2 = -G2 G1. Existence pins the minimal
  // dimension of Cliff(1,1) at 2.
  using M = std::array<int, 4>;
  auto mul = [](const M& a, const M& b) {
    return M{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
             a[2] * b[1] + a[3] * b[3]};
  };
  std::vector<M> all;
  for (int i = 0; i < 81; ++i) {
    int k = i;
    M m;
    for (auto& v : m) {
      v = k % 3 - 1;
      k /= 3;
    }
    all.push_back(m);
  }
  int pairs = 0;
  for (const auto& a : all)
    for (const auto& b : all) {
      const M aa = mul(a, a), bb = mul(b, b), ab = mul(a, b), ba = mul(b, a);
      if (aa == M{1, 0, 0, 1} && bb == M{-1, 0, 0, -1} && ab == M{-ba[0], -ba[1], -ba[2], -ba[3]}) ++pairs;
    }
  CHECK(pairs > 0);
  const auto rep = matrix_rep(Signature::pq(1, 1));
  CHECK(rep.dim == 2);
  CHECK(minimal_real_dimension(Signature::pq(1, 1)) == 2);
}

TEST_CASE("matrix representations for every even signature up to eight") {
  for (int n = 2; n <= 8; n += 2)
    for (int p = 0; p <= n; ++p) {
      const auto sig = Signature::pq(p, n - p);
      const auto rep = matrix_rep(sig);
      CAPTURE(sig.to_string());
      CHECK(rep.dim == minimal_real_dimension(sig));
      const auto id = rep.identity();
      for (int a = 1; a <= n; ++a) {
        CHECK(rep.gamma(a).transpose() == Rational(sig.metric(a)) * rep.gamma(a));
        for (int b = 1; b <= n; ++b) {
          const auto ac = anticommutator(rep.gamma(a), rep.gamma(b));
          CHECK(ac == (a == b ? Rational(2 * sig.metric(a)) * id : SparseMatrix<Rational>(rep.dim, rep.dim)));
        }
      }
    }
  CHECK(matrix_rep(Signature::pq(3, 3)).dim == 8);
  CHECK(matrix_rep(Signature::pq(4, 4)).dim == 16);
  CHECK_THROWS_AS(matrix_rep(Signature::pq(2, 1)), UnsupportedError);
  CHECK_THROWS_AS(matrix_rep(Signature::pq(5, 5)), UnsupportedError);
}

TEST_CASE("representation is an algebra homomorphism") {
  const auto sig = Signature::pq(3, 3);
  const Algebra alg(sig);
  const auto rep = matrix_rep(sig);
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Mask a = static_cast<Mask>(rng.below(64)), b = static_cast<Mask>(rng.below(64));
    const auto x = CliffordElement::blade(a), y = CliffordElement::blade(b);
    CHECK(represent(alg.multiply(x, y), rep) == represent(x, rep) * represent(y, rep));
  }
}

TEST_CASE("rank dimensions") {
  // dim S(r) = 2^dim S(r-1), evaluated here with plain integer shifts.
  std::vector<unsigned long> dims = {1};
  for (int r = 1; r <= 4; ++r) dims.push_back(1ul << dims.back());
  for (int r = 0; r <= 4; ++r) {
    const auto d = rank_dimensions(r);
    CHECK(d.dim_text == std::to_string(dims[static_cast<std::size_t>(r)]));
    CHECK(d.dim.has_value());
    const unsigned long delta = r == 0 ? 1 : dims[static_cast<std::size_t>(r)] - dims[static_cast<std::size_t>(r - 1)];
    CHECK(d.delta_text == std::to_string(delta));
  }
  const auto r5 = rank_dimensions(5);
  CHECK(!r5.dim.has_value());
  CHECK(r5.dim_text == "2^65536");
  CHECK(r5.delta_text == "2^65536 - 65536");
  CHECK(rank_dimensions(6).dim_text == "2^(2^65536)");
  CHECK_THROWS_AS(rank_dimensions(-1), ArgumentError);
}
