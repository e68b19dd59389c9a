#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "jacobi/unipoly.hpp"

using jacobi::Rational;
using jacobi::UniPoly;

namespace {

UniPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v(c.begin(), c.end());
  return UniPoly(std::move(v));
}

}  // namespace

TEST(UniPoly, TrimsAndReportsDegree) {
  EXPECT_EQ(P({1, 2, 0, 0}).degree(), 1);
  EXPECT_TRUE(P({0, 0}).is_zero());
  EXPECT_EQ(UniPoly().degree(), -1);
  EXPECT_EQ(UniPoly::linear_root(Rational(3)), P({-3, 1}));
}

TEST(UniPoly, DivisionIdentity) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    UniPoly n = gen::unipoly(rng, 7);
    UniPoly d = gen::unipoly(rng, 4);
    if (d.is_zero()) continue;
    auto [q, r] = jacobi::divmod(n, d);
    EXPECT_EQ(q * d + r, n);
    EXPECT_LT(r.degree(), d.degree());
  }
  EXPECT_THROW(jacobi::divmod(P({1}), UniPoly()), std::domain_error);
}

TEST(UniPoly, ExtendedGcdIsBezout) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    UniPoly common = gen::unipoly(rng, 2);
    if (common.is_zero()) continue;
    UniPoly a = gen::unipoly(rng, 4) * common;
    UniPoly b = gen::unipoly(rng, 4) * common;
    if (a.is_zero() || b.is_zero()) continue;
    auto bz = jacobi::extended_gcd(a, b);
    EXPECT_EQ(bz.s * a + bz.t * b, bz.gcd);
    EXPECT_TRUE(bz.gcd.is_monic());
    EXPECT_TRUE(jacobi::divmod(bz.gcd, common.monic()).remainder.is_zero() || common.degree() == 0);
    EXPECT_TRUE(jacobi::divmod(a, bz.gcd).remainder.is_zero());
    EXPECT_TRUE(jacobi::divmod(b, bz.gcd).remainder.is_zero());
  }
}

TEST(UniPoly, GcdHandExample) {
  // (x-1)(x-2) and (x-1)(x+3)
  EXPECT_EQ(jacobi::gcd(P({2, -3, 1}), P({-3, 2, 1})), P({-1, 1}));
  EXPECT_EQ(jacobi::gcd(P({1, 1}), P({2, 1})), P({1}));
}

TEST(UniPoly, SquarefreeDecompositionReassembles) {
  // (x-1) (x+2)^2 x^3
  const UniPoly f = P({-1, 1}) * P({2, 1}) * P({2, 1}) * P({0, 1}) * P({0, 1}) * P({0, 1});
  const auto parts = jacobi::squarefree_decomposition(f * Rational(5));
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], P({-1, 1}));
  EXPECT_EQ(parts[1], P({2, 1}));
  EXPECT_EQ(parts[2], P({0, 1}));

  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    UniPoly g = gen::unipoly(rng, 3), h = gen::unipoly(rng, 2);
    if (g.degree() < 1 || h.degree() < 1) continue;
    UniPoly p = g * h * h;
    auto sq = jacobi::squarefree_decomposition(p);
    UniPoly back = UniPoly::constant(p.leading());
    for (std::size_t k = 0; k < sq.size(); ++k) {
      for (std::size_t e = 0; e <= k; ++e) back = back * sq[k];
    }
    EXPECT_EQ(back, p);
  }
}

TEST(UniPoly, EvalDerivativeComposeSquare) {
  const UniPoly f = P({1, 2, 3});
  EXPECT_EQ(f.eval(Rational(2)), Rational(17));
  EXPECT_EQ(f.derivative(), P({2, 6}));
  EXPECT_EQ(f.compose_square(), P({1, 0, 2, 0, 3}));
  EXPECT_EQ(P({1, -7, 2}).max_abs_coefficient(), Rational(7));
}
