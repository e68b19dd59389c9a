#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "jacobi/mechanisms.hpp"

using jacobi::BiPoly;
using jacobi::Form;
using jacobi::JacobiPencil;
using jacobi::MechanismKind;
using jacobi::Rational;
using jacobi::UniPoly;

namespace {

BiPoly L(long c) { return BiPoly::lambda_plus(Form::W, Rational(c)); }
BiPoly W(long c) { return BiPoly::variable(Form::W, Rational(c)); }

bool contains(const std::vector<BiPoly>& v, const BiPoly& f) {
  for (const auto& g : v) {
    if (g == f) return true;
  }
  return false;
}

}  // namespace

TEST(Mechanisms, CutSplitsIntoBlockCurves) {
  const JacobiPencil p({0, 1, 2}, {1, 0});
  EXPECT_EQ(jacobi::detect_cuts(p), std::vector<std::size_t>{2});
  const auto rep = jacobi::apply_all(p);
  ASSERT_FALSE(rep.certificates.empty());
  const auto& c = rep.certificates.front();
  EXPECT_EQ(c.kind, MechanismKind::Cut);
  EXPECT_EQ(std::get<jacobi::CutData>(c.data).index, 2u);
  EXPECT_TRUE(c.verified);
  EXPECT_EQ(c.factors[1], L(2));
  EXPECT_TRUE(rep.verified);
}

TEST(Mechanisms, ConstantBranchOnDegreeThreeStratum) {
  // P = (l+1)(l^2 + 2l) - 2t(l+1) = (l+1)(l^2 + 2l - 2t)
  const JacobiPencil p({0, 1, 2}, {1, 1});
  EXPECT_EQ(jacobi::detect_constant_branches(p, {1, 3}), std::vector<std::size_t>{2});
  const auto rep = jacobi::apply_all(p);
  ASSERT_EQ(rep.certificates.size(), 1u);
  EXPECT_EQ(rep.certificates[0].kind, MechanismKind::ConstantBranch);
  ASSERT_EQ(rep.residual_factors.size(), 2u);
  EXPECT_TRUE(contains(rep.residual_factors, L(1)));
  EXPECT_TRUE(contains(rep.residual_factors, L(0) * L(2) - W(2) * W(1)));
}

TEST(Mechanisms, EvenPalindromeCornerFactors) {
  // a = (0,1,1,0), b = (1,2,1): det [[l, w], [w, l + 1 +- 2w]]
  const JacobiPencil p({0, 1, 1, 0}, {1, 2, 1});
  ASSERT_TRUE(jacobi::is_palindromic(p, {1, 4}));
  const auto cert = jacobi::detect_palindrome(p, {1, 4});
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(cert->verified);
  const BiPoly plus = L(0) * (L(1) + W(2)) - W(1) * W(1);
  const BiPoly minus = L(0) * (L(1) - W(2)) - W(1) * W(1);
  EXPECT_EQ(cert->factors[0], plus);
  EXPECT_EQ(cert->factors[1], minus);
  EXPECT_FALSE(plus.is_even_in_var());
  const auto& data = std::get<jacobi::PalindromeData>(cert->data);
  EXPECT_FALSE(data.odd_length);
  EXPECT_EQ(data.middle_coupling, Rational(2));
}

TEST(Mechanisms, PalindromeAllowsMirroredSigns) {
  const JacobiPencil p({0, 1, 1, 0}, {1, -2, -1});
  EXPECT_TRUE(jacobi::is_palindromic(p, {1, 4}));
  EXPECT_TRUE(jacobi::detect_palindrome(p, {1, 4}).has_value());
  EXPECT_FALSE(jacobi::is_palindromic(JacobiPencil({0, 1, 1, 0}, {1, 2, 3}), {1, 4}));
}

TEST(Mechanisms, OddPalindromeHalves) {
  // chi_3 = (l+1)(l^2 + l - 2w^2) for a = (1,0,1), b = (1,1)
  const JacobiPencil p({1, 0, 1}, {1, 1});
  const auto cert = jacobi::detect_palindrome(p, {1, 3});
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->factors[0], L(1) * L(0) - W(2) * W(1));
  EXPECT_EQ(cert->factors[1], L(1));
  EXPECT_TRUE(std::get<jacobi::PalindromeData>(cert->data).odd_length);
}

TEST(Mechanisms, ScalarBlockOfLengthFour) {
  const JacobiPencil p({0, 0, 0, 0}, {1, 2, 3});
  const auto cert = jacobi::scalar_block_certificate(p, {1, 4});
  const auto& d = std::get<jacobi::ScalarBlockData>(cert.data);
  EXPECT_EQ(d.q, UniPoly({Rational(9), Rational(0), Rational(-14), Rational(0), Rational(1)}));
  // mu^4 - 14 mu^2 + 9 has roots +-sqrt(7 +- 2 sqrt(10)): no rational factor.
  ASSERT_EQ(d.rational_factors.size(), 1u);
  EXPECT_TRUE(d.rational_factorization_complete);
  EXPECT_EQ(d.absolute_degree_pattern, (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(cert.factors.front(), jacobi::spectral_curve(p));
}

TEST(Mechanisms, ScalarBlockRationalSplitting) {
  // q = mu^2 - 1
  auto c2 = jacobi::scalar_block_certificate(JacobiPencil({0, 0}, {1}), {1, 2});
  ASSERT_EQ(c2.factors.size(), 2u);
  EXPECT_TRUE(contains(c2.factors, L(0) - W(1)));
  EXPECT_TRUE(contains(c2.factors, L(0) + W(1)));
  // q = mu^3 - 2 mu = mu (mu^2 - 2), shift 2
  auto c3 = jacobi::scalar_block_certificate(JacobiPencil({2, 2, 2}, {1, 1}), {1, 3});
  ASSERT_EQ(c3.factors.size(), 2u);
  EXPECT_TRUE(contains(c3.factors, L(2)));
  EXPECT_TRUE(contains(c3.factors, L(2) * L(2) - W(2) * W(1)));
  EXPECT_THROW(jacobi::scalar_block_certificate(JacobiPencil({0, 1}, {1}), {1, 2}), std::invalid_argument);
  EXPECT_THROW(jacobi::scalar_block_certificate(JacobiPencil({0, 0}, {0}), {1, 2}), std::invalid_argument);
}

TEST(Mechanisms, ScalarFactorsMultiplyBackToQ) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 40; ++i) {
    const auto n = static_cast<std::size_t>(gen::integer(rng, 2, 7));
    const JacobiPencil g = gen::pencil(rng, n, {5, true, false});
    const JacobiPencil p(std::vector<Rational>(n, g.a(1)), g.couplings());
    const auto cert = jacobi::scalar_block_certificate(p, {1, n});
    const auto& d = std::get<jacobi::ScalarBlockData>(cert.data);
    UniPoly prod = UniPoly::constant(1);
    for (const auto& f : d.rational_factors) {
      EXPECT_TRUE(f.is_monic());
      prod = prod * f;
    }
    EXPECT_EQ(prod, d.q);
    EXPECT_TRUE(cert.verified);
  }
}

TEST(Mechanisms, ScalarRunInsideChainDoesNotSplit) {
  const JacobiPencil p({1, 0, 0}, {1, 1});
  EXPECT_EQ(jacobi::detect_scalar_blocks(p), (std::vector<jacobi::Block>{{2, 3}}));
  EXPECT_FALSE(jacobi::apply_all(p).reducible());
}

TEST(Mechanisms, ScalarBlocksAreMaximalRuns) {
  const JacobiPencil p({1, 1, 2, 2, 2, 3}, {1, 1, 1, 1, 1});
  EXPECT_EQ(jacobi::detect_scalar_blocks(p), (std::vector<jacobi::Block>{{1, 2}, {3, 5}}));
}

TEST(Mechanisms, GenericPencilHasNoCertificate) {
  const JacobiPencil p({3, -2, 7, 1, 0}, {1, 2, -1, 3});
  const auto rep = jacobi::apply_all(p);
  EXPECT_FALSE(rep.reducible());
  ASSERT_EQ(rep.residual_factors.size(), 1u);
  EXPECT_EQ(rep.residual_factors[0], jacobi::spectral_curve(p));
}

// Leaves always multiply back to the curve; every certificate checks.
TEST(Mechanisms, ApplyAllIsExactOnStructuredPencils) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 150; ++i) {
    const auto n = static_cast<std::size_t>(gen::integer(rng, 1, 8));
    const JacobiPencil p = gen::pencil(rng, n, {2, false, false});
    const auto rep = jacobi::apply_all(p);
    EXPECT_TRUE(rep.verified);
    int deg = 0;
    for (const auto& f : rep.residual_factors) deg += f.deg_lambda();
    EXPECT_EQ(deg, static_cast<int>(n));
    for (const auto& c : rep.certificates) EXPECT_TRUE(jacobi::verify_certificate(c));
  }
}
