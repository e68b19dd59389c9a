#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "jacobi/bipoly.hpp"

using jacobi::BiPoly;
using jacobi::Form;
using jacobi::Rational;
using jacobi::UniPoly;

TEST(BiPoly, FormMismatchIsRejected) {
  BiPoly t = BiPoly::lambda_plus(Form::T, Rational(1));
  BiPoly w = BiPoly::lambda_plus(Form::W, Rational(1));
  EXPECT_THROW(t + w, std::invalid_argument);
  EXPECT_THROW(t * w, std::invalid_argument);
  EXPECT_THROW(jacobi::to_w_form(w), std::invalid_argument);
  EXPECT_THROW(jacobi::to_t_form(BiPoly::variable(Form::W)), std::invalid_argument);
}

TEST(BiPoly, FormConversionRoundTrip) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    BiPoly p = gen::bipoly(rng, Form::T, 3, 3);
    BiPoly w = jacobi::to_w_form(p);
    EXPECT_TRUE(w.is_even_in_var());
    EXPECT_EQ(jacobi::to_t_form(w), p);
    EXPECT_EQ(w.deg_var(), p.is_zero() ? -1 : 2 * p.deg_var());
  }
}

TEST(BiPoly, CoefficientAccess) {
  // lambda^2 + 3 lambda v - 2 v^2
  BiPoly p(Form::W, {UniPoly({Rational(0), Rational(0), Rational(1)}), UniPoly({Rational(0), Rational(3)}),
                     UniPoly({Rational(-2)})});
  EXPECT_EQ(p.coeff(2, 0), Rational(1));
  EXPECT_EQ(p.coeff(1, 1), Rational(3));
  EXPECT_EQ(p.coeff(0, 2), Rational(-2));
  EXPECT_EQ(p.coeff(5, 5), Rational(0));
  EXPECT_EQ(p.deg_lambda(), 2);
  EXPECT_TRUE(p.is_monic_in_lambda());
  EXPECT_FALSE(p.is_even_in_var());
  EXPECT_EQ(p.eval_var(Rational(1)), UniPoly({Rational(-2), Rational(3), Rational(1)}));
  EXPECT_EQ(p.eval_lambda(Rational(1)), UniPoly({Rational(1), Rational(3), Rational(-2)}));
  EXPECT_EQ(p.negate_var().coeff(1, 1), Rational(-3));
}

TEST(BiPoly, ShiftMatchesEvaluation) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 30; ++i) {
    BiPoly p = gen::bipoly(rng, Form::T, 3, 2);
    const Rational s = gen::rational(rng), x = gen::rational(rng);
    EXPECT_EQ(p.shift_lambda(s).eval_lambda(x), p.eval_lambda(x + s));
  }
}

TEST(BiPoly, LambdaDivisionIdentity) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    BiPoly num = gen::bipoly(rng, Form::W, 4, 3);
    BiPoly den = gen::monic_bipoly(rng, Form::W, 2, 2);
    auto [q, r] = jacobi::divmod_lambda(num, den);
    EXPECT_EQ(q * den + r, num);
    EXPECT_LT(r.deg_lambda(), den.deg_lambda());
    EXPECT_TRUE(jacobi::divides_lambda(den, q * den));
  }
  EXPECT_THROW(jacobi::divmod_lambda(BiPoly::lambda_plus(Form::W, 1), BiPoly::variable(Form::W) *
                                                                          BiPoly::lambda_plus(Form::W, 1)),
               std::invalid_argument);
}

TEST(BiPoly, MultiplicationDistributes) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 30; ++i) {
    BiPoly a = gen::bipoly(rng, Form::T, 2, 2), b = gen::bipoly(rng, Form::T, 2, 2),
           c = gen::bipoly(rng, Form::T, 2, 2);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
  }
}
