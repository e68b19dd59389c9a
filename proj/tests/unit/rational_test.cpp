#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "jacobi/errors.hpp"
#include "jacobi/rational.hpp"

using jacobi::Rational;

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(Rational::parse("3/7"), Rational(3, 7));
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("12"), Rational(12));
  EXPECT_EQ(Rational::parse("\xE2\x88\x92" "5"), Rational(-5));
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(0, 5).str(), "0");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1.5", "3/", "/3", "--2", "1 /2", "2/3/4"}) {
    EXPECT_THROW(Rational::parse(bad), jacobi::ValidationError) << bad;
  }
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

// Field operations against cross-multiplied integer arithmetic.
TEST(Rational, ArithmeticMatchesIntegerFractions) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 60);
  for (int i = 0; i < 500; ++i) {
    const long p = num(rng), q = den(rng), r = num(rng), s = den(rng);
    const Rational x(p, q), y(r, s);
    EXPECT_EQ(x + y, Rational(p * s + r * q, q * s));
    EXPECT_EQ(x - y, Rational(p * s - r * q, q * s));
    EXPECT_EQ(x * y, Rational(p * r, q * s));
    if (r != 0) {
      EXPECT_EQ(x / y, Rational(p * s, q * r));
    }
    EXPECT_EQ(x < y, p * s < r * q);
    EXPECT_EQ(Rational::parse(x.str()), x);
  }
}

TEST(Rational, Predicates) {
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_FALSE(Rational(1, 2).is_integer());
  EXPECT_EQ(Rational(-3, 4).abs(), Rational(3, 4));
  EXPECT_EQ(Rational(-3, 4).sign(), -1);
  EXPECT_DOUBLE_EQ(Rational(1, 4).to_double(), 0.25);
}
