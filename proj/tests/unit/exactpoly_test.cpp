#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "generators.hpp"
#include "jacobi/exactpoly.hpp"
#include "jacobi/pencil.hpp"

using jacobi::BiPoly;
using jacobi::Form;
using jacobi::Rational;
using jacobi::UniPoly;

namespace {

// Determinant of a rational matrix by Gaussian elimination.
Rational gauss_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Rational sylvester_resultant(const UniPoly& p, const UniPoly& q) {
  const int dp = p.degree(), dq = q.degree();
  const std::size_t n = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int r = 0; r < dq; ++r) {
    for (int i = 0; i <= dp; ++i) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + dp - i)] = p[static_cast<std::size_t>(i)];
  }
  for (int r = 0; r < dp; ++r) {
    for (int i = 0; i <= dq; ++i) m[static_cast<std::size_t>(dq + r)][static_cast<std::size_t>(r + dq - i)] = q[static_cast<std::size_t>(i)];
  }
  return gauss_det(m);
}

BiPoly leibniz(const jacobi::BiMatrix& m, Form form) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BiPoly total(form);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    BiPoly term = BiPoly::constant(form, Rational(inversions % 2 ? -1 : 1));
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(ExactPoly, ResultantAgreesWithSpecialisedSylvester) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    BiPoly p = gen::monic_bipoly(rng, Form::T, 3, 2);
    BiPoly q = gen::monic_bipoly(rng, Form::T, 2, 2);
    const UniPoly res = jacobi::resultant_in_lambda(p, q);
    for (long v : {-2L, 0L, 1L, 3L}) {
      EXPECT_EQ(res.eval(Rational(v)), sylvester_resultant(p.eval_var(v), q.eval_var(v)));
    }
  }
}

TEST(ExactPoly, DiscriminantOfQuadraticIsBSquaredMinus4C) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 30; ++i) {
    BiPoly b = gen::bipoly(rng, Form::W, 0, 2), c = gen::bipoly(rng, Form::W, 0, 2);
    BiPoly lam = BiPoly::lambda_plus(Form::W, Rational(0));
    BiPoly quad = lam * lam + b * lam + c;
    BiPoly expect = b * b - c * Rational(4);
    EXPECT_EQ(jacobi::discriminant_in_lambda(quad), expect.eval_lambda(Rational(0)));
  }
}

TEST(ExactPoly, DiscriminantSmallCurves) {
  // lambda^2 - w^2 -> 4 w^2
  BiPoly lam = BiPoly::lambda_plus(Form::W, Rational(0));
  BiPoly w = BiPoly::variable(Form::W);
  EXPECT_EQ(jacobi::discriminant_in_lambda(lam * lam - w * w),
            UniPoly({Rational(0), Rational(0), Rational(4)}));
  // chi_2 for a = (0, 1), b = (1): lambda (lambda + 1) - w^2 -> 1 + 4 w^2
  const jacobi::JacobiPencil p({0, 1}, {1});
  EXPECT_EQ(jacobi::discriminant_in_lambda(jacobi::spectral_curve(p)),
            UniPoly({Rational(1), Rational(0), Rational(4)}));
}

TEST(ExactPoly, DiscriminantIsProductOfSquaredRootDifferences) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 30; ++i) {
    std::vector<Rational> roots;
    const int d = static_cast<int>(gen::integer(rng, 2, 5));
    BiPoly f = BiPoly::constant(Form::T, Rational(1));
    for (int k = 0; k < d; ++k) {
      roots.push_back(gen::rational(rng));
      f = f * BiPoly::lambda_plus(Form::T, -roots.back());
    }
    Rational expect(1);
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) expect *= (roots[static_cast<std::size_t>(a)] - roots[static_cast<std::size_t>(b)]) *
                                               (roots[static_cast<std::size_t>(a)] - roots[static_cast<std::size_t>(b)]);
    }
    EXPECT_EQ(jacobi::discriminant_in_lambda(f), UniPoly::constant(expect));
  }
  EXPECT_THROW(jacobi::discriminant_in_lambda(BiPoly::lambda_plus(Form::T, 1)), std::invalid_argument);
}

TEST(ExactPoly, GcdRecoversCommonFactor) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 40; ++i) {
    BiPoly h = gen::monic_bipoly(rng, Form::W, 2, 1);
    BiPoly f = gen::monic_bipoly(rng, Form::W, 2, 2);
    BiPoly g = gen::monic_bipoly(rng, Form::W, 3, 1);
    EXPECT_EQ(jacobi::gcd_in_lambda(f * h, g * h), h);
    EXPECT_TRUE(jacobi::gcd_in_lambda(f, g).is_constant());
  }
  EXPECT_THROW(jacobi::gcd_in_lambda(BiPoly(Form::W), BiPoly(Form::W)), std::invalid_argument);
}

TEST(ExactPoly, GcdHandEuclid) {
  // chi_2 = lambda(lambda + 1) - w^2 and chi_1 = lambda: remainder -w^2 is a
  // nonzero unit of Q(w), so the gcd is 1.
  const jacobi::JacobiPencil p({0, 1}, {1});
  const BiPoly g = jacobi::gcd_in_lambda(jacobi::spectral_curve(p), jacobi::spectral_curve(jacobi::extract_block(p, 1, 1)));
  EXPECT_EQ(g, BiPoly::constant(Form::W, Rational(1)));
}

TEST(ExactPoly, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen::integer(rng, 1, 5));
    jacobi::BiMatrix m(n, std::vector<BiPoly>(n, BiPoly(Form::T)));
    for (auto& row : m) {
      for (auto& e : row) {
        if (gen::integer(rng, 0, 2) > 0) e = gen::bipoly(rng, Form::T, 1, 1);
      }
    }
    EXPECT_EQ(jacobi::determinant(m, Form::T), leibniz(m, Form::T));
  }
}
