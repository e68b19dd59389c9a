#pragma once

#include <vector>

#include "jacobi/bipoly.hpp"
#include "jacobi/rational.hpp"
#include "jacobi/unipoly.hpp"

namespace jacobi {

/// gcd of p and q as polynomials in lambda over the field Q(v), cleared of
/// denominators, made primitive over Q[v] and normalised so that the leading
/// v-coefficient of its lambda-leading coefficient is 1. Coprime inputs give
/// the constant 1. Throws std::invalid_argument when both inputs are zero.
///
/// Computed with a primitive pseudo-remainder sequence, which agrees with
/// Euclid over Q(v) up to units of Q(v).
BiPoly gcd_in_lambda(const BiPoly& p, const BiPoly& q);

/// Res_lambda(p, q) as a polynomial in the second variable: determinant of
/// the Sylvester matrix, evaluated by fraction-free (Bareiss) elimination.
UniPoly resultant_in_lambda(const BiPoly& p, const BiPoly& q);

/// (-1)^(d(d-1)/2) Res_lambda(p, dp/dlambda) / lc(p) with d = deg_lambda(p).
/// Requires a constant lambda-leading coefficient and d >= 2; throws
/// std::invalid_argument otherwise. Works in either form; the result is a
/// polynomial in the same second variable.
UniPoly discriminant_in_lambda(const BiPoly& p);

using BiMatrix = std::vector<std::vector<BiPoly>>;

/// Determinant of a square matrix of bivariate polynomials by Laplace
/// expansion along rows, memoised on the set of columns already used.
/// Zero entries are skipped, so banded matrices stay cheap. Size <= 24.
BiPoly determinant(const BiMatrix& m, Form form);

}  // namespace jacobi
