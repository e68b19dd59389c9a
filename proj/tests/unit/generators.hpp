#pragma once

// Small random generators for property tests.

#include <random>
#include <vector>

#include "jacobi/bipoly.hpp"
#include "jacobi/pencil.hpp"
#include "jacobi/unipoly.hpp"

namespace gen {

using jacobi::BiPoly;
using jacobi::Rational;
using jacobi::UniPoly;

inline long integer(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational rational(std::mt19937_64& rng, long range = 9) {
  long den = integer(rng, 1, 4);
  return Rational(integer(rng, -range, range), den);
}

inline UniPoly unipoly(std::mt19937_64& rng, int max_degree) {
  std::vector<Rational> c;
  const int d = static_cast<int>(integer(rng, 0, max_degree));
  for (int i = 0; i <= d; ++i) c.push_back(rational(rng));
  return UniPoly(std::move(c));
}

inline BiPoly bipoly(std::mt19937_64& rng, jacobi::Form form, int deg_lambda, int deg_var) {
  std::vector<UniPoly> layers;
  for (int j = 0; j <= deg_var; ++j) {
    std::vector<Rational> c;
    for (int i = 0; i <= deg_lambda; ++i) c.push_back(Rational(integer(rng, -5, 5)));
    layers.emplace_back(std::move(c));
  }
  return BiPoly(form, std::move(layers));
}

/// Monic in lambda of the given degree.
inline BiPoly monic_bipoly(std::mt19937_64& rng, jacobi::Form form, int deg_lambda, int deg_var) {
  BiPoly p = bipoly(rng, form, deg_lambda - 1, deg_var);
  return p + BiPoly::from_lambda(form, UniPoly::monomial(Rational(1), static_cast<std::size_t>(deg_lambda)));
}

struct PencilShape {
  long range = 9;
  bool connected = false;     // forbid zero couplings
  bool distinct = false;      // pairwise distinct diagonal
};

inline jacobi::JacobiPencil pencil(std::mt19937_64& rng, std::size_t n, PencilShape shape = {}) {
  std::vector<Rational> a, b;
  while (a.size() < n) {
    Rational x(integer(rng, -shape.range, shape.range));
    bool clash = false;
    for (const auto& y : a) clash = clash || (shape.distinct && y == x);
    if (!clash) a.push_back(x);
  }
  while (b.size() + 1 < n) {
    long x = integer(rng, -shape.range, shape.range);
    if (shape.connected && x == 0) continue;
    b.emplace_back(x);
  }
  return jacobi::JacobiPencil(std::move(a), std::move(b));
}

}  // namespace gen
