#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jacobi/rational.hpp"

namespace jacobi {

/// Dense univariate polynomial over Q. Coefficient i multiplies x^i.
/// The zero polynomial has no coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t power);
  /// x - root
  static UniPoly linear_root(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  Rational operator[](std::size_t i) const;
  /// Zero for the zero polynomial.
  Rational leading() const;

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  /// Throws std::domain_error for the zero polynomial.
  UniPoly monic() const;
  /// p(x) -> p(x^2)
  UniPoly compose_square() const;
  /// Largest absolute coefficient; zero for the zero polynomial.
  Rational max_abs_coefficient() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
  friend UniPoly operator*(UniPoly p, const Rational& c) { return p *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly p) { return p *= c; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string str(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct QuotientRemainder {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division over Q. Throws std::domain_error for a zero divisor.
QuotientRemainder divmod(const UniPoly& num, const UniPoly& den);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct BezoutResult {
  UniPoly gcd;  // monic
  UniPoly s;    // s*a + t*b = gcd
  UniPoly t;
};

BezoutResult extended_gcd(const UniPoly& a, const UniPoly& b);

/// Yun's algorithm. parts[k] collects the irreducible factors of multiplicity
/// k+1; p = leading(p) * prod parts[k]^(k+1). Trailing unit parts are dropped.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

}  // namespace jacobi
