#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jacobi/rational.hpp"
#include "jacobi/unipoly.hpp"

namespace jacobi {

/// Which second variable a BiPoly is written in: t (= w^2) or w itself.
enum class Form { T, W };

const char* form_name(Form f);

/// Dense bivariate polynomial in (lambda, v) with v = t or v = w.
///
/// layers()[j] is the coefficient of v^j, itself a polynomial in lambda.
/// The top layer is nonzero unless the polynomial is zero (no layers).
/// Mixing forms in arithmetic throws std::invalid_argument.
class BiPoly {
 public:
  explicit BiPoly(Form form = Form::T) : form_(form) {}
  BiPoly(Form form, std::vector<UniPoly> layers);

  static BiPoly constant(Form form, const Rational& c);
  /// lambda + c
  static BiPoly lambda_plus(Form form, const Rational& c);
  /// c * v
  static BiPoly variable(Form form, const Rational& c = Rational(1));
  /// A polynomial in lambda only.
  static BiPoly from_lambda(Form form, UniPoly p);
  /// Build from coefficients indexed by lambda power, each a polynomial in v.
  static BiPoly from_lambda_major(Form form, const std::vector<UniPoly>& by_lambda);

  Form form() const { return form_; }
  const std::vector<UniPoly>& layers() const { return layers_; }

  bool is_zero() const { return layers_.empty(); }
  bool is_constant() const;
  int deg_lambda() const;
  int deg_var() const { return static_cast<int>(layers_.size()) - 1; }
  /// Coefficient of lambda^i v^j.
  Rational coeff(std::size_t lambda_power, std::size_t var_power) const;
  /// Coefficient of lambda^deg_lambda as a polynomial in v.
  UniPoly lambda_leading() const;
  bool is_monic_in_lambda() const;

  /// Coefficients indexed by lambda power, each a polynomial in v.
  std::vector<UniPoly> lambda_major() const;

  /// Substitute lambda = value; the result is a polynomial in v.
  UniPoly eval_lambda(const Rational& value) const;
  /// Substitute v = value; the result is a polynomial in lambda.
  UniPoly eval_var(const Rational& value) const;

  BiPoly derivative_lambda() const;
  /// lambda -> lambda + shift
  BiPoly shift_lambda(const Rational& shift) const;
  /// v -> -v
  BiPoly negate_var() const;
  bool is_even_in_var() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const Rational& c);

  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
  friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
  friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
  friend BiPoly operator*(BiPoly p, const Rational& c) { return p *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly p) { return p *= c; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  std::string str() const;

 private:
  void trim();
  Form form_;
  std::vector<UniPoly> layers_;
};

BiPoly add(const BiPoly& p, const BiPoly& q);
BiPoly mul(const BiPoly& p, const BiPoly& q);

/// Substitute t = w^2. Requires a t-form input.
BiPoly to_w_form(const BiPoly& p);
/// Inverse of to_w_form. Throws std::invalid_argument on odd w-powers.
BiPoly to_t_form(const BiPoly& p);

struct BiQuotientRemainder {
  BiPoly quotient;
  BiPoly remainder;
};

/// Division in Q[v][lambda] by a divisor whose lambda-leading coefficient is
/// a nonzero rational constant (e.g. monic in lambda). Throws
/// std::invalid_argument otherwise and std::domain_error for a zero divisor.
BiQuotientRemainder divmod_lambda(const BiPoly& num, const BiPoly& den);

/// True when den divides num exactly (same preconditions as divmod_lambda).
bool divides_lambda(const BiPoly& den, const BiPoly& num);

}  // namespace jacobi
