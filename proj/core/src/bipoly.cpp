#include "jacobi/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jacobi {
namespace {

void require_same_form(const BiPoly& p, const BiPoly& q) {
  if (p.form() != q.form()) throw std::invalid_argument("BiPoly form mismatch (t-form vs w-form)");
}

}  // namespace

const char* form_name(Form f) { return f == Form::T ? "t" : "w"; }

BiPoly::BiPoly(Form form, std::vector<UniPoly> layers) : form_(form), layers_(std::move(layers)) { trim(); }

void BiPoly::trim() {
  while (!layers_.empty() && layers_.back().is_zero()) layers_.pop_back();
}

BiPoly BiPoly::constant(Form form, const Rational& c) { return BiPoly(form, {UniPoly::constant(c)}); }

BiPoly BiPoly::lambda_plus(Form form, const Rational& c) { return BiPoly(form, {UniPoly({c, Rational(1)})}); }

BiPoly BiPoly::variable(Form form, const Rational& c) {
  return BiPoly(form, {UniPoly(), UniPoly::constant(c)});
}

BiPoly BiPoly::from_lambda(Form form, UniPoly p) { return BiPoly(form, {std::move(p)}); }

BiPoly BiPoly::from_lambda_major(Form form, const std::vector<UniPoly>& by_lambda) {
  std::size_t var_len = 0;
  for (const auto& c : by_lambda) var_len = std::max(var_len, c.coefficients().size());
  std::vector<std::vector<Rational>> grid(var_len, std::vector<Rational>(by_lambda.size()));
  for (std::size_t i = 0; i < by_lambda.size(); ++i) {
    const auto& cs = by_lambda[i].coefficients();
    for (std::size_t j = 0; j < cs.size(); ++j) grid[j][i] = cs[j];
  }
  std::vector<UniPoly> layers;
  layers.reserve(var_len);
  for (auto& row : grid) layers.emplace_back(std::move(row));
  return BiPoly(form, std::move(layers));
}

bool BiPoly::is_constant() const { return layers_.size() <= 1 && deg_lambda() <= 0; }

int BiPoly::deg_lambda() const {
  int d = -1;
  for (const auto& l : layers_) d = std::max(d, l.degree());
  return d;
}

Rational BiPoly::coeff(std::size_t lambda_power, std::size_t var_power) const {
  return var_power < layers_.size() ? layers_[var_power][lambda_power] : Rational();
}

UniPoly BiPoly::lambda_leading() const {
  const int d = deg_lambda();
  if (d < 0) return {};
  std::vector<Rational> c(layers_.size());
  for (std::size_t j = 0; j < layers_.size(); ++j) c[j] = layers_[j][static_cast<std::size_t>(d)];
  return UniPoly(std::move(c));
}

bool BiPoly::is_monic_in_lambda() const {
  UniPoly lc = lambda_leading();
  return lc.degree() == 0 && lc.leading().is_one();
}

std::vector<UniPoly> BiPoly::lambda_major() const {
  const int d = deg_lambda();
  std::vector<UniPoly> out;
  if (d < 0) return out;
  out.reserve(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    std::vector<Rational> c(layers_.size());
    for (std::size_t j = 0; j < layers_.size(); ++j) c[j] = layers_[j][static_cast<std::size_t>(i)];
    out.emplace_back(std::move(c));
  }
  return out;
}

UniPoly BiPoly::eval_lambda(const Rational& value) const {
  std::vector<Rational> c(layers_.size());
  for (std::size_t j = 0; j < layers_.size(); ++j) c[j] = layers_[j].eval(value);
  return UniPoly(std::move(c));
}

UniPoly BiPoly::eval_var(const Rational& value) const {
  UniPoly acc;
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
    acc *= value;
    acc += *it;
  }
  return acc;
}

BiPoly BiPoly::derivative_lambda() const {
  std::vector<UniPoly> out;
  out.reserve(layers_.size());
  for (const auto& l : layers_) out.push_back(l.derivative());
  return BiPoly(form_, std::move(out));
}

BiPoly BiPoly::shift_lambda(const Rational& shift) const {
  const UniPoly x = UniPoly({shift, Rational(1)});
  std::vector<UniPoly> out;
  out.reserve(layers_.size());
  for (const auto& l : layers_) {
    UniPoly acc;
    const auto& cs = l.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + UniPoly::constant(*it);
    out.push_back(std::move(acc));
  }
  return BiPoly(form_, std::move(out));
}

BiPoly BiPoly::negate_var() const {
  std::vector<UniPoly> out = layers_;
  for (std::size_t j = 1; j < out.size(); j += 2) out[j] = -out[j];
  return BiPoly(form_, std::move(out));
}

bool BiPoly::is_even_in_var() const {
  for (std::size_t j = 1; j < layers_.size(); j += 2) {
    if (!layers_[j].is_zero()) return false;
  }
  return true;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& l : r.layers_) l = -l;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  require_same_form(*this, other);
  if (other.layers_.size() > layers_.size()) layers_.resize(other.layers_.size());
  for (std::size_t j = 0; j < other.layers_.size(); ++j) layers_[j] += other.layers_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  require_same_form(*this, other);
  if (other.layers_.size() > layers_.size()) layers_.resize(other.layers_.size());
  for (std::size_t j = 0; j < other.layers_.size(); ++j) layers_[j] -= other.layers_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  for (auto& l : layers_) l *= c;
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
  require_same_form(lhs, rhs);
  if (lhs.is_zero() || rhs.is_zero()) return BiPoly(lhs.form_);
  std::vector<UniPoly> out(lhs.layers_.size() + rhs.layers_.size() - 1);
  for (std::size_t i = 0; i < lhs.layers_.size(); ++i) {
    if (lhs.layers_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.layers_.size(); ++j) {
      if (rhs.layers_[j].is_zero()) continue;
      out[i + j] += lhs.layers_[i] * rhs.layers_[j];
    }
  }
  return BiPoly(lhs.form_, std::move(out));
}

std::string BiPoly::str() const {
  if (layers_.empty()) return "0";
  const char* v = form_name(form_);
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = layers_.size(); j-- > 0;) {
    const auto& cs = layers_[j].coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) {
      const Rational& c = cs[i];
      if (c.is_zero()) continue;
      Rational mag = c.abs();
      if (first) {
        if (c.sign() < 0) os << "-";
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      first = false;
      const bool has_monomial = i > 0 || j > 0;
      const bool unit = mag.is_one() && has_monomial;
      if (!unit) os << mag;
      bool need_star = !unit;
      if (i > 0) {
        if (need_star) os << "*";
        os << "l";
        if (i > 1) os << "^" << i;
        need_star = true;
      }
      if (j > 0) {
        if (need_star) os << "*";
        os << v;
        if (j > 1) os << "^" << j;
      }
    }
  }
  return os.str();
}

BiPoly add(const BiPoly& p, const BiPoly& q) { return p + q; }
BiPoly mul(const BiPoly& p, const BiPoly& q) { return p * q; }

BiPoly to_w_form(const BiPoly& p) {
  if (p.form() != Form::T) throw std::invalid_argument("to_w_form expects a t-form polynomial");
  std::vector<UniPoly> out;
  if (!p.is_zero()) out.resize(2 * p.layers().size() - 1);
  for (std::size_t j = 0; j < p.layers().size(); ++j) out[2 * j] = p.layers()[j];
  return BiPoly(Form::W, std::move(out));
}

BiPoly to_t_form(const BiPoly& p) {
  if (p.form() != Form::W) throw std::invalid_argument("to_t_form expects a w-form polynomial");
  if (!p.is_even_in_var()) throw std::invalid_argument("to_t_form: polynomial is not even in w");
  std::vector<UniPoly> out;
  for (std::size_t j = 0; j < p.layers().size(); j += 2) out.push_back(p.layers()[j]);
  return BiPoly(Form::T, std::move(out));
}

BiQuotientRemainder divmod_lambda(const BiPoly& num, const BiPoly& den) {
  require_same_form(num, den);
  if (den.is_zero()) throw std::domain_error("BiPoly division by zero");
  const UniPoly lc = den.lambda_leading();
  if (lc.degree() != 0) {
    throw std::invalid_argument("divmod_lambda: divisor's lambda-leading coefficient must be a constant");
  }
  const Form f = num.form();
  const int dd = den.deg_lambda();
  std::vector<UniPoly> rem = num.lambda_major();
  const std::vector<UniPoly> d = den.lambda_major();
  const Rational inv = lc.leading().inverse();
  if (static_cast<int>(rem.size()) - 1 < dd) return {BiPoly(f), num};
  std::vector<UniPoly> quot(rem.size() - static_cast<std::size_t>(dd));
  for (std::size_t k = rem.size(); k-- > static_cast<std::size_t>(dd);) {
    if (rem[k].is_zero()) continue;
    UniPoly q = rem[k] * inv;
    for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= q * d[i];
    quot[k - dd] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {BiPoly::from_lambda_major(f, quot), BiPoly::from_lambda_major(f, rem)};
}

bool divides_lambda(const BiPoly& den, const BiPoly& num) { return divmod_lambda(num, den).remainder.is_zero(); }

}  // namespace jacobi
