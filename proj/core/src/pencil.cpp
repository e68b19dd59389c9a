#include "jacobi/pencil.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "jacobi/errors.hpp"
#include "jacobi/exactpoly.hpp"

namespace jacobi {

JacobiPencil::JacobiPencil(std::vector<Rational> diagonal, std::vector<Rational> couplings)
    : a_(std::move(diagonal)), b_(std::move(couplings)) {
  if (a_.empty()) throw ValidationError("pencil needs at least one diagonal entry");
  if (b_.size() + 1 != a_.size()) {
    throw ValidationError("pencil of size " + std::to_string(a_.size()) + " needs " +
                          std::to_string(a_.size() - 1) + " couplings, got " + std::to_string(b_.size()));
  }
  c_.reserve(b_.size());
  for (const auto& b : b_) {
    c_.push_back(b * b);
    if (b.is_zero()) connected_ = false;
  }
  std::vector<Rational> sorted = a_;
  std::sort(sorted.begin(), sorted.end());
  distinct_ = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::string JacobiPencil::str() const {
  std::ostringstream os;
  os << "a=(";
  for (std::size_t i = 0; i < a_.size(); ++i) os << (i ? "," : "") << a_[i];
  os << ") b=(";
  for (std::size_t i = 0; i < b_.size(); ++i) os << (i ? "," : "") << b_[i];
  os << ")";
  return os.str();
}

BiPoly continuant(const JacobiPencil& p) {
  const auto& a = p.diagonal();
  const auto& c = p.squared_couplings();
  BiPoly prev2 = BiPoly::constant(Form::T, Rational(1));
  BiPoly prev1 = BiPoly::lambda_plus(Form::T, a[0]);
  for (std::size_t k = 1; k < a.size(); ++k) {
    BiPoly next = BiPoly::lambda_plus(Form::T, a[k]) * prev1;
    if (!c[k - 1].is_zero()) next -= BiPoly::variable(Form::T, c[k - 1]) * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

BiPoly charpoly_oracle(const JacobiPencil& p) {
  const std::size_t n = p.size();
  if (n > 10) throw std::invalid_argument("charpoly_oracle is limited to n <= 10");
  BiMatrix m(n, std::vector<BiPoly>(n, BiPoly(Form::W)));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = BiPoly::lambda_plus(Form::W, p.diagonal()[i]);
    if (i + 1 < n) {
      m[i][i + 1] = BiPoly::variable(Form::W, p.couplings()[i]);
      m[i + 1][i] = BiPoly::variable(Form::W, p.couplings()[i]);
    }
  }
  return determinant(m, Form::W);
}

BiPoly spectral_curve(const JacobiPencil& p) { return to_w_form(continuant(p)); }

JacobiPencil extract_block(const JacobiPencil& p, std::size_t r, std::size_t s) {
  if (r < 1 || r > s || s > p.size()) {
    throw std::out_of_range("block [" + std::to_string(r) + "," + std::to_string(s) +
                            "] outside pencil of size " + std::to_string(p.size()));
  }
  std::vector<Rational> a(p.diagonal().begin() + static_cast<long>(r - 1), p.diagonal().begin() + static_cast<long>(s));
  std::vector<Rational> b(p.couplings().begin() + static_cast<long>(r - 1), p.couplings().begin() + static_cast<long>(s - 1));
  return JacobiPencil(std::move(a), std::move(b));
}

JacobiPencil extract_block(const JacobiPencil& p, const Block& blk) { return extract_block(p, blk.r, blk.s); }

std::vector<Block> connected_components(const JacobiPencil& p) {
  std::vector<Block> out;
  std::size_t start = 1;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p.b(i).is_zero()) {
      out.push_back({start, i});
      start = i + 1;
    }
  }
  out.push_back({start, p.size()});
  return out;
}

}  // namespace jacobi
