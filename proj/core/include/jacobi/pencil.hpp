#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jacobi/bipoly.hpp"
#include "jacobi/rational.hpp"

namespace jacobi {

/// Finite Jacobi pencil J(w) = A + wB: diagonal a_1..a_n and couplings
/// b_1..b_{n-1} on the first off-diagonals of B.
///
/// Indices in this API are 1-based where they name matrix sites, matching
/// the usual a_i, b_i labelling; containers are 0-based.
class JacobiPencil {
 public:
  /// Throws ValidationError if a is empty or b.size() != a.size() - 1.
  JacobiPencil(std::vector<Rational> diagonal, std::vector<Rational> couplings);

  std::size_t size() const { return a_.size(); }
  const std::vector<Rational>& diagonal() const { return a_; }
  const std::vector<Rational>& couplings() const { return b_; }
  /// c_i = b_i^2
  const std::vector<Rational>& squared_couplings() const { return c_; }

  /// a_i and b_i, 1-based.
  const Rational& a(std::size_t i) const { return a_.at(i - 1); }
  const Rational& b(std::size_t i) const { return b_.at(i - 1); }

  /// All couplings nonzero.
  bool connected() const { return connected_; }
  /// Diagonal entries pairwise distinct.
  bool distinct_diagonal() const { return distinct_; }

  std::string str() const;

  friend bool operator==(const JacobiPencil& x, const JacobiPencil& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  std::vector<Rational> a_;
  std::vector<Rational> b_;
  std::vector<Rational> c_;
  bool connected_ = true;
  bool distinct_ = true;
};

/// Contiguous index range [r, s] of a pencil, 1-based and inclusive.
struct Block {
  std::size_t r = 1;
  std::size_t s = 1;

  std::size_t length() const { return s - r + 1; }
  friend bool operator==(const Block&, const Block&) = default;
};

/// P_n(lambda, t) from the three-term recurrence
///   P_0 = 1, P_1 = lambda + a_1, P_k = (lambda + a_k) P_{k-1} - t c_{k-1} P_{k-2}.
BiPoly continuant(const JacobiPencil& p);

/// chi_n(lambda, w) = det(lambda I + J_n(w)) by cofactor expansion of the
/// symbolic matrix. Independent of continuant(); used as a test oracle.
/// Throws std::invalid_argument for n > 10.
BiPoly charpoly_oracle(const JacobiPencil& p);

/// to_w_form(continuant(p))
BiPoly spectral_curve(const JacobiPencil& p);

/// Sub-pencil on sites r..s with couplings b_r..b_{s-1}.
/// Throws std::out_of_range unless 1 <= r <= s <= n.
JacobiPencil extract_block(const JacobiPencil& p, std::size_t r, std::size_t s);
JacobiPencil extract_block(const JacobiPencil& p, const Block& blk);

/// Maximal blocks separated by zero couplings, in order.
std::vector<Block> connected_components(const JacobiPencil& p);

}  // namespace jacobi
