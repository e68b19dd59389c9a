#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "jacobi/bipoly.hpp"
#include "jacobi/pencil.hpp"
#include "jacobi/unipoly.hpp"

namespace jacobi {

/// The four elementary ways a spectral curve splits.
enum class MechanismKind { Cut, ConstantBranch, Palindrome, ScalarBlock };

const char* mechanism_name(MechanismKind kind);

struct CutData {
  std::size_t index = 0;  // b_index == 0
};

struct ConstantBranchData {
  std::vector<std::size_t> indices;  // sites j whose factor lambda + a_j was extracted, in extraction order
};

/// Reversal-symmetric block after normalising every coupling to |b|.
/// Even length 2h: both factors are the first half chain with the last
/// diagonal entry shifted by +/- middle_coupling * w.
/// Odd length 2h+1: the symmetric factor is the first h+1 sites with the
/// squared coupling into the middle site doubled; the antisymmetric factor
/// is the first h sites.
struct PalindromeData {
  bool odd_length = false;
  std::vector<Rational> half_diagonal;
  std::vector<Rational> half_couplings;  // |b_r|, |b_{r+1}|, ... inside the half chain
  Rational middle_coupling;              // |b| of the coupling that straddles or touches the centre
};

struct ScalarBlockData {
  Rational shift;                         // common diagonal value a
  UniPoly q;                              // det(mu I - B_I)
  std::vector<UniPoly> squarefree;        // Yun decomposition of q
  std::vector<UniPoly> rational_factors;  // monic factors of q over Q
  /// False when the coefficient size made the numeric recombination
  /// untrustworthy; rational_factors is then a verified but possibly
  /// incomplete splitting.
  bool rational_factorization_complete = true;
  std::vector<int> absolute_degree_pattern;  // lambda-degrees of the factors over C (all ones)
};

using CertificateData = std::variant<CutData, ConstantBranchData, PalindromeData, ScalarBlockData>;

/// A factorisation of `target` with its provenance. `target` is the
/// spectral curve of `block`, or a factor produced by an earlier certificate
/// when a constant branch is extracted from it. All polynomials are w-form.
struct Certificate {
  MechanismKind kind = MechanismKind::Cut;
  Block block;
  BiPoly target{Form::W};
  std::vector<BiPoly> factors;
  CertificateData data;
  bool verified = false;
};

struct MechanismReport {
  JacobiPencil pencil;
  std::vector<Certificate> certificates;
  /// Leaves of the iteration: factors no mechanism splits further.
  std::vector<BiPoly> residual_factors;
  /// product(residual_factors) == spectral curve, checked exactly.
  bool verified = false;

  bool reducible() const { return !certificates.empty(); }
};

/// Exact product of the factors equals the target.
bool verify_certificate(const Certificate& cert);

/// All i with b_i = 0, ascending.
std::vector<std::size_t> detect_cuts(const JacobiPencil& p);

/// All j in the block with P_I(-a_j, t) identically zero, ascending.
std::vector<std::size_t> detect_constant_branches(const JacobiPencil& p, const Block& blk);

/// a_{r+k} = a_{s-k} and b_{r+k}^2 = b_{s-k-1}^2 on a connected block, m >= 2.
bool is_palindromic(const JacobiPencil& p, const Block& blk);

/// Reversal splitting of a palindromic connected block; nullopt otherwise.
std::optional<Certificate> detect_palindrome(const JacobiPencil& p, const Block& blk);

/// Maximal runs of equal consecutive diagonal entries of length >= 2.
/// A run only splits the curve when it is a whole connected block.
std::vector<Block> detect_scalar_blocks(const JacobiPencil& p);

/// Splitting of a connected scalar block (a_r = ... = a_s, m >= 2) through
/// chi_I(lambda, w) = w^m q((lambda + a) / w). Throws std::invalid_argument
/// if the block is not scalar, not connected, or shorter than two.
Certificate scalar_block_certificate(const JacobiPencil& p, const Block& blk);

/// Cut at zero couplings, then on every connected block apply the scalar or
/// palindromic splitting when present, and extract constant branches from
/// every resulting factor. Leaves multiply to the spectral curve exactly.
MechanismReport apply_all(const JacobiPencil& p);

}  // namespace jacobi
