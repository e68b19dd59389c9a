#pragma once

#include <cstddef>
#include <vector>

#include "jacobi/bipoly.hpp"
#include "jacobi/pencil.hpp"
#include "jacobi/unipoly.hpp"

namespace jacobi {

/// Subset S of root labels 1..m. The canonical representative of {S, S^c}
/// is the smaller side, and for |S| = m/2 the side containing label 1.
struct SubsetSplit {
  std::vector<std::size_t> indices;  // sorted, 1-based
  std::size_t size() const { return indices.size(); }
  friend bool operator==(const SubsetSplit&, const SubsetSplit&) = default;
};

/// Canonical representative of the pair {S, complement of S} in {1..m}.
SubsetSplit canonicalize(const SubsetSplit& s, std::size_t m);

/// All 2^(m-1) - 1 canonical subsets, by size and then lexicographically.
std::vector<SubsetSplit> canonical_subsets(std::size_t m);

/// Truncated Hensel lift P = F G with F(lambda, 0) = prod_{i in S} (lambda - root_i).
/// F[k], G[k] are the t^k coefficients (polynomials in lambda); U F_0 + V G_0 = 1.
struct LiftState {
  std::vector<UniPoly> F;
  std::vector<UniPoly> G;
  UniPoly U;
  UniPoly V;
  std::size_t order = 0;  // P == F G mod t^order

  BiPoly F_truncated() const;
  BiPoly G_truncated() const;
};

/// Linear lift to `target_order` coefficients. P must be t-form and monic
/// in lambda with P(lambda, 0) = prod (lambda - roots[i]); the roots must
/// be pairwise distinct. Throws UnsupportedError when they are not and
/// std::invalid_argument on the other precondition failures.
LiftState lift_subset(const BiPoly& P, const std::vector<Rational>& roots, const SubsetSplit& s,
                      std::size_t target_order);

enum class DecisionStatus { Irreducible, Reducible };

struct Decision {
  DecisionStatus status = DecisionStatus::Irreducible;
  /// Absolutely irreducible factors, t-form and the matching w-form.
  std::vector<BiPoly> factors_t;
  std::vector<BiPoly> factors_w;
  /// Site labels whose -a_i are the roots of each factor at t = 0.
  std::vector<std::vector<std::size_t>> factor_sites;
  /// Subsets whose lift terminated, in the original site labels.
  std::vector<std::vector<std::size_t>> witnesses;
  std::size_t subsets_tested = 0;
};

/// Absolute irreducibility of P_n(lambda, t) for pairwise distinct a_i.
///
/// With distinct rational a_i every branch lambda_i(t) through -a_i is a
/// power series in t with rational coefficients. A factor over C is a
/// product of branches, so it has rational coefficients and is determined
/// by the set S of its branches; it has t-degree at most D = deg_t P and
/// equals the unique lift of prod_{i in S} (lambda + a_i) truncated at t^D.
/// Checking F G = P exactly for every canonical S is therefore a complete
/// test. The branches are series in t = w^2, hence even in w, so chi_n is
/// reducible in (lambda, w) exactly when P_n is reducible in (lambda, t).
///
/// Throws UnsupportedError on repeated diagonal entries; use the mechanisms
/// and monodromy modules there.
Decision decide(const JacobiPencil& p);

/// decide() for a t-form P monic in lambda with distinct rational roots at
/// t = 0; `labels` names each root in the reported sites and witnesses.
Decision decide_polynomial(const BiPoly& P, const std::vector<Rational>& roots,
                           const std::vector<std::size_t>& labels);

struct Obstruction {
  std::size_t order = 0;
  UniPoly coefficient;  // t^order coefficient of P - F G, a polynomial in lambda
  Rational max_abs;     // largest absolute coefficient
  bool zero() const { return coefficient.is_zero(); }
};

/// Residual of the subset lift for S: the t^k coefficients of P - F G for
/// k = 1..2D, where F, G are the lifts truncated at t^D. Orders up to D
/// vanish by construction; the lift terminates iff orders D+1..2D vanish.
std::vector<Obstruction> obstruction_profile(const JacobiPencil& p, const SubsetSplit& s);

}  // namespace jacobi
