#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "jacobi/pencil.hpp"

namespace jacobi {

using ComplexApprox = std::complex<double>;

/// One-line notation, 0-based: sheet i is carried to sheet perm[i].
/// Products compose left to right along paths: (x * y)(i) = y(x(i)).
using Permutation = std::vector<std::size_t>;

Permutation compose(const Permutation& first, const Permutation& then);
bool is_identity(const Permutation& p);

struct MonodromyReport {
  ComplexApprox base_point;
  std::vector<ComplexApprox> branch_points;
  std::vector<double> radii;
  /// One per branch point: small counterclockwise loop, conjugated to the
  /// base point along a straight segment (with arcs around other branch
  /// points the segment would pass too close to).
  std::vector<Permutation> permutations;
  /// Sheets are the roots at the base point sorted by (re, im). For a
  /// connected pencil with distinct diagonal the roots there are real and
  /// keep their order down to w -> 0+, so sheet k is renamed to the site i
  /// whose -a_i has the same rank; sheet_labels[k] is that site (1-based).
  std::vector<std::size_t> sheet_labels;
  bool labels_are_sites = false;
  std::optional<std::size_t> group_order;  // exact for n <= 8
  std::vector<std::vector<std::size_t>> orbits;  // site/sheet labels, 1-based
  /// Smallest ratio (root separation) / (root movement) accepted in any step; >= 3.
  double certified_step = 0.0;
  /// Loop along |w| = |w_0| counterclockwise.
  Permutation infinity;
  /// Ordered product of the branch loops equals `infinity`; unset when some
  /// path needed a detour and the loops are not a standard system.
  std::optional<bool> infinity_consistent;
};

/// Distinct roots of the discriminant of chi_n in w, sorted by (re, im).
/// Throws UnsupportedError for n < 2 or when chi_n is not squarefree in lambda.
std::vector<ComplexApprox> branch_points(const JacobiPencil& p);

/// Permutation of sheets (sorted roots at the default base point, 0-based)
/// along the counterclockwise circle |w - center| = radius, reached from
/// the base point by a straight segment. Throws std::invalid_argument if a
/// branch point lies within 0.1 * radius of the circle and TrackingError
/// when a step cannot be certified.
Permutation track_loop(const JacobiPencil& p, ComplexApprox center, double radius);

MonodromyReport monodromy_group(const JacobiPencil& p);

/// Sorted orbit sizes.
std::vector<std::size_t> orbit_factor_degrees(const MonodromyReport& r);

}  // namespace jacobi
