#pragma once

// Internal helper shared by mechanisms.cpp and monodromy.cpp.

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace jacobi::detail {

using cplx = std::complex<double>;

/// p(z) for coefficients c[0] + c[1] z + ... (Horner).
template <typename T>
std::complex<T> horner(const std::vector<std::complex<T>>& c, std::complex<T> z) {
  std::complex<T> acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

/// Roots of a polynomial with complex coefficients (c.back() != 0): the
/// eigenvalues of its companion matrix, refined together by Aberth
/// iteration in long double. The simultaneous update repels iterates from
/// each other, so a cluster of close roots does not collapse onto one root.
inline std::vector<cplx> polynomial_roots(const std::vector<cplx>& c) {
  const int deg = static_cast<int>(c.size()) - 1;
  std::vector<cplx> roots;
  if (deg < 1) return roots;
  if (deg == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  const auto& ev = solver.eigenvalues();

  using ld = long double;
  using lc = std::complex<ld>;
  const auto n = static_cast<std::size_t>(deg);
  std::vector<lc> cl(c.begin(), c.end());
  std::vector<lc> dl(n);
  for (std::size_t i = 1; i <= n; ++i) dl[i - 1] = cl[i] * static_cast<ld>(i);

  std::vector<lc> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = lc(ev(static_cast<Eigen::Index>(i)).real(), ev(static_cast<Eigen::Index>(i)).imag());
  // Nudge exact ties apart; Aberth needs distinct starting points.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (z[i] == z[j]) z[i] += lc(0, 1e-9L * (1 + std::abs(z[i])));
    }
  }
  const ld eps = std::numeric_limits<ld>::epsilon();
  for (int iter = 0; iter < 60; ++iter) {
    bool moved = false;
    for (std::size_t k = 0; k < n; ++k) {
      const lc d = horner(dl, z[k]);
      const lc v = horner(cl, z[k]);
      if (std::abs(v) == 0 || std::abs(d) == 0) continue;
      const lc ratio = v / d;
      lc repel = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) repel += ld(1) / (z[k] - z[j]);
      }
      const lc step = ratio / (ld(1) - ratio * repel);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      if (std::abs(step) > 16 * eps * (1 + std::abs(z[k]))) moved = true;
    }
    if (!moved) break;
  }
  for (std::size_t i = 0; i < n; ++i) {
    cplx zd(static_cast<double>(z[i].real()), static_cast<double>(z[i].imag()));
    if (!std::isfinite(zd.real()) || !std::isfinite(zd.imag())) zd = ev(static_cast<Eigen::Index>(i));
    roots.push_back(zd);
  }
  return roots;
}

}  // namespace jacobi::detail
