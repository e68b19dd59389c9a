#include "jacobi/exactpoly.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace jacobi {
namespace {

using LambdaMajor = std::vector<UniPoly>;  // index = lambda power

void trim(LambdaMajor& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly content(const LambdaMajor& p) {
  UniPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

LambdaMajor primitive_part(const LambdaMajor& p) {
  if (p.empty()) return p;
  UniPoly c = content(p);
  // Also scale so that the leading v-coefficient of the lambda-leading
  // coefficient is one.
  LambdaMajor out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(divmod(x, c).quotient);
  Rational s = out.back().leading().inverse();
  for (auto& x : out) x *= s;
  return out;
}

// Sparse pseudo-remainder: repeatedly R <- lc(B) R - lc(R) lambda^k B.
LambdaMajor pseudo_remainder(LambdaMajor a, const LambdaMajor& b) {
  const std::size_t db = b.size() - 1;
  const UniPoly& lb = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const UniPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

BiPoly gcd_in_lambda(const BiPoly& p, const BiPoly& q) {
  if (p.form() != q.form()) throw std::invalid_argument("gcd_in_lambda: form mismatch");
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd_in_lambda: both inputs are zero");
  const Form f = p.form();
  LambdaMajor a = p.lambda_major();
  LambdaMajor b = q.lambda_major();
  if (a.size() < b.size()) std::swap(a, b);
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.empty()) {
    LambdaMajor r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  if (a.size() <= 1) return BiPoly::constant(f, Rational(1));
  return BiPoly::from_lambda_major(f, a);
}

UniPoly resultant_in_lambda(const BiPoly& p, const BiPoly& q) {
  if (p.form() != q.form()) throw std::invalid_argument("resultant_in_lambda: form mismatch");
  const int dp = p.deg_lambda();
  const int dq = q.deg_lambda();
  if (dp < 0 || dq < 0) return {};
  if (dp == 0 && dq == 0) return UniPoly::constant(1);
  const LambdaMajor pc = p.lambda_major();
  const LambdaMajor qc = q.lambda_major();
  const std::size_t size = static_cast<std::size_t>(dp + dq);
  if (size == 0) return UniPoly::constant(1);

  std::vector<std::vector<UniPoly>> m(size, std::vector<UniPoly>(size));
  for (int r = 0; r < dq; ++r) {
    for (int i = 0; i <= dp; ++i) m[r][r + i] = pc[dp - i];
  }
  for (int r = 0; r < dp; ++r) {
    for (int i = 0; i <= dq; ++i) m[dq + r][r + i] = qc[dq - i];
  }

  // Bareiss elimination; each division is exact in Q[v].
  int sign = 1;
  UniPoly prev = UniPoly::constant(1);
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < size && m[piv][k].is_zero()) ++piv;
      if (piv == size) return {};
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        UniPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto [quot, rem] = divmod(num, prev);
        if (!rem.is_zero()) throw std::logic_error("Bareiss step produced an inexact division");
        m[i][j] = std::move(quot);
      }
      m[i][k] = UniPoly();
    }
    prev = m[k][k];
  }
  UniPoly det = m[size - 1][size - 1];
  return sign < 0 ? -det : det;
}

UniPoly discriminant_in_lambda(const BiPoly& p) {
  const int d = p.deg_lambda();
  if (d < 2) throw std::invalid_argument("discriminant_in_lambda: lambda-degree must be at least 2");
  const UniPoly lc = p.lambda_leading();
  if (lc.degree() != 0) throw std::invalid_argument("discriminant_in_lambda: lambda-leading coefficient must be constant");
  UniPoly res = resultant_in_lambda(p, p.derivative_lambda());
  Rational scale = lc.leading().inverse();
  if ((d * (d - 1) / 2) % 2 == 1) scale = -scale;
  return res * scale;
}

BiPoly determinant(const BiMatrix& m, Form form) {
  const std::size_t n = m.size();
  if (n == 0) return BiPoly::constant(form, Rational(1));
  if (n > 24) throw std::invalid_argument("determinant: matrix too large for Laplace expansion");
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  }
  std::unordered_map<std::uint32_t, BiPoly> memo;
  // det of the minor formed by rows [row, n) and the columns not in `used`.
  auto rec = [&](auto&& self, std::uint32_t used) -> BiPoly {
    const std::size_t row = static_cast<std::size_t>(std::popcount(used));
    if (row == n) return BiPoly::constant(form, Rational(1));
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    BiPoly acc(form);
    int free_before = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      const BiPoly& e = m[row][c];
      if (!e.is_zero()) {
        BiPoly term = e * self(self, used | (1u << c));
        if (free_before % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++free_before;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0u);
}

}  // namespace jacobi
