#include "jacobi/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "jacobi/exactpoly.hpp"
#include "numeric_roots.hpp"

namespace jacobi {
namespace {

BiPoly product(const std::vector<BiPoly>& factors, Form form) {
  BiPoly acc = BiPoly::constant(form, Rational(1));
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

BiPoly block_curve(const JacobiPencil& p, const Block& blk) {
  return spectral_curve(extract_block(p, blk));
}

bool block_connected(const JacobiPencil& p, const Block& blk) {
  for (std::size_t i = blk.r; i < blk.s; ++i) {
    if (p.b(i).is_zero()) return false;
  }
  return true;
}

Certificate finish(Certificate cert) {
  cert.verified = verify_certificate(cert);
  if (!cert.verified) {
    throw std::logic_error(std::string("internal error: ") + mechanism_name(cert.kind) +
                           " certificate failed its product check");
  }
  return cert;
}

struct RationalSplit {
  std::vector<UniPoly> factors;
  bool complete = true;
};

// Factor a monic q in Q[mu] over Q. q is scaled to a monic integer
// polynomial, its complex roots are computed numerically, and root subsets
// of increasing size are recombined into candidate integer factors that are
// accepted only after exact division. Each accepted factor is therefore an
// exact divisor; minimality of the subset size makes it irreducible as long
// as the rounding of candidate coefficients is reliable, which is guarded
// by a bound on the coefficient size.
RationalSplit split_over_rationals(const UniPoly& q) {
  RationalSplit out;
  const int m = q.degree();
  if (m <= 1) {
    out.factors.push_back(q);
    return out;
  }
  mpz_class scale = 1;
  for (const auto& c : q.coefficients()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.denominator().get_mpz_t());
  const Rational d{mpq_class(scale)};

  // p(x) = D^m q(x / D) is monic with integer coefficients.
  std::vector<Rational> pc(static_cast<std::size_t>(m) + 1);
  Rational power(1);
  for (int j = m; j >= 0; --j) {
    pc[static_cast<std::size_t>(j)] = q[static_cast<std::size_t>(j)] * power;
    power *= d;
  }
  UniPoly remaining(pc);

  std::vector<detail::cplx> dc;
  for (const auto& c : pc) dc.emplace_back(c.to_double(), 0.0);
  std::vector<detail::cplx> roots = detail::polynomial_roots(dc);

  double bound = 1.0;
  for (const auto& r : roots) bound *= 1.0 + std::abs(r);
  if (bound > std::ldexp(1.0, 50) || m > 20) {
    out.factors.push_back(q);
    out.complete = false;
    return out;
  }

  std::vector<UniPoly> integer_factors;
  std::size_t k = 1;
  while (2 * k <= roots.size()) {
    bool found = false;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<std::complex<long double>> prod{1.0L};
      for (std::size_t i : idx) {
        std::complex<long double> r(roots[i].real(), roots[i].imag());
        std::vector<std::complex<long double>> next(prod.size() + 1);
        for (std::size_t j = 0; j < prod.size(); ++j) {
          next[j + 1] += prod[j];
          next[j] -= prod[j] * r;
        }
        prod = std::move(next);
      }
      bool integral = true;
      std::vector<Rational> cand(prod.size());
      for (std::size_t j = 0; j < prod.size() && integral; ++j) {
        long double re = std::round(prod[j].real());
        if (std::abs(prod[j].imag()) > 0.25L || std::abs(prod[j].real() - re) > 0.25L) integral = false;
        cand[j] = Rational(static_cast<long>(re));
      }
      if (integral) {
        UniPoly c(std::move(cand));
        auto [quot, rem] = divmod(remaining, c);
        if (rem.is_zero()) {
          integer_factors.push_back(c);
          remaining = quot;
          std::vector<detail::cplx> rest;
          for (std::size_t i = 0; i < roots.size(); ++i) {
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(roots[i]);
          }
          roots = std::move(rest);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == roots.size() - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++k;
  }
  if (remaining.degree() >= 1) integer_factors.push_back(remaining);

  // Undo the scaling: f(mu) = D^{-deg} p_f(D mu).
  for (const auto& f : integer_factors) {
    const int deg = f.degree();
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    Rational dj(1);
    const Rational dinv_deg = [&] {
      Rational x(1);
      for (int i = 0; i < deg; ++i) x *= d;
      return x.inverse();
    }();
    for (int j = 0; j <= deg; ++j) {
      c[static_cast<std::size_t>(j)] = f[static_cast<std::size_t>(j)] * dj * dinv_deg;
      dj *= d;
    }
    out.factors.emplace_back(std::move(c));
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const UniPoly& x, const UniPoly& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    for (std::size_t j = 0; j < x.coefficients().size(); ++j) {
      if (x[j] != y[j]) return x[j] < y[j];
    }
    return false;
  });
  return out;
}

// sum_j f_j (lambda + a)^j w^(k - j) for f of degree k.
BiPoly homogenize(const UniPoly& f, const Rational& a) {
  const int k = f.degree();
  std::vector<UniPoly> layers(static_cast<std::size_t>(k) + 1);
  const UniPoly x({a, Rational(1)});
  UniPoly xp = UniPoly::constant(1);
  for (int j = 0; j <= k; ++j) {
    layers[static_cast<std::size_t>(k - j)] = xp * f[static_cast<std::size_t>(j)];
    xp = xp * x;
  }
  return BiPoly(Form::W, std::move(layers));
}

// Extract lambda + a_j factors from `f` for every diagonal value of the block.
std::vector<BiPoly> extract_branches(const JacobiPencil& p, const Block& blk, const BiPoly& f,
                                     std::vector<Certificate>& certs) {
  ConstantBranchData data;
  std::vector<BiPoly> branch_factors;
  BiPoly rest = f;
  std::vector<Rational> seen;
  for (std::size_t j = blk.r; j <= blk.s; ++j) {
    const Rational& a = p.a(j);
    if (std::find(seen.begin(), seen.end(), a) != seen.end()) continue;
    seen.push_back(a);
    while (rest.deg_lambda() >= 2 && rest.eval_lambda(-a).is_zero()) {
      BiPoly lin = BiPoly::lambda_plus(Form::W, a);
      rest = divmod_lambda(rest, lin).quotient;
      branch_factors.push_back(lin);
      data.indices.push_back(j);
    }
  }
  if (branch_factors.empty()) return {f};
  Certificate cert;
  cert.kind = MechanismKind::ConstantBranch;
  cert.block = blk;
  cert.target = f;
  cert.factors = branch_factors;
  cert.factors.push_back(rest);
  cert.data = std::move(data);
  certs.push_back(finish(std::move(cert)));
  return certs.back().factors;
}

bool scalar_block(const JacobiPencil& p, const Block& blk) {
  for (std::size_t j = blk.r + 1; j <= blk.s; ++j) {
    if (p.a(j) != p.a(blk.r)) return false;
  }
  return true;
}

void split_component(const JacobiPencil& p, const Block& blk, std::vector<Certificate>& certs,
                     std::vector<BiPoly>& leaves) {
  if (blk.length() == 1) {
    leaves.push_back(BiPoly::lambda_plus(Form::W, p.a(blk.r)));
    return;
  }
  std::vector<BiPoly> pieces;
  if (scalar_block(p, blk)) {
    certs.push_back(scalar_block_certificate(p, blk));
    pieces = certs.back().factors;
  } else if (auto pal = detect_palindrome(p, blk)) {
    certs.push_back(std::move(*pal));
    pieces = certs.back().factors;
  } else {
    pieces.push_back(block_curve(p, blk));
  }
  for (const auto& piece : pieces) {
    for (auto& leaf : extract_branches(p, blk, piece, certs)) leaves.push_back(std::move(leaf));
  }
}

void split_segment(const JacobiPencil& p, const Block& seg, std::vector<Certificate>& certs,
                   std::vector<BiPoly>& leaves) {
  for (std::size_t i = seg.r; i < seg.s; ++i) {
    if (!p.b(i).is_zero()) continue;
    Certificate cert;
    cert.kind = MechanismKind::Cut;
    cert.block = seg;
    cert.target = block_curve(p, seg);
    cert.factors = {block_curve(p, {seg.r, i}), block_curve(p, {i + 1, seg.s})};
    cert.data = CutData{i};
    certs.push_back(finish(std::move(cert)));
    split_segment(p, {seg.r, i}, certs, leaves);
    split_segment(p, {i + 1, seg.s}, certs, leaves);
    return;
  }
  split_component(p, seg, certs, leaves);
}

}  // namespace

const char* mechanism_name(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::Cut:
      return "Cut";
    case MechanismKind::ConstantBranch:
      return "ConstantBranch";
    case MechanismKind::Palindrome:
      return "Palindrome";
    case MechanismKind::ScalarBlock:
      return "ScalarBlock";
  }
  return "?";
}

bool verify_certificate(const Certificate& cert) {
  if (cert.factors.empty()) return false;
  for (const auto& f : cert.factors) {
    if (f.deg_lambda() < 1) return false;
  }
  return product(cert.factors, cert.target.form()) == cert.target;
}

std::vector<std::size_t> detect_cuts(const JacobiPencil& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p.b(i).is_zero()) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> detect_constant_branches(const JacobiPencil& p, const Block& blk) {
  const BiPoly curve = continuant(extract_block(p, blk));
  std::vector<std::size_t> out;
  for (std::size_t j = blk.r; j <= blk.s; ++j) {
    if (curve.eval_lambda(-p.a(j)).is_zero()) out.push_back(j);
  }
  return out;
}

bool is_palindromic(const JacobiPencil& p, const Block& blk) {
  if (blk.length() < 2 || !block_connected(p, blk)) return false;
  const std::size_t m = blk.length();
  for (std::size_t k = 0; k < m; ++k) {
    if (p.a(blk.r + k) != p.a(blk.s - k)) return false;
  }
  const auto& c = p.squared_couplings();
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (c[blk.r + k - 1] != c[blk.s - k - 2]) return false;
  }
  return true;
}

std::optional<Certificate> detect_palindrome(const JacobiPencil& p, const Block& blk) {
  if (!is_palindromic(p, blk)) return std::nullopt;
  const std::size_t m = blk.length();
  const std::size_t h = m / 2;
  const bool odd = (m % 2) == 1;

  // lambda I + J'(w) where J' uses |b|; J' commutes with the reversal.
  BiMatrix op(m, std::vector<BiPoly>(m, BiPoly(Form::W)));
  for (std::size_t i = 0; i < m; ++i) {
    op[i][i] = BiPoly::lambda_plus(Form::W, p.a(blk.r + i));
    if (i + 1 < m) {
      BiPoly e = BiPoly::variable(Form::W, p.b(blk.r + i).abs());
      op[i][i + 1] = e;
      op[i + 1][i] = e;
    }
  }

  // Basis vectors of the +1 and -1 eigenspaces of the reversal.
  using Vec = std::vector<int>;
  std::vector<Vec> sym, anti;
  for (std::size_t k = 0; k < h; ++k) {
    Vec v(m, 0), u(m, 0);
    v[k] = 1;
    v[m - 1 - k] = 1;
    u[k] = 1;
    u[m - 1 - k] = -1;
    sym.push_back(v);
    anti.push_back(u);
  }
  if (odd) {
    Vec v(m, 0);
    v[h] = 1;
    sym.push_back(v);
  }

  // Matrix of the restricted operator: A = diag(1/|v_i|^2) V^T M V, exact
  // because the basis is orthogonal and the subspace is invariant.
  auto restrict_to = [&](const std::vector<Vec>& basis) {
    const std::size_t k = basis.size();
    BiMatrix a(k, std::vector<BiPoly>(k, BiPoly(Form::W)));
    for (std::size_t i = 0; i < k; ++i) {
      long norm = 0;
      for (int x : basis[i]) norm += x * x;
      const Rational inv_norm = Rational(1, norm);
      for (std::size_t j = 0; j < k; ++j) {
        BiPoly acc(Form::W);
        for (std::size_t r = 0; r < m; ++r) {
          if (basis[i][r] == 0) continue;
          for (std::size_t c = 0; c < m; ++c) {
            if (basis[j][c] == 0 || op[r][c].is_zero()) continue;
            acc += op[r][c] * Rational(basis[i][r] * basis[j][c]);
          }
        }
        a[i][j] = acc * inv_norm;
      }
    }
    return determinant(a, Form::W);
  };

  Certificate cert;
  cert.kind = MechanismKind::Palindrome;
  cert.block = blk;
  cert.target = block_curve(p, blk);
  cert.factors = {restrict_to(sym), restrict_to(anti)};

  PalindromeData data;
  data.odd_length = odd;
  const std::size_t half_len = odd ? h + 1 : h;
  for (std::size_t k = 0; k < half_len; ++k) data.half_diagonal.push_back(p.a(blk.r + k));
  for (std::size_t k = 0; k + 1 < h; ++k) data.half_couplings.push_back(p.b(blk.r + k).abs());
  data.middle_coupling = p.b(blk.r + h - 1).abs();
  cert.data = std::move(data);
  return finish(std::move(cert));
}

std::vector<Block> detect_scalar_blocks(const JacobiPencil& p) {
  std::vector<Block> out;
  std::size_t start = 1;
  for (std::size_t i = 2; i <= p.size() + 1; ++i) {
    if (i <= p.size() && p.a(i) == p.a(start)) continue;
    if (i - 1 > start) out.push_back({start, i - 1});
    start = i;
  }
  return out;
}

Certificate scalar_block_certificate(const JacobiPencil& p, const Block& blk) {
  if (blk.length() < 2 || !block_connected(p, blk) || !scalar_block(p, blk)) {
    throw std::invalid_argument("scalar_block_certificate needs a connected scalar block of length >= 2");
  }
  const std::size_t m = blk.length();
  const Rational a = p.a(blk.r);

  // q(mu) = det(mu I - B_I): continuant with zero diagonal read at t = 1,
  // Q_k = mu Q_{k-1} - c Q_{k-2}.
  UniPoly q2 = UniPoly::constant(1);
  UniPoly q1 = UniPoly::monomial(1, 1);
  for (std::size_t k = 1; k < m; ++k) {
    UniPoly next = UniPoly::monomial(1, 1) * q1 - q2 * p.squared_couplings()[blk.r + k - 2];
    q2 = std::move(q1);
    q1 = std::move(next);
  }
  const UniPoly& q = q1;

  ScalarBlockData data;
  data.shift = a;
  data.q = q;
  data.squarefree = squarefree_decomposition(q);
  RationalSplit split = split_over_rationals(q);
  data.rational_factors = split.factors;
  data.rational_factorization_complete = split.complete;
  data.absolute_degree_pattern.assign(m, 1);

  Certificate cert;
  cert.kind = MechanismKind::ScalarBlock;
  cert.block = blk;
  cert.target = block_curve(p, blk);
  for (const auto& f : split.factors) cert.factors.push_back(homogenize(f, a));
  if (homogenize(q, a) != cert.target) {
    throw std::logic_error("internal error: scalar block homogenisation identity failed");
  }
  cert.data = std::move(data);
  return finish(std::move(cert));
}

MechanismReport apply_all(const JacobiPencil& p) {
  MechanismReport report{p, {}, {}, false};
  split_segment(p, {1, p.size()}, report.certificates, report.residual_factors);
  report.verified = product(report.residual_factors, Form::W) == spectral_curve(p);
  if (!report.verified) throw std::logic_error("internal error: mechanism leaves do not multiply to the curve");
  return report;
}

}  // namespace jacobi
