#include "jacobi/hensel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "jacobi/errors.hpp"

namespace jacobi {
namespace {

// Coefficients of P in t, each a polynomial in lambda.
const std::vector<UniPoly>& t_layers(const BiPoly& P) { return P.layers(); }

UniPoly layer(const std::vector<UniPoly>& v, std::size_t k) { return k < v.size() ? v[k] : UniPoly(); }

void check_distinct(const std::vector<Rational>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (roots[i] == roots[j]) {
        throw UnsupportedError("repeated diagonal entries: P(lambda, 0) is not squarefree; "
                               "use the mechanisms report and the monodromy fallback");
      }
    }
  }
}

UniPoly root_product(const std::vector<Rational>& roots, const std::vector<std::size_t>& idx) {
  UniPoly acc = UniPoly::constant(1);
  for (std::size_t i : idx) acc = acc * UniPoly::linear_root(roots.at(i - 1));
  return acc;
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& s, std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= m; ++i) {
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  }
  return out;
}

// t^k coefficient of (sum F_i t^i)(sum G_j t^j) over the stored terms.
UniPoly convolution(const std::vector<UniPoly>& F, const std::vector<UniPoly>& G, std::size_t k) {
  UniPoly acc;
  for (std::size_t i = 0; i < F.size() && i <= k; ++i) {
    if (k - i < G.size()) acc += F[i] * G[k - i];
  }
  return acc;
}

void append(Decision& into, Decision&& part) {
  for (auto& f : part.factors_t) into.factors_t.push_back(std::move(f));
  for (auto& f : part.factors_w) into.factors_w.push_back(std::move(f));
  for (auto& s : part.factor_sites) into.factor_sites.push_back(std::move(s));
  for (auto& s : part.witnesses) into.witnesses.push_back(std::move(s));
  into.subsets_tested += part.subsets_tested;
}

std::vector<Rational> pick(const std::vector<Rational>& v, const std::vector<std::size_t>& idx) {
  std::vector<Rational> out;
  for (std::size_t i : idx) out.push_back(v[i - 1]);
  return out;
}

std::vector<std::size_t> pick(const std::vector<std::size_t>& v, const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> out;
  for (std::size_t i : idx) out.push_back(v[i - 1]);
  return out;
}

std::vector<Rational> diagonal_roots(const JacobiPencil& p) {
  std::vector<Rational> roots;
  for (const auto& a : p.diagonal()) roots.push_back(-a);
  return roots;
}

}  // namespace

SubsetSplit canonicalize(const SubsetSplit& s, std::size_t m) {
  SubsetSplit sorted = s;
  std::sort(sorted.indices.begin(), sorted.indices.end());
  sorted.indices.erase(std::unique(sorted.indices.begin(), sorted.indices.end()), sorted.indices.end());
  if (sorted.indices.empty() || sorted.size() >= m || sorted.indices.back() > m || sorted.indices.front() == 0) {
    throw std::invalid_argument("subset must be a non-empty proper subset of 1..m");
  }
  SubsetSplit other{complement(sorted.indices, m)};
  if (other.size() < sorted.size()) return other;
  if (other.size() == sorted.size() && other.indices.front() == 1) return other;
  return sorted;
}

std::vector<SubsetSplit> canonical_subsets(std::size_t m) {
  std::vector<SubsetSplit> out;
  for (std::size_t k = 1; 2 * k <= m; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
      if (2 * k < m || idx.front() == 1) out.push_back({idx});
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == m - k + pos) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

BiPoly LiftState::F_truncated() const { return BiPoly(Form::T, F); }
BiPoly LiftState::G_truncated() const { return BiPoly(Form::T, G); }

LiftState lift_subset(const BiPoly& P, const std::vector<Rational>& roots, const SubsetSplit& s,
                      std::size_t target_order) {
  if (P.form() != Form::T) throw std::invalid_argument("lift_subset needs a t-form polynomial");
  if (!P.is_monic_in_lambda()) throw std::invalid_argument("lift_subset needs P monic in lambda");
  if (target_order < 1) throw std::invalid_argument("target_order must be at least 1");
  check_distinct(roots);
  const std::size_t m = roots.size();
  if (s.indices.empty() || s.size() >= m) throw std::invalid_argument("subset must be non-empty and proper");

  LiftState st;
  const UniPoly F0 = root_product(roots, s.indices);
  const UniPoly G0 = root_product(roots, complement(s.indices, m));
  const auto& Pk = t_layers(P);
  if (F0 * G0 != layer(Pk, 0)) throw std::invalid_argument("roots do not match P(lambda, 0)");

  BezoutResult bz = extended_gcd(F0, G0);
  st.U = bz.s;
  st.V = bz.t;
  st.F.push_back(F0);
  st.G.push_back(G0);
  for (std::size_t k = 1; k < target_order; ++k) {
    // F0 G_k + F_k G0 = E_k; the Bezout pair splits E_k with deg F_k < deg F0.
    UniPoly e = layer(Pk, k) - convolution(st.F, st.G, k);
    UniPoly fk = divmod(e * st.V, F0).remainder;
    auto [gk, rem] = divmod(e - fk * G0, F0);
    if (!rem.is_zero()) throw std::logic_error("internal error: Hensel correction is not exact");
    st.F.push_back(std::move(fk));
    st.G.push_back(std::move(gk));
  }
  st.order = target_order;
  return st;
}

Decision decide_polynomial(const BiPoly& P, const std::vector<Rational>& roots,
                           const std::vector<std::size_t>& labels) {
  check_distinct(roots);
  const std::size_t m = roots.size();
  if (static_cast<std::size_t>(P.deg_lambda()) != m || labels.size() != m) {
    throw std::invalid_argument("root and label counts must equal deg_lambda(P)");
  }
  Decision d;
  if (m >= 2) {
    const std::size_t D = static_cast<std::size_t>(std::max(P.deg_var(), 0));
    for (const auto& s : canonical_subsets(m)) {
      ++d.subsets_tested;
      LiftState st = lift_subset(P, roots, s, D + 1);
      // Cheap rejection: P has no t^(D+1) term.
      if (!convolution(st.F, st.G, D + 1).is_zero()) continue;
      BiPoly F = st.F_truncated();
      BiPoly G = st.G_truncated();
      if (F * G != P) continue;

      const auto rest = complement(s.indices, m);
      d.status = DecisionStatus::Reducible;
      d.witnesses.push_back(pick(labels, s.indices));
      Decision left = decide_polynomial(F, pick(roots, s.indices), pick(labels, s.indices));
      Decision right = decide_polynomial(G, pick(roots, rest), pick(labels, rest));
      append(d, std::move(left));
      append(d, std::move(right));
      return d;
    }
  }
  d.factors_t.push_back(P);
  d.factors_w.push_back(to_w_form(P));
  d.factor_sites.push_back(labels);
  return d;
}

Decision decide(const JacobiPencil& p) {
  if (!p.distinct_diagonal()) {
    throw UnsupportedError("decide needs pairwise distinct diagonal entries; "
                           "use the mechanisms report and the monodromy fallback");
  }
  std::vector<std::size_t> labels(p.size());
  std::iota(labels.begin(), labels.end(), 1);
  return decide_polynomial(continuant(p), diagonal_roots(p), labels);
}

std::vector<Obstruction> obstruction_profile(const JacobiPencil& p, const SubsetSplit& s) {
  if (!p.distinct_diagonal()) throw UnsupportedError("obstruction_profile needs pairwise distinct diagonal entries");
  const BiPoly P = continuant(p);
  const std::size_t D = static_cast<std::size_t>(std::max(P.deg_var(), 0));
  LiftState st = lift_subset(P, diagonal_roots(p), canonicalize(s, p.size()), D + 1);
  std::vector<Obstruction> out;
  for (std::size_t k = 1; k <= 2 * D; ++k) {
    Obstruction ob;
    ob.order = k;
    ob.coefficient = layer(t_layers(P), k) - convolution(st.F, st.G, k);
    ob.max_abs = ob.coefficient.max_abs_coefficient();
    out.push_back(std::move(ob));
  }
  return out;
}

}  // namespace jacobi
