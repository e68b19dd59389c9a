#include "jacobi/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "jacobi/errors.hpp"
#include "jacobi/exactpoly.hpp"
#include "numeric_roots.hpp"

namespace jacobi {
namespace {

using detail::cplx;

constexpr double kMinStep = 1e-6;

bool sheet_less(const cplx& x, const cplx& y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

// chi_n(lambda, w) with double coefficients: coef[k][j] multiplies lambda^k w^j.
struct NumericCurve {
  std::vector<std::vector<double>> coef;

  explicit NumericCurve(const JacobiPencil& p) {
    for (const auto& c : spectral_curve(p).lambda_major()) {
      std::vector<double> row;
      for (const auto& x : c.coefficients()) row.push_back(x.to_double());
      coef.push_back(std::move(row));
    }
  }

  std::vector<cplx> roots_at(cplx w) const {
    std::vector<cplx> c;
    for (const auto& row : coef) {
      cplx acc = 0;
      for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * w + *it;
      c.push_back(acc);
    }
    std::vector<cplx> r = detail::polynomial_roots(c);
    return r;
  }
};

double min_separation(const std::vector<cplx>& r) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) d = std::min(d, std::abs(r[i] - r[j]));
  }
  return d;
}

// Nearest-neighbour assignment of `to` onto `from`; empty if not injective.
std::vector<std::size_t> match(const std::vector<cplx>& from, const std::vector<cplx>& to) {
  std::vector<std::size_t> out(from.size());
  std::vector<bool> used(to.size(), false);
  for (std::size_t i = 0; i < from.size(); ++i) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < to.size(); ++j) {
      if (std::abs(to[j] - from[i]) < std::abs(to[best] - from[i])) best = j;
    }
    if (used[best]) return {};
    used[best] = true;
    out[i] = best;
  }
  return out;
}

// Straight segment or circular arc, parametrised by s in [0, 1].
struct Piece {
  bool arc = false;
  cplx a, b;  // segment end points
  cplx center;
  double radius = 0, theta0 = 0, theta1 = 0;

  cplx at(double s) const {
    if (!arc) return a + (b - a) * s;
    return center + std::polar(radius, theta0 + (theta1 - theta0) * s);
  }
};

// Argument in [0, 2 pi).
double heading(cplx z) {
  const double t = std::arg(z);
  return t < 0.0 ? t + 2.0 * std::numbers::pi : t;
}

Piece segment(cplx a, cplx b) { return Piece{false, a, b, {}, 0, 0, 0}; }

Piece circle(cplx center, double radius, double theta0, double sweep) {
  return Piece{true, {}, {}, center, radius, theta0, theta0 + sweep};
}

class Tracker {
 public:
  explicit Tracker(const NumericCurve& curve) : curve_(curve) {}

  // Continue `roots` (at the start of the path) along the pieces; returns
  // the roots at the end in the same order.
  std::vector<cplx> follow(const std::vector<Piece>& path, std::vector<cplx> roots) {
    for (const auto& piece : path) roots = follow_piece(piece, std::move(roots));
    return roots;
  }

  double worst_ratio() const { return worst_ratio_; }

 private:
  std::vector<cplx> follow_piece(const Piece& piece, std::vector<cplx> roots) {
    double s = 0.0;
    double h = 1.0 / 32.0;
    while (s < 1.0) {
      const double step = std::min(h, 1.0 - s);
      std::vector<cplx> next = curve_.roots_at(piece.at(s + step));
      const double sep = std::min(min_separation(roots), min_separation(next));
      std::vector<std::size_t> m = match(roots, next);
      double moved = 0.0;
      if (!m.empty()) {
        for (std::size_t i = 0; i < roots.size(); ++i) moved = std::max(moved, std::abs(next[m[i]] - roots[i]));
      }
      if (m.empty() || !(moved < sep / 3.0)) {
        h = step / 2.0;
        if (h < kMinStep) {
          throw TrackingError("root continuation could not certify a step near w = " +
                              std::to_string(piece.at(s).real()) + " + " + std::to_string(piece.at(s).imag()) + "i");
        }
        continue;
      }
      if (moved > 0.0) worst_ratio_ = std::min(worst_ratio_, sep / moved);
      std::vector<cplx> ordered(roots.size());
      for (std::size_t i = 0; i < roots.size(); ++i) ordered[i] = next[m[i]];
      roots = std::move(ordered);
      s += step;
      h = std::min(2.0 * step, 0.25);
    }
    return roots;
  }

  const NumericCurve& curve_;
  double worst_ratio_ = std::numeric_limits<double>::infinity();
};

struct Geometry {
  cplx base;
  std::vector<cplx> points;
  std::vector<double> radii;
};

Geometry geometry(const std::vector<cplx>& bps) {
  Geometry g;
  g.points = bps;
  double far = 0.0;
  for (const auto& c : bps) far = std::max(far, std::abs(c));
  g.base = cplx(2.0 * (1.0 + far), 0.0);
  for (std::size_t i = 0; i < bps.size(); ++i) {
    double d = std::abs(bps[i] - g.base);
    for (std::size_t j = 0; j < bps.size(); ++j) {
      if (j != i) d = std::min(d, std::abs(bps[i] - bps[j]));
    }
    g.radii.push_back(std::max(d / 3.0, 1e-6));
  }
  return g;
}

// Segment from a to b that steps around the loop circle of any branch point
// it would pass within r_j / 4 of, keeping that point on its left.
// `skip` excludes the branch point the path is heading for.
std::vector<Piece> detoured_segment(cplx a, cplx b, const Geometry& g, std::size_t skip, bool& detoured) {
  struct Hit {
    double along;
    std::size_t j;
  };
  const cplx dir = b - a;
  const double len = std::abs(dir);
  const cplx u = dir / len;
  std::vector<Hit> hits;
  for (std::size_t j = 0; j < g.points.size(); ++j) {
    if (j == skip) continue;
    const cplx rel = (g.points[j] - a) / u;  // along-track and cross-track coordinates
    if (std::abs(rel.imag()) < 0.25 * g.radii[j] && rel.real() > 0.0 && rel.real() < len) hits.push_back({rel.real(), j});
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) { return x.along < y.along; });
  std::vector<Piece> out;
  cplx cur = a;
  for (const auto& hit : hits) {
    detoured = true;
    const cplx c = g.points[hit.j];
    const double rho = g.radii[hit.j];
    const cplx rel = (c - a) / u;
    const double half = std::sqrt(rho * rho - rel.imag() * rel.imag());
    const cplx entry = a + u * (rel.real() - half);
    const cplx exit = a + u * (rel.real() + half);
    out.push_back(segment(cur, entry));
    const double t0 = std::arg(entry - c);
    double t1 = std::arg(exit - c);
    // Keep c on the left: travel counterclockwise from entry to exit.
    while (t1 <= t0) t1 += 2.0 * std::numbers::pi;
    out.push_back(circle(c, rho, t0, t1 - t0));
    cur = exit;
  }
  out.push_back(segment(cur, b));
  return out;
}

std::vector<Piece> reversed(const std::vector<Piece>& path) {
  std::vector<Piece> out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    Piece p = *it;
    std::swap(p.a, p.b);
    std::swap(p.theta0, p.theta1);
    out.push_back(p);
  }
  return out;
}

// Lasso: out to the circle, once around counterclockwise, back.
std::vector<Piece> lasso(const Geometry& g, cplx center, double radius, std::size_t skip, bool& detoured) {
  const cplx u = (g.base - center) / std::abs(g.base - center);
  const cplx start = center + radius * u;
  std::vector<Piece> out = detoured_segment(g.base, start, g, skip, detoured);
  std::vector<Piece> back = reversed(out);
  out.push_back(circle(center, radius, std::arg(u), 2.0 * std::numbers::pi));
  out.insert(out.end(), back.begin(), back.end());
  return out;
}

Permutation induced(const std::vector<cplx>& start, const std::vector<cplx>& end) {
  std::vector<std::size_t> m = match(end, start);
  const double sep = min_separation(start);
  if (m.empty()) throw TrackingError("loop end points do not match the starting sheets");
  for (std::size_t i = 0; i < end.size(); ++i) {
    if (!(std::abs(end[i] - start[m[i]]) < sep / 3.0)) throw TrackingError("loop did not close on a sheet");
  }
  return m;
}

std::vector<cplx> sorted_roots(const NumericCurve& curve, cplx w) {
  std::vector<cplx> r = curve.roots_at(w);
  std::sort(r.begin(), r.end(), sheet_less);
  return r;
}

std::optional<std::size_t> closure_size(const std::vector<Permutation>& gens, std::size_t n) {
  if (n > 8) return std::nullopt;
  auto encode = [](const Permutation& p) {
    std::uint64_t code = 0;
    for (std::size_t v : p) code = code * 8 + v;
    return code;
  };
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::uint64_t> seen{encode(id)};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Permutation y = compose(x, g);
        if (seen.insert(encode(y)).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

std::vector<std::vector<std::size_t>> orbit_partition(const std::vector<Permutation>& gens, std::size_t n) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i) parent[find(i)] = find(g[i]);
  }
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(orbits.size());
      orbits.emplace_back();
    }
    orbits[static_cast<std::size_t>(slot[r])].push_back(i + 1);
  }
  return orbits;
}

void check_curve(const JacobiPencil& p) {
  if (p.size() < 2) throw UnsupportedError("monodromy needs n >= 2");
  const BiPoly P = continuant(p);
  if (!gcd_in_lambda(P, P.derivative_lambda()).is_constant()) {
    throw UnsupportedError("spectral curve has a repeated factor; factor it before computing monodromy");
  }
}

}  // namespace

Permutation compose(const Permutation& first, const Permutation& then) {
  Permutation out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = then[first[i]];
  return out;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

std::vector<ComplexApprox> branch_points(const JacobiPencil& p) {
  check_curve(p);
  const UniPoly disc = discriminant_in_lambda(continuant(p));
  UniPoly core = divmod(disc, gcd(disc, disc.derivative())).quotient.monic();
  std::vector<cplx> out;
  if (core[0].is_zero()) {
    out.emplace_back(0.0, 0.0);
    core = divmod(core, UniPoly::monomial(Rational(1), 1)).quotient;
  }
  std::vector<cplx> c;
  for (const auto& x : core.coefficients()) c.emplace_back(x.to_double(), 0.0);
  for (const auto& t : detail::polynomial_roots(c)) {
    const cplx w = std::sqrt(t);
    out.push_back(w);
    out.push_back(-w);
  }
  double scale = 1.0;
  for (const auto& w : out) scale = std::max(scale, std::abs(w));
  std::sort(out.begin(), out.end(), sheet_less);
  std::vector<cplx> unique;
  for (const auto& w : out) {
    bool dup = false;
    for (const auto& u : unique) dup = dup || std::abs(u - w) < 1e-8 * scale;
    if (!dup) unique.push_back(w);
  }
  // The squarefree discriminant has exactly this many distinct roots in w.
  if (unique.size() != out.size()) {
    throw TrackingError("discriminant roots could not be separated numerically");
  }
  return unique;
}

Permutation track_loop(const JacobiPencil& p, ComplexApprox center, double radius) {
  const auto bps = branch_points(p);
  for (const auto& c : bps) {
    if (std::abs(std::abs(c - center) - radius) < 0.1 * radius) {
      throw std::invalid_argument("loop passes within 0.1 * radius of a branch point");
    }
  }
  const Geometry g = geometry(bps);
  const NumericCurve curve(p);
  const std::vector<cplx> start = sorted_roots(curve, g.base);
  bool detoured = false;
  Tracker tracker(curve);
  return induced(start, tracker.follow(lasso(g, center, radius, bps.size(), detoured), start));
}

MonodromyReport monodromy_group(const JacobiPencil& p) {
  const std::size_t n = p.size();
  MonodromyReport rep;
  rep.branch_points = branch_points(p);
  const Geometry g = geometry(rep.branch_points);
  rep.base_point = g.base;
  rep.radii = g.radii;

  const NumericCurve curve(p);
  const std::vector<cplx> start = sorted_roots(curve, g.base);
  Tracker tracker(curve);
  bool detoured = false;
  std::vector<Permutation> sheet_perms;
  for (std::size_t k = 0; k < g.points.size(); ++k) {
    sheet_perms.push_back(induced(start, tracker.follow(lasso(g, g.points[k], g.radii[k], k, detoured), start)));
  }
  const Permutation inf = induced(start, tracker.follow({circle(0.0, g.base.real(), 0.0, 2.0 * std::numbers::pi)}, start));

  // Sheet names.
  rep.sheet_labels.resize(n);
  std::iota(rep.sheet_labels.begin(), rep.sheet_labels.end(), 1);
  if (p.connected() && p.distinct_diagonal()) {
    std::vector<std::size_t> sites(n);
    std::iota(sites.begin(), sites.end(), 1);
    std::sort(sites.begin(), sites.end(), [&](std::size_t i, std::size_t j) { return -p.a(i) < -p.a(j); });
    rep.sheet_labels = sites;
    rep.labels_are_sites = true;
  }
  auto relabel = [&](const Permutation& s) {
    Permutation out(n);
    for (std::size_t k = 0; k < n; ++k) out[rep.sheet_labels[k] - 1] = rep.sheet_labels[s[k]] - 1;
    return out;
  };
  for (const auto& s : sheet_perms) rep.permutations.push_back(relabel(s));
  rep.infinity = relabel(inf);

  if (!detoured) {
    // Loops ordered by the direction in which they leave the base point.
    std::vector<std::size_t> order(g.points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      return heading(g.points[i] - g.base) > heading(g.points[j] - g.base);
    });
    Permutation prod(n);
    std::iota(prod.begin(), prod.end(), 0);
    for (std::size_t k : order) prod = compose(prod, rep.permutations[k]);
    rep.infinity_consistent = prod == rep.infinity;
  }

  rep.group_order = closure_size(rep.permutations, n);
  rep.orbits = orbit_partition(rep.permutations, n);
  rep.certified_step = tracker.worst_ratio();
  return rep;
}

std::vector<std::size_t> orbit_factor_degrees(const MonodromyReport& r) {
  std::vector<std::size_t> out;
  for (const auto& o : r.orbits) out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace jacobi
