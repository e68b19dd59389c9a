#include "jacobi_cli/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "jacobi/errors.hpp"
#include "jacobi/exactpoly.hpp"
#include "jacobi/experiments.hpp"

namespace jacobi::cli {
namespace {

constexpr double kLimitContinuant = 10.0;
constexpr double kLimitMonodromy = 300.0;
constexpr double kLimitDegree8 = 3600.0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

BiPoly w_poly(const std::vector<std::vector<long>>& layers) {
  std::vector<UniPoly> out;
  for (const auto& row : layers) {
    std::vector<Rational> c(row.begin(), row.end());
    out.emplace_back(std::move(c));
  }
  return BiPoly(Form::W, std::move(out));
}

// Quadratic in lambda is irreducible over C iff its discriminant (a
// polynomial in w) is not a square, i.e. some root has odd multiplicity.
bool quadratic_absolutely_irreducible(const BiPoly& f) {
  const UniPoly disc = discriminant_in_lambda(f);
  if (disc.is_zero()) return false;
  const auto parts = squarefree_decomposition(disc);
  for (std::size_t k = 0; k < parts.size(); k += 2) {
    if (parts[k].degree() > 0) return true;
  }
  return false;
}

std::vector<std::size_t> degrees(const std::vector<BiPoly>& fs) {
  std::vector<std::size_t> d;
  for (const auto& f : fs) d.push_back(static_cast<std::size_t>(f.deg_lambda()));
  std::sort(d.begin(), d.end());
  return d;
}

CriterionResult c1(std::uint64_t seed) {
  CriterionResult r{1, "continuant equals the determinant oracle", false, "", 0};
  const auto t0 = Clock::now();
  std::size_t ok = 0;
  const std::size_t total = 200;
  for (std::size_t i = 0; i < total; ++i) {
    SampleRng rng(seed, 1000 + i);
    const auto n = static_cast<std::size_t>(rng.uniform(1, 7));
    std::vector<Rational> a, b;
    for (std::size_t k = 0; k < n; ++k) a.emplace_back(rng.uniform(-9, 9));
    for (std::size_t k = 0; k + 1 < n; ++k) b.emplace_back(rng.uniform(-9, 9));
    const JacobiPencil p(a, b);
    if (spectral_curve(p) == charpoly_oracle(p)) ++ok;
  }
  r.seconds = since(t0);
  r.passed = ok == total && r.seconds < kLimitContinuant;
  r.detail = fmt("%zu/%zu bit-exact, limit %.0f s", ok, total, kLimitContinuant);
  return r;
}

CriterionResult c2() {
  CriterionResult r{2, "scalar block a=(0,0,0,0), b=(1,2,3)", false, "", 0};
  const auto t0 = Clock::now();
  const JacobiPencil p({0, 0, 0, 0}, {1, 2, 3});
  // lambda^4 - 14 lambda^2 w^2 + 9 w^4, rows by w-power.
  const BiPoly expected = w_poly({{0, 0, 0, 0, 1}, {}, {0, 0, -14}, {}, {9}});
  const UniPoly q({Rational(9), Rational(0), Rational(-14), Rational(0), Rational(1)});
  const Certificate cert = scalar_block_certificate(p, {1, 4});
  const auto& data = std::get<ScalarBlockData>(cert.data);
  const bool curve_ok = spectral_curve(p) == expected;
  const bool q_ok = data.q == q;
  r.seconds = since(t0);
  r.passed = curve_ok && q_ok && cert.verified;
  r.detail = std::string("curve ") + (curve_ok ? "matches" : "differs") + ", q " + (q_ok ? "matches" : "differs") +
             ", certificate " + (cert.verified ? "verified" : "unverified");
  return r;
}

CriterionResult c3() {
  CriterionResult r{3, "degree-2 grid [-3,3]^3: reducible iff b1=0 or a1=a2", false, "", 0};
  const auto t0 = Clock::now();
  const CampaignReport rep = run_d2_grid();
  r.seconds = since(t0);
  r.passed = rep.samples.size() == 343 && rep.mismatches.empty();
  r.detail = fmt("%zu points, %zu reducible, %zu discrepancies", rep.samples.size(), rep.reducible_count(),
                 rep.mismatches.size());
  return r;
}

CriterionResult c4(std::uint64_t seed) {
  CriterionResult r{4, "degree-3 classification against the closed form", false, "", 0};
  const auto t0 = Clock::now();
  const CampaignReport rep = run_d3_classification(500, 9, seed);
  std::size_t by_hensel = 0, distinct = 0, inconclusive = rep.count("inconclusive");
  for (const auto& s : rep.samples) {
    if (s.pencil.distinct_diagonal()) {
      ++distinct;
      if (s.hensel) ++by_hensel;
    }
  }
  r.seconds = since(t0);
  r.passed = rep.mismatches.empty() && by_hensel == distinct && inconclusive == 0 && rep.samples.size() == 500;
  r.detail = fmt("500 samples, %zu reducible, %zu/%zu distinct-diagonal decided by Hensel, %zu discrepancies",
                 rep.reducible_count(), by_hensel, distinct, rep.mismatches.size());
  return r;
}

CriterionResult c5(std::uint64_t seed) {
  CriterionResult r{5, "consecutive spectral curves are coprime, n=2..8", false, "", 0};
  const auto t0 = Clock::now();
  const CampaignReport rep = run_coprime_sweep(8, 200, seed);
  r.seconds = since(t0);
  r.passed = rep.count("coprime") == 1400 && rep.mismatches.empty();
  r.detail = fmt("%zu/1400 coprime", rep.count("coprime"));
  return r;
}

CriterionResult c6(std::uint64_t seed) {
  CriterionResult r{6, "palindromic degree 8: product of corner determinants", false, "", 0};
  const auto t0 = Clock::now();
  std::size_t ok = 0;
  const std::size_t total = 100;
  for (std::size_t i = 0; i < total; ++i) {
    SampleRng rng(seed, 6000 + i);
    const JacobiPencil p = sample_palindromic(8, 9, rng);
    BiPoly prod = BiPoly::constant(Form::W, Rational(1));
    bool factors_odd = true;
    for (int sign : {1, -1}) {
      BiMatrix m(4, std::vector<BiPoly>(4, BiPoly(Form::W)));
      for (std::size_t k = 0; k < 4; ++k) {
        m[k][k] = BiPoly::lambda_plus(Form::W, p.a(k + 1));
        if (k + 1 < 4) m[k][k + 1] = m[k + 1][k] = BiPoly::variable(Form::W, p.b(k + 1));
      }
      m[3][3] = m[3][3] + BiPoly::variable(Form::W, Rational(sign) * p.b(4));
      const BiPoly f = determinant(m, Form::W);
      factors_odd = factors_odd && !f.is_even_in_var();
      prod = prod * f;
    }
    if (prod == spectral_curve(p) && prod.is_even_in_var() && factors_odd) ++ok;
  }
  r.seconds = since(t0);
  r.passed = ok == total;
  r.detail = fmt("%zu/%zu exact products, factors not even, product even", ok, total);
  return r;
}

CriterionResult c7(std::uint64_t seed) {
  CriterionResult r{7, "generic monodromy is the full symmetric group, n=2..6", false, "", 0};
  const auto t0 = Clock::now();
  std::size_t full = 0, certified_exceptions = 0, failures = 0, bps = 0;
  std::string first_failure;
  const std::size_t total = 100;
  for (std::size_t i = 0; i < total; ++i) {
    SampleRng rng(seed, 7000 + i);
    const auto n = static_cast<std::size_t>(rng.uniform(2, 6));
    const JacobiPencil p = sample_generic(n, 9, rng);
    try {
      const MonodromyReport rep = monodromy_group(p);
      bps += rep.branch_points.size();
      if (rep.group_order == factorial(n) && rep.orbits.size() == 1) {
        ++full;
        continue;
      }
    } catch (const TrackingError& e) {
      if (first_failure.empty()) first_failure = p.str() + ": " + e.what();
    }
    if (decide(p).status == DecisionStatus::Reducible) {
      ++certified_exceptions;
    } else {
      ++failures;
      if (first_failure.empty()) first_failure = p.str();
    }
  }
  r.seconds = since(t0);
  r.passed = failures == 0 && r.seconds < kLimitMonodromy;
  r.detail = fmt("%zu/%zu order n! with one orbit, %zu exceptions certified reducible, %zu unexplained, "
                 "%zu loops, limit %.0f s",
                 full, total, certified_exceptions, failures, bps, kLimitMonodromy);
  if (!first_failure.empty()) r.detail += "; first: " + first_failure;
  return r;
}

CriterionResult c8(std::uint64_t seed) {
  CriterionResult r{8, "monodromy orbit sizes equal exact factor degrees", false, "", 0};
  const auto t0 = Clock::now();
  std::size_t ok = 0;
  std::string first_failure;
  const std::size_t total = 50;
  for (std::size_t i = 0; i < total; ++i) {
    SampleRng rng(seed, 8000 + i);
    std::vector<std::size_t> exact;
    JacobiPencil p({0}, {});
    switch (i % 3) {
      case 0: {
        p = sample_constant_branch(3, 9, rng);
        exact = degrees(decide(p).factors_t);
        break;
      }
      case 1: {
        const auto n = static_cast<std::size_t>(rng.uniform(3, 5));
        const JacobiPencil g = sample_generic(n, 9, rng);
        std::vector<Rational> b = g.couplings();
        b[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2))] = Rational(0);
        p = JacobiPencil(g.diagonal(), b);
        exact = degrees(decide(p).factors_t);
        break;
      }
      default: {
        long x = rng.uniform(-9, 9), y = x;
        while (y == x) y = rng.uniform(-9, 9);
        const Rational b1(rng.nonzero(9)), b2(rng.nonzero(9));
        p = JacobiPencil({x, y, y, x}, {b1, b2, rng.uniform(0, 1) ? b1 : -b1});
        const auto cert = detect_palindrome(p, {1, 4});
        if (!cert) break;
        for (const auto& f : cert->factors) {
          if (quadratic_absolutely_irreducible(f)) {
            exact.push_back(2);
          } else {
            exact.insert(exact.end(), {1, 1});
          }
        }
        std::sort(exact.begin(), exact.end());
        break;
      }
    }
    try {
      const auto orbits = orbit_factor_degrees(monodromy_group(p));
      if (!exact.empty() && orbits == exact) {
        ++ok;
        continue;
      }
    } catch (const std::exception& e) {
      if (first_failure.empty()) first_failure = p.str() + ": " + e.what();
      continue;
    }
    if (first_failure.empty()) first_failure = p.str();
  }
  r.seconds = since(t0);
  r.passed = ok == total;
  r.detail = fmt("%zu/%zu instances agree", ok, total);
  if (!first_failure.empty()) r.detail += "; first failure: " + first_failure;
  return r;
}

CriterionResult c9() {
  CriterionResult r{9, "degree-8 scan, 1000 samples, 127 subsets each", false, "", 0};
  const auto t0 = Clock::now();
  const CampaignReport rep = run_degree8_scan(1000, 9, 1);
  std::size_t full_scans = 0, audited = 0;
  for (const auto& s : rep.samples) {
    if (s.hensel && (s.hensel->status == DecisionStatus::Reducible || s.hensel->subsets_tested == 127)) ++full_scans;
    if (s.reducible() && s.mechanisms && s.hensel && !s.note.empty()) ++audited;
  }
  const std::size_t hits = rep.reducible_count();
  r.seconds = since(t0);
  r.passed = rep.samples.size() == 1000 && full_scans == 1000 && audited == hits && rep.mismatches.empty() &&
             r.seconds < kLimitDegree8;
  r.detail = fmt("%zu irreducible, %zu reducible (all audited: %s), limit %.0f s", rep.count("irreducible"), hits,
                 audited == hits ? "yes" : "no", kLimitDegree8);
  for (const auto& n : rep.notes) r.detail += "; " + n;
  return r;
}

CriterionResult c10(std::uint64_t seed) {
  CriterionResult r{10, "repeated diagonals are refused by the Hensel decision", false, "", 0};
  const auto t0 = Clock::now();
  std::size_t refused = 0, total = 0;
  for (std::size_t i = 0; i < 40; ++i) {
    SampleRng rng(seed, 10000 + i);
    const auto n = static_cast<std::size_t>(rng.uniform(2, 8));
    const JacobiPencil p = i % 2 ? sample_palindromic(n, 9, rng) : sample_scalar(n, 9, rng);
    ++total;
    try {
      (void)decide(p);
    } catch (const UnsupportedError&) {
      ++refused;
    }
  }
  r.seconds = since(t0);
  r.passed = refused == total;
  r.detail = fmt("%zu/%zu scalar and palindromic inputs reported unsupported", refused, total);
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  auto push = [&](CriterionResult r) {
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  auto guarded = [&](int id, const char* title, auto fn) {
    try {
      push(fn());
    } catch (const std::exception& e) {
      push({id, title, false, std::string("exception: ") + e.what(), 0});
    }
  };
  guarded(1, "continuant equals the determinant oracle", [&] { return c1(seed); });
  guarded(2, "scalar block a=(0,0,0,0), b=(1,2,3)", [&] { return c2(); });
  guarded(3, "degree-2 grid", [&] { return c3(); });
  guarded(4, "degree-3 classification", [&] { return c4(seed); });
  guarded(5, "coprime sweep", [&] { return c5(seed); });
  guarded(6, "palindromic degree 8", [&] { return c6(seed); });
  guarded(7, "generic monodromy", [&] { return c7(seed); });
  guarded(8, "orbit/factor consistency", [&] { return c8(seed); });
  guarded(9, "degree-8 scan", [&] { return c9(); });
  guarded(10, "repeated diagonals refused", [&] { return c10(seed); });
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.detail;
  s << fmt(" (%.2f s)", r.seconds);
  return s.str();
}

}  // namespace jacobi::cli
