#include "jacobi/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "jacobi/errors.hpp"
#include "jacobi/exactpoly.hpp"

namespace jacobi {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<Rational> distinct_values(std::size_t count, int range, SampleRng& rng) {
  if (static_cast<long>(count) > 2L * range + 1) throw ValidationError("range too small for distinct entries");
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational x(rng.uniform(-range, range));
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

std::vector<Rational> nonzero_values(std::size_t count, int range, SampleRng& rng) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(rng.nonzero(range));
  return out;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + v[i].str();
  return s;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
  return s;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

bool closed_form_d3(const JacobiPencil& p) {
  const auto& c = p.squared_couplings();
  const Rational rel = (p.a(3) - p.a(2)) * c[0] + (p.a(1) - p.a(2)) * c[1];
  return rel.is_zero() || p.a(1) == p.a(3);
}

std::string mechanism_outcome(MechanismKind k) {
  return std::string("reducible-by-mechanism(") + mechanism_name(k) + ")";
}

}  // namespace

const char* sampler_name(Sampler s) {
  switch (s) {
    case Sampler::Generic:
      return "generic";
    case Sampler::Palindromic:
      return "palindromic";
    case Sampler::Scalar:
      return "scalar";
    case Sampler::ConstantBranchStratum:
      return "d3-constant-branch-stratum";
    case Sampler::Grid:
      return "grid";
  }
  return "?";
}

Sampler parse_sampler(const std::string& name) {
  for (Sampler s : {Sampler::Generic, Sampler::Palindromic, Sampler::Scalar, Sampler::ConstantBranchStratum,
                    Sampler::Grid}) {
    if (name == sampler_name(s)) return s;
  }
  throw ValidationError("unknown sampler '" + name + "'");
}

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t index)
    : state_(splitmix64(seed) ^ splitmix64(index * 0xd1b54a32d192ed03ULL + 1)) {}

std::uint64_t SampleRng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return splitmix64(state_);
}

long SampleRng::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

long SampleRng::nonzero(long range) {
  const long x = uniform(1, range);
  return uniform(0, 1) ? x : -x;
}

JacobiPencil sample_generic(std::size_t n, int range, SampleRng& rng) {
  std::vector<Rational> a = distinct_values(n, range, rng);
  std::vector<Rational> b = nonzero_values(n - 1, range, rng);
  return JacobiPencil(std::move(a), std::move(b));
}

JacobiPencil sample_palindromic(std::size_t n, int range, SampleRng& rng) {
  const std::size_t half = (n + 1) / 2;
  std::vector<Rational> head = distinct_values(half, range, rng);
  std::vector<Rational> a(n);
  for (std::size_t k = 0; k < half; ++k) a[k] = a[n - 1 - k] = head[k];
  std::vector<Rational> b(n - 1);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const Rational x(rng.nonzero(range));
    b[k] = x;
    b[n - 2 - k] = rng.uniform(0, 1) ? x : -x;
  }
  JacobiPencil p(std::move(a), std::move(b));
  if (!is_palindromic(p, {1, n})) throw std::logic_error("internal error: palindromic sampler left the stratum");
  return p;
}

JacobiPencil sample_scalar(std::size_t n, int range, SampleRng& rng) {
  const Rational a(rng.uniform(-range, range));
  return JacobiPencil(std::vector<Rational>(n, a), nonzero_values(n - 1, range, rng));
}

JacobiPencil sample_constant_branch(std::size_t n, int range, SampleRng& rng) {
  if (n % 2 == 0 || n < 3) {
    throw UnsupportedError("connected pencils of even size have no constant branch");
  }
  const std::size_t j = (n + 1) / 2;
  while (true) {
    const long rr = rng.uniform(2, 3) * (rng.uniform(0, 1) ? 1 : -1);
    const Rational r(rr);
    const Rational r2 = r * r;
    std::vector<Rational> left = distinct_values(j, range, rng);  // a_1..a_j
    std::vector<Rational> a(n);
    for (std::size_t k = 0; k < j; ++k) a[k] = left[k];
    const Rational& mid = left[j - 1];
    for (std::size_t k = 1; k < j; ++k) a[j - 1 + k] = mid - r2 * (left[j - 1 - k] - mid);

    std::vector<Rational> b(n - 1);
    std::vector<Rational> bl = nonzero_values(j - 1, range, rng);  // b_1..b_{j-1}
    for (std::size_t k = 0; k + 1 < j; ++k) b[k] = bl[k];
    b[j - 1] = r * b[j - 2];
    for (std::size_t k = 1; k + 1 < j; ++k) b[j - 1 + k] = r2 * b[j - 2 - k];

    JacobiPencil p(std::move(a), std::move(b));
    if (!p.distinct_diagonal()) continue;
    const auto hits = detect_constant_branches(p, {1, n});
    if (std::find(hits.begin(), hits.end(), j) == hits.end()) {
      throw std::logic_error("internal error: constant-branch sampler left the stratum");
    }
    return p;
  }
}

JacobiPencil draw(const Campaign& c, SampleRng& rng) {
  switch (c.sampler) {
    case Sampler::Generic:
      return sample_generic(c.n, c.range, rng);
    case Sampler::Palindromic:
      return sample_palindromic(c.n, c.range, rng);
    case Sampler::Scalar:
      return sample_scalar(c.n, c.range, rng);
    case Sampler::ConstantBranchStratum:
      return sample_constant_branch(c.n, c.range, rng);
    case Sampler::Grid:
      break;
  }
  throw ValidationError("the grid sampler is only available through the d2 grid campaign");
}

std::size_t CampaignReport::count(const std::string& outcome) const {
  auto it = counts.find(outcome);
  return it == counts.end() ? 0 : it->second;
}

std::size_t CampaignReport::reducible_count() const {
  std::size_t total = 0;
  for (const auto& [k, v] : counts) {
    if (k.rfind("reducible", 0) == 0) total += v;
  }
  return total;
}

void CampaignReport::add(SampleRecord rec) {
  ++counts[rec.outcome];
  if (rec.outcome != "irreducible" && rec.outcome != "coprime") witnesses.push_back(samples.size());
  samples.push_back(std::move(rec));
}

std::string CampaignReport::to_csv() const {
  std::ostringstream out;
  out << "index,n,a,b,outcome,method,factor_degrees,note\n";
  for (const auto& s : samples) {
    out << s.index << ',' << s.pencil.size() << ',' << join(s.pencil.diagonal()) << ','
        << join(s.pencil.couplings()) << ',' << s.outcome << ',' << s.method << ',' << join(s.factor_degrees)
        << ',' << quoted(s.note) << '\n';
  }
  return out.str();
}

std::string audit_strata(const JacobiPencil& p) {
  std::vector<std::string> hits;
  for (std::size_t i : detect_cuts(p)) hits.push_back("cut(b" + std::to_string(i) + "=0)");
  for (std::size_t i = 1; i <= p.size(); ++i) {
    for (std::size_t j = i + 1; j <= p.size(); ++j) {
      if (p.a(i) == p.a(j)) hits.push_back("coincidence(a" + std::to_string(i) + "=a" + std::to_string(j) + ")");
    }
  }
  for (const auto& blk : connected_components(p)) {
    for (std::size_t j : detect_constant_branches(p, blk)) hits.push_back("constant-branch(" + std::to_string(j) + ")");
    if (is_palindromic(p, blk)) {
      hits.push_back("palindromic(" + std::to_string(blk.r) + ".." + std::to_string(blk.s) + ")");
    }
  }
  if (hits.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < hits.size(); ++i) s += (i ? " " : "") + hits[i];
  return s;
}

SampleRecord classify(const JacobiPencil& p) {
  SampleRecord rec;
  rec.pencil = p;
  MechanismReport mech = apply_all(p);
  const bool by_mechanism = mech.reducible();
  if (by_mechanism) {
    rec.outcome = mechanism_outcome(mech.certificates.front().kind);
    rec.method = "mechanisms";
    for (const auto& f : mech.residual_factors) rec.factor_degrees.push_back(static_cast<std::size_t>(f.deg_lambda()));
  }

  if (p.distinct_diagonal()) {
    Decision d = decide(p);
    rec.factor_degrees.clear();
    for (const auto& f : d.factors_t) rec.factor_degrees.push_back(static_cast<std::size_t>(f.deg_lambda()));
    const bool split = d.status == DecisionStatus::Reducible;
    if (by_mechanism) {
      rec.method = "mechanisms+hensel";
      if (!split) rec.note = "conflict: certified mechanism but the Hensel decision is irreducible";
    } else if (split) {
      rec.outcome = "reducible-unexplained";
      rec.method = "hensel";
      rec.note = "audit: " + audit_strata(p);
    } else {
      rec.outcome = "irreducible";
      rec.method = "hensel";
    }
    rec.hensel = std::move(d);
  } else if (!by_mechanism) {
    rec.method = "monodromy";
    try {
      MonodromyReport r = monodromy_group(p);
      rec.orbit_sizes = orbit_factor_degrees(r);
      if (r.orbits.size() == 1) {
        rec.outcome = "irreducible";
        rec.factor_degrees = {p.size()};
      } else {
        rec.outcome = "inconclusive";
        rec.factor_degrees = *rec.orbit_sizes;
        rec.note = "several monodromy orbits without an exact certificate";
      }
    } catch (const TrackingError& e) {
      rec.outcome = "inconclusive";
      rec.note = e.what();
    } catch (const UnsupportedError& e) {
      rec.outcome = "inconclusive";
      rec.note = e.what();
    }
  }
  std::sort(rec.factor_degrees.begin(), rec.factor_degrees.end());
  rec.mechanisms = std::move(mech);
  return rec;
}

CampaignReport run_campaign(const Campaign& c) {
  Stopwatch clock;
  CampaignReport rep;
  rep.name = c.name.empty() ? std::string(sampler_name(c.sampler)) + "-n" + std::to_string(c.n) : c.name;
  for (std::size_t i = 0; i < c.samples; ++i) {
    SampleRng rng(c.seed, i);
    SampleRecord rec = classify(draw(c, rng));
    rec.index = i;
    if (rec.note.rfind("conflict", 0) == 0) rep.mismatches.push_back("sample " + std::to_string(i) + ": " + rec.note);
    rep.add(std::move(rec));
  }
  rep.runtime_seconds = clock.seconds();
  return rep;
}

CampaignReport run_generic(std::size_t n, std::size_t samples, int range, std::uint64_t seed) {
  return run_campaign({"generic-n" + std::to_string(n), n, Sampler::Generic, range, samples, seed});
}

CampaignReport run_degree8_scan(std::size_t samples, int range, std::uint64_t seed, Sampler sampler) {
  CampaignReport rep =
      run_campaign({std::string("degree8-") + sampler_name(sampler), 8, sampler, range, samples, seed});
  for (std::size_t w : rep.witnesses) {
    const auto& s = rep.samples[w];
    if (s.outcome == "reducible-unexplained") {
      rep.notes.push_back("witness sample " + std::to_string(s.index) + " " + s.pencil.str() + " " + s.note);
    }
  }
  return rep;
}

CampaignReport run_d2_grid() {
  Stopwatch clock;
  CampaignReport rep;
  rep.name = "d2-grid";
  std::size_t index = 0;
  for (int a1 = -3; a1 <= 3; ++a1) {
    for (int a2 = -3; a2 <= 3; ++a2) {
      for (int b1 = -3; b1 <= 3; ++b1) {
        SampleRecord rec = classify(JacobiPencil({a1, a2}, {b1}));
        rec.index = index++;
        const bool expected = b1 == 0 || a1 == a2;
        if (rec.reducible() != expected) {
          rep.mismatches.push_back(rec.pencil.str() + ": classified " + rec.outcome);
        }
        rep.add(std::move(rec));
      }
    }
  }
  rep.runtime_seconds = clock.seconds();
  return rep;
}

CampaignReport run_coprime_sweep(std::size_t n_max, std::size_t samples, std::uint64_t seed, int range) {
  Stopwatch clock;
  CampaignReport rep;
  rep.name = "coprime-sweep";
  std::size_t index = 0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    for (std::size_t i = 0; i < samples; ++i) {
      SampleRng rng(seed, (static_cast<std::uint64_t>(n) << 32) + i);
      std::vector<Rational> a;
      for (std::size_t k = 0; k < n; ++k) a.emplace_back(rng.uniform(-range, range));
      JacobiPencil p(std::move(a), nonzero_values(n - 1, range, rng));
      const BiPoly g = gcd_in_lambda(spectral_curve(p), spectral_curve(extract_block(p, 1, n - 1)));
      SampleRecord rec;
      rec.index = index++;
      rec.pencil = p;
      rec.method = "gcd";
      rec.outcome = g.is_constant() ? "coprime" : "not-coprime";
      if (!g.is_constant()) {
        rec.note = "gcd " + g.str();
        rep.mismatches.push_back(p.str() + ": gcd " + g.str());
      }
      rep.add(std::move(rec));
    }
  }
  rep.runtime_seconds = clock.seconds();
  return rep;
}

CampaignReport run_codim_probe(std::size_t n, MechanismKind mechanism, std::size_t samples, std::uint64_t seed,
                               int range) {
  if (n < 4 || n > 8) throw ValidationError("codimension probes take n in 4..8");
  Sampler sampler;
  switch (mechanism) {
    case MechanismKind::Palindrome:
      sampler = Sampler::Palindromic;
      break;
    case MechanismKind::ScalarBlock:
      sampler = Sampler::Scalar;
      break;
    case MechanismKind::ConstantBranch:
      sampler = Sampler::ConstantBranchStratum;
      break;
    default:
      throw ValidationError("codimension probes cover Palindrome, ScalarBlock and ConstantBranch");
  }
  Stopwatch clock;
  CampaignReport rep;
  rep.name = std::string("codim-") + mechanism_name(mechanism) + "-n" + std::to_string(n);
  if (sampler == Sampler::ConstantBranchStratum && n % 2 == 0) {
    rep.notes.push_back("no connected pencil of even size has a constant branch: the stratum is empty");
    return rep;
  }
  const Campaign c{rep.name, n, sampler, range, samples, seed};
  std::size_t on_reducible = 0, off_irreducible = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    SampleRng rng(seed, i);
    const JacobiPencil on = draw(c, rng);
    SampleRecord rec = classify(on);
    rec.index = 2 * i;
    rec.note = "on stratum" + (rec.note.empty() ? "" : "; " + rec.note);
    if (rec.reducible()) {
      ++on_reducible;
    } else {
      rep.mismatches.push_back("on-stratum sample not reducible: " + on.str() + " (" + rec.outcome + ")");
    }
    rep.add(std::move(rec));

    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
    std::vector<Rational> a = on.diagonal();
    a[k - 1] += Rational(1);
    SampleRecord off = classify(JacobiPencil(std::move(a), on.couplings()));
    off.index = 2 * i + 1;
    off.note = "a" + std::to_string(k) + " + 1" + (off.note.empty() ? "" : "; " + off.note);
    if (off.outcome == "irreducible") ++off_irreducible;
    rep.add(std::move(off));
  }
  rep.notes.push_back("on stratum reducible: " + std::to_string(on_reducible) + "/" + std::to_string(samples));
  rep.notes.push_back("perturbed irreducible: " + std::to_string(off_irreducible) + "/" + std::to_string(samples));
  rep.notes.push_back("sampling gives absence-of-counterexample evidence only, not a codimension bound");
  rep.runtime_seconds = clock.seconds();
  return rep;
}

CampaignReport run_d3_classification(std::size_t samples, int range, std::uint64_t seed) {
  Stopwatch clock;
  CampaignReport rep;
  rep.name = "d3-classification";
  for (std::size_t i = 0; i < samples; ++i) {
    SampleRng rng(seed, i);
    JacobiPencil p = [&] {
      switch (i % 3) {
        case 0:
          return sample_generic(3, range, rng);
        case 1:
          return sample_constant_branch(3, range, rng);
        default: {
          const Rational a1(rng.uniform(-range, range));
          const Rational a2(rng.uniform(-range, range));
          return JacobiPencil({a1, a2, a1}, nonzero_values(2, range, rng));
        }
      }
    }();
    SampleRecord rec = classify(p);
    rec.index = i;
    const bool expected = closed_form_d3(p);
    if (rec.reducible() != expected) {
      rep.mismatches.push_back(p.str() + ": classified " + rec.outcome + ", closed form says " +
                               (expected ? "reducible" : "irreducible"));
    }
    rep.add(std::move(rec));
  }
  rep.runtime_seconds = clock.seconds();
  return rep;
}

}  // namespace jacobi
