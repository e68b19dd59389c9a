#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jacobi/hensel.hpp"
#include "jacobi/mechanisms.hpp"
#include "jacobi/monodromy.hpp"
#include "jacobi/pencil.hpp"

namespace jacobi {

enum class Sampler { Generic, Palindromic, Scalar, ConstantBranchStratum, Grid };

const char* sampler_name(Sampler s);
/// Inverse of sampler_name; throws ValidationError.
Sampler parse_sampler(const std::string& name);

struct Campaign {
  std::string name;
  std::size_t n = 4;
  Sampler sampler = Sampler::Generic;
  int range = 9;  // entries drawn from [-range, range]
  std::size_t samples = 100;
  std::uint64_t seed = 1;
};

/// Per-sample generator: the stream for sample `index` depends only on
/// (seed, index), so samples can be produced in any order.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t index);
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  long nonzero(long range);

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

/// Random connected pencil with pairwise distinct diagonal in [-R, R].
JacobiPencil sample_generic(std::size_t n, int range, SampleRng& rng);
/// Reversal-symmetric connected pencil: distinct entries on the first half,
/// mirrored diagonal, mirrored couplings with independent random signs.
JacobiPencil sample_palindromic(std::size_t n, int range, SampleRng& rng);
/// a_1 = ... = a_n, couplings nonzero.
JacobiPencil sample_scalar(std::size_t n, int range, SampleRng& rng);
/// Odd n: connected pencil with distinct diagonal carrying the constant
/// branch lambda = -a_j at the middle site j, built as a scaled anti-mirror
/// around j: a_{j+k} - a_j = -r^2 (a_{j-k} - a_j), b_j = r b_{j-1},
/// b_{j+k} = r^2 b_{j-k-1}, with r in {+-2, +-3}. For n = 3 this is the
/// stratum (a_3 - a_2) b_1^2 + (a_1 - a_2) b_2^2 = 0. The branch is checked
/// exactly before returning. Throws UnsupportedError for even n, where a
/// connected pencil has no constant branch.
JacobiPencil sample_constant_branch(std::size_t n, int range, SampleRng& rng);
JacobiPencil draw(const Campaign& c, SampleRng& rng);

struct SampleRecord {
  std::size_t index = 0;
  JacobiPencil pencil{{Rational(0)}, {}};
  /// irreducible, reducible-by-mechanism(<Kind>), reducible-unexplained,
  /// inconclusive, coprime, not-coprime
  std::string outcome;
  std::string method;  // mechanisms, hensel, monodromy, gcd
  std::vector<std::size_t> factor_degrees;  // lambda-degrees of the exact factors over Q, sorted
  std::string note;
  std::optional<MechanismReport> mechanisms;
  std::optional<Decision> hensel;
  std::optional<std::vector<std::size_t>> orbit_sizes;

  bool reducible() const { return outcome.rfind("reducible", 0) == 0; }
};

struct CampaignReport {
  std::string name;
  std::map<std::string, std::size_t> counts;
  std::vector<SampleRecord> samples;
  std::vector<std::size_t> witnesses;  // indices of samples that are not irreducible/coprime
  std::vector<std::string> mismatches;
  std::vector<std::string> notes;
  double runtime_seconds = 0.0;

  std::size_t count(const std::string& outcome) const;
  std::size_t reducible_count() const;
  /// Header plus one row per sample; lists are ';'-separated.
  std::string to_csv() const;
  void add(SampleRecord rec);
};

/// Outcome of one pencil: mechanisms first; the Hensel decision when the
/// diagonal is distinct (a Hensel split without a mechanism is
/// reducible-unexplained); otherwise monodromy orbits, where one orbit
/// means irreducible and several without a certificate mean inconclusive.
SampleRecord classify(const JacobiPencil& p);

/// Which known strata a pencil lies on, for auditing reducible hits.
std::string audit_strata(const JacobiPencil& p);

CampaignReport run_campaign(const Campaign& c);
CampaignReport run_generic(std::size_t n, std::size_t samples, int range, std::uint64_t seed);
CampaignReport run_degree8_scan(std::size_t samples, int range, std::uint64_t seed,
                                Sampler sampler = Sampler::Generic);
/// All (a_1, a_2, b_1) in [-3, 3]^3 against: reducible iff b_1 = 0 or a_1 = a_2.
CampaignReport run_d2_grid();
/// gcd(chi_n, chi_{n-1}) = 1 for connected samples, n = 2..n_max.
CampaignReport run_coprime_sweep(std::size_t n_max, std::size_t samples, std::uint64_t seed, int range = 9);
/// Points on a stratum (Palindrome, ScalarBlock or ConstantBranch) and the
/// same points with one diagonal entry moved by 1.
CampaignReport run_codim_probe(std::size_t n, MechanismKind mechanism, std::size_t samples, std::uint64_t seed,
                               int range = 9);
/// Connected n = 3 samples (a third generic, a third on the constant-branch
/// stratum, a third with a_1 = a_3) against the closed form: reducible iff
/// (a_3 - a_2) b_1^2 + (a_1 - a_2) b_2^2 = 0 or a_1 = a_3.
CampaignReport run_d3_classification(std::size_t samples, int range, std::uint64_t seed);

}  // namespace jacobi
