#pragma once

#include "lcmlab/bigint.hpp"
#include "lcmlab/bounds.hpp"
#include "lcmlab/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace lcmlab {

enum class FamilyFilter { All, MonicOnly, NonzeroConstantTerm };

std::string_view to_string(FamilyFilter filter);
/// Throws std::invalid_argument for an unknown name.
FamilyFilter parse_family_filter(std::string_view name);

// Search space for a campaign: every polynomial with degree in
// [1, max_degree], coefficients in [0, coeff_max] and leading coefficient
// >= 1, crossed with n in [1, n_max].
struct SweepConfig {
  std::int64_t max_degree = 3;
  std::int64_t coeff_max = 5;
  std::int64_t n_max = 40;
  FamilyFilter family_filter = FamilyFilter::All;
  RangeMode range = RangeMode::Half;

  /// Throws std::invalid_argument if max_degree < 1, coeff_max < 0 or n_max < 1.
  void validate() const;
};

/// Visits the family in degree-major order, then lexicographically on
/// (a_s, ..., a_0).
void for_each_in_family(const SweepConfig& cfg, const std::function<void(const Poly&)>& visit);
std::vector<Poly> enumerate_family(const SweepConfig& cfg);
/// Size of the family without enumerating it.
std::uint64_t family_size(const SweepConfig& cfg);

struct ExceptionRecord {
  Poly f;
  std::int64_t n = 0;
  BigInt lcm_value;
  BigInt threshold;

  friend bool operator==(const ExceptionRecord&, const ExceptionRecord&) = default;
};

struct CampaignReport {
  SweepConfig config;
  std::uint64_t checked_count = 0;
  std::vector<ExceptionRecord> exceptions;
  double duration_s = 0.0;
  std::vector<std::string> notes;
};

/// Checks every (f, n) in family x [1, n_max] against the 2^n bound. The
/// grid is split across `threads` workers and merged back in enumeration
/// order, so the result only depends on cfg.
CampaignReport run_campaign(const SweepConfig& cfg, unsigned threads = 1);

/// The pairs the known exception set predicts inside cfg's search space:
/// f = x with n in {1, 2, 3, 4, 6}, and f = x^s (2 <= s <= max_degree) with
/// n = 1, in enumeration order.
struct ExpectedException {
  Poly f;
  std::int64_t n = 0;
};
std::vector<ExpectedException> expected_exceptions(const SweepConfig& cfg);

/// True iff report.exceptions is exactly expected_exceptions(report.config).
bool matches_expected(const CampaignReport& report);

// Batch drivers over the bound and identity property suites.

struct SuiteLimits {
  std::int64_t identity = 30;
  std::int64_t lemma22 = 64;
  std::uint64_t lemma_key_cases = 10'000;
  std::int64_t key1 = 100;
  std::int64_t key2 = 200;
  std::int64_t nair = 1000;
  std::int64_t hanson = 1000;
  std::int64_t half_range_ln = 1000;
  std::uint64_t seed = 20240611;
};

struct SuiteSummary {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  /// First failing case, empty when none.
  std::string first_counterexample;
  double duration_s = 0.0;

  bool passed() const { return failures == 0; }
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one named suite with `limit` as its size parameter: for lemma-key
/// it is the number of random cases, otherwise the upper end of the index
/// range. Throws std::invalid_argument for an unknown name or limit < 1.
SuiteSummary run_suite(std::string_view name, std::uint64_t limit, const SuiteLimits& base = {});

/// Identity suite over 1 <= m <= min(m_max, n), n <= n_max. A case fails if
/// either the symbolic or the pointwise check fails.
SuiteSummary run_identity_suite(std::int64_t m_max, std::int64_t n_max);

std::vector<SuiteSummary> run_lemma_suites(const SuiteLimits& limits = {});

}  // namespace lcmlab
