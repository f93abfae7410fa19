#include "lcmlab/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace lcmlab {

std::string_view to_string(FamilyFilter filter) {
  switch (filter) {
    case FamilyFilter::All: return "all";
    case FamilyFilter::MonicOnly: return "monic";
    case FamilyFilter::NonzeroConstantTerm: return "nonzero-constant";
  }
  return "unknown";
}

FamilyFilter parse_family_filter(std::string_view name) {
  if (name == "all") return FamilyFilter::All;
  if (name == "monic") return FamilyFilter::MonicOnly;
  if (name == "nonzero-constant") return FamilyFilter::NonzeroConstantTerm;
  throw std::invalid_argument("unknown family filter: '" + std::string(name) + "'");
}

void SweepConfig::validate() const {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  if (coeff_max < 0) throw std::invalid_argument("coeff_max must be >= 0");
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
}

namespace {

bool passes_filter(FamilyFilter filter, const std::vector<std::int64_t>& high_first) {
  switch (filter) {
    case FamilyFilter::All: return true;
    case FamilyFilter::MonicOnly: return high_first.front() == 1;
    case FamilyFilter::NonzeroConstantTerm: return high_first.back() != 0;
  }
  return false;
}

}  // namespace

void for_each_in_family(const SweepConfig& cfg, const std::function<void(const Poly&)>& visit) {
  cfg.validate();
  for (std::int64_t degree = 1; degree <= cfg.max_degree; ++degree) {
    // Odometer over (a_s, ..., a_0), rightmost digit fastest.
    std::vector<std::int64_t> digits(static_cast<std::size_t>(degree + 1), 0);
    digits.front() = 1;
    if (digits.front() > cfg.coeff_max) continue;
    while (true) {
      if (passes_filter(cfg.family_filter, digits)) {
        std::vector<BigInt> coeffs(digits.rbegin(), digits.rend());
        visit(Poly(std::move(coeffs)));
      }
      std::size_t pos = digits.size();
      while (pos > 0 && digits[pos - 1] == cfg.coeff_max) {
        digits[pos - 1] = pos == 1 ? 1 : 0;
        --pos;
      }
      if (pos == 0) break;
      ++digits[pos - 1];
    }
  }
}

std::vector<Poly> enumerate_family(const SweepConfig& cfg) {
  std::vector<Poly> out;
  for_each_in_family(cfg, [&](const Poly& p) { out.push_back(p); });
  return out;
}

std::uint64_t family_size(const SweepConfig& cfg) {
  cfg.validate();
  const auto c = static_cast<std::uint64_t>(cfg.coeff_max);
  std::uint64_t total = 0;
  for (std::int64_t d = 1; d <= cfg.max_degree; ++d) {
    std::uint64_t lower = 1;  // choices for a_{d-1} .. a_1
    for (std::int64_t i = 1; i < d; ++i) lower *= c + 1;
    switch (cfg.family_filter) {
      case FamilyFilter::All: total += c * lower * (c + 1); break;
      case FamilyFilter::MonicOnly: total += (c >= 1 ? 1 : 0) * lower * (c + 1); break;
      case FamilyFilter::NonzeroConstantTerm: total += c * lower * c; break;
    }
  }
  return total;
}

CampaignReport run_campaign(const SweepConfig& cfg, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Poly> family = enumerate_family(cfg);
  std::vector<std::vector<ExceptionRecord>> per_poly(family.size());

  auto check_poly = [&](std::size_t idx) {
    const Poly& f = family[idx];
    for (std::int64_t n = 1; n <= cfg.n_max; ++n) {
      const BoundReport r = main_theorem_check(f, n, cfg.range);
      if (!r.holds) per_poly[idx].push_back({f, n, r.witness.left, r.witness.right});
    }
  };

  threads = std::max(1u, threads);
  if (threads == 1 || family.size() < 2) {
    for (std::size_t i = 0; i < family.size(); ++i) check_poly(i);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < family.size(); i += threads) check_poly(i);
      });
    }
  }

  CampaignReport report;
  report.config = cfg;
  report.checked_count = static_cast<std::uint64_t>(family.size()) * static_cast<std::uint64_t>(cfg.n_max);
  for (auto& records : per_poly) {
    for (auto& rec : records) report.exceptions.push_back(std::move(rec));
  }
  bool has_power_family = false;
  for (const auto& rec : report.exceptions) {
    if (rec.n == 1 && rec.f.degree().value_or(0) >= 2) has_power_family = true;
  }
  if (has_power_family) {
    report.notes.push_back("f = x^s exceptions at n = 1 form an infinite family (all s >= 2); truncated at max_degree " +
                           std::to_string(cfg.max_degree));
  }
  report.duration_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<ExpectedException> expected_exceptions(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<ExpectedException> out;
  // x^s is monic with zero constant term.
  if (cfg.coeff_max < 1 || cfg.family_filter == FamilyFilter::NonzeroConstantTerm) return out;
  for (std::int64_t n : {1, 2, 3, 4, 6}) {
    if (n <= cfg.n_max) out.push_back({Poly::monomial(1, 1), n});
  }
  for (std::int64_t s = 2; s <= cfg.max_degree; ++s) out.push_back({Poly::monomial(1, static_cast<std::size_t>(s)), 1});
  return out;
}

bool matches_expected(const CampaignReport& report) {
  const auto expected = expected_exceptions(report.config);
  if (expected.size() != report.exceptions.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (expected[i].f != report.exceptions[i].f || expected[i].n != report.exceptions[i].n) return false;
  }
  return true;
}

}  // namespace lcmlab
