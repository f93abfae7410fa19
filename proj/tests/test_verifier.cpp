#include "lcmlab/verifier.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lcmlab;

namespace {

SweepConfig sweep(std::int64_t d, std::int64_t c, std::int64_t n, RangeMode range = RangeMode::Half,
                  FamilyFilter filter = FamilyFilter::All) {
  SweepConfig cfg;
  cfg.max_degree = d;
  cfg.coeff_max = c;
  cfg.n_max = n;
  cfg.range = range;
  cfg.family_filter = filter;
  return cfg;
}

std::vector<std::pair<Poly, std::int64_t>> pairs(const CampaignReport& r) {
  std::vector<std::pair<Poly, std::int64_t>> out;
  for (const auto& e : r.exceptions) out.emplace_back(e.f, e.n);
  return out;
}

const Poly kX{0, 1};

}  // namespace

TEST_CASE("enumerate_family examples") {
  CHECK(enumerate_family(sweep(1, 1, 1)) == std::vector<Poly>{Poly{0, 1}, Poly{1, 1}});
  CHECK(enumerate_family(sweep(1, 2, 1)).size() == 6);
  CHECK(enumerate_family(sweep(2, 1, 1)) ==
        std::vector<Poly>{Poly{0, 1}, Poly{1, 1}, Poly{0, 0, 1}, Poly{1, 0, 1}, Poly{0, 1, 1}, Poly{1, 1, 1}});
  CHECK(enumerate_family(sweep(1, 2, 1)) ==
        std::vector<Poly>{Poly{0, 1}, Poly{1, 1}, Poly{2, 1}, Poly{0, 2}, Poly{1, 2}, Poly{2, 2}});
  CHECK(enumerate_family(sweep(2, 0, 1)).empty());
}

TEST_CASE("family filters") {
  const auto monic = enumerate_family(sweep(2, 2, 1, RangeMode::Half, FamilyFilter::MonicOnly));
  CHECK(monic.size() == 3 + 9);
  for (const auto& p : monic) CHECK(p.leading() == 1);

  const auto nonzero = enumerate_family(sweep(2, 2, 1, RangeMode::Half, FamilyFilter::NonzeroConstantTerm));
  CHECK(nonzero.size() == 4 + 12);
  for (const auto& p : nonzero) CHECK(p.coeff(0) != 0);
}

TEST_CASE("family_size matches enumeration") {
  for (auto filter : {FamilyFilter::All, FamilyFilter::MonicOnly, FamilyFilter::NonzeroConstantTerm}) {
    for (std::int64_t d = 1; d <= 4; ++d) {
      for (std::int64_t c = 0; c <= 4; ++c) {
        const auto cfg = sweep(d, c, 1, RangeMode::Half, filter);
        CHECK(family_size(cfg) == enumerate_family(cfg).size());
      }
    }
  }
}

TEST_CASE("invalid configs are rejected") {
  CHECK_THROWS_AS(enumerate_family(sweep(0, 1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(run_campaign(sweep(1, 1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(run_campaign(sweep(1, -1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_filter("odd"), std::invalid_argument);
}

TEST_CASE("campaign examples") {
  const auto linear = run_campaign(sweep(1, 1, 8));
  const std::vector<std::pair<Poly, std::int64_t>> for_x{{kX, 1}, {kX, 2}, {kX, 3}, {kX, 4}, {kX, 6}};
  CHECK(pairs(linear) == for_x);
  CHECK(matches_expected(linear));
  CHECK(linear.exceptions[4].lcm_value == 60);
  CHECK(linear.exceptions[4].threshold == 64);
  CHECK(linear.notes.empty());

  const auto powers = run_campaign(sweep(3, 1, 1));
  const auto p = pairs(powers);
  CHECK(std::find(p.begin(), p.end(), std::pair{Poly{0, 0, 1}, std::int64_t{1}}) != p.end());
  CHECK(std::find(p.begin(), p.end(), std::pair{Poly{0, 0, 0, 1}, std::int64_t{1}}) != p.end());
  for (const auto& e : powers.exceptions) {
    CHECK(e.lcm_value == 1);
    CHECK(e.threshold == 2);
  }
  CHECK(matches_expected(powers));
  REQUIRE(powers.notes.size() == 1);
  CHECK(powers.notes.front().find("max_degree 3") != std::string::npos);

  const auto full = run_campaign(sweep(1, 1, 8, RangeMode::Full));
  CHECK(pairs(full) == for_x);
}

TEST_CASE("desk-scale campaign") {
  const auto report = run_campaign(sweep(3, 5, 40), 4);
  const std::vector<std::pair<Poly, std::int64_t>> expected{
      {kX, 1}, {kX, 2}, {kX, 3}, {kX, 4}, {kX, 6}, {Poly{0, 0, 1}, 1}, {Poly{0, 0, 0, 1}, 1}};
  CHECK(pairs(report) == expected);
  CHECK(report.checked_count == family_size(report.config) * 40);
  CHECK(report.checked_count == (30 + 180 + 1080) * 40);
}

TEST_CASE("campaign is deterministic and independent of thread count") {
  const auto cfg = sweep(2, 4, 25, RangeMode::Full);
  const auto a = run_campaign(cfg, 1);
  for (unsigned t : {2u, 3u, 7u}) {
    const auto b = run_campaign(cfg, t);
    CHECK(a.checked_count == b.checked_count);
    CHECK(a.exceptions == b.exceptions);
    CHECK(a.notes == b.notes);
  }
}

TEST_CASE("every exception still fails when checked on its own") {
  for (auto range : {RangeMode::Half, RangeMode::Full}) {
    const auto report = run_campaign(sweep(3, 3, 20, range));
    REQUIRE_FALSE(report.exceptions.empty());
    for (const auto& e : report.exceptions) {
      const auto r = main_theorem_check(e.f, e.n, range);
      CHECK_FALSE(r.holds);
      CHECK(r.lhs == e.lcm_value);
      CHECK(e.lcm_value < e.threshold);
      CHECK(e.f.has_nonneg_coeffs());
    }
  }
}

TEST_CASE("expected exceptions respect the search space") {
  CHECK(expected_exceptions(sweep(1, 1, 5)).size() == 4);
  CHECK(expected_exceptions(sweep(4, 1, 6)).size() == 5 + 3);
  CHECK(expected_exceptions(sweep(3, 5, 40, RangeMode::Half, FamilyFilter::NonzeroConstantTerm)).empty());
  CHECK(expected_exceptions(sweep(3, 5, 40, RangeMode::Half, FamilyFilter::MonicOnly)).size() == 7);
  CHECK(matches_expected(run_campaign(sweep(2, 3, 12, RangeMode::Half, FamilyFilter::NonzeroConstantTerm))));
  CHECK(matches_expected(run_campaign(sweep(3, 2, 12, RangeMode::Full, FamilyFilter::MonicOnly))));
}

TEST_CASE("scaling x by c scales the lcm by c") {
  for (long c = 1; c <= 10; ++c) {
    for (std::int64_t n = 1; n <= 50; ++n) {
      const auto [lo, hi] = half_range(n);
      CHECK(lcm_range({Poly{0, c}, lo, hi}) == c * lcm_range({kX, lo, hi}));
      CHECK(lcm_range({Poly{0, c}, 1, n}) == c * lcm_range({kX, 1, n}));
    }
  }
}

TEST_CASE("lemma suites") {
  const auto identity = run_suite("identity", 30);
  CHECK(identity.checked == 465);
  CHECK(identity.passed());

  const auto lemma22 = run_suite("lemma22", 64);
  CHECK(lemma22.checked == 58);
  CHECK(lemma22.passed());

  const auto key2 = run_suite("key2", 200);
  CHECK(key2.passed());
  CHECK(key2.checked > 0);

  const auto key = run_suite("lemma-key", 500);
  CHECK(key.checked == 500);
  CHECK(key.passed());

  CHECK(run_suite("nair", 100).checked == 94);
  CHECK(run_suite("hanson", 100).passed());
  CHECK(run_suite("half-range-ln", 100).passed());
  CHECK(run_suite("key1", 20).checked == 900 * 19);

  CHECK(run_identity_suite(3, 5).checked == 1 + 2 + 3 + 3 + 3);

  CHECK_THROWS_AS(run_suite("nope", 10), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("nair", 0), std::invalid_argument);
}

TEST_CASE("run_lemma_suites with small limits") {
  SuiteLimits limits;
  limits.identity = 8;
  limits.lemma22 = 20;
  limits.lemma_key_cases = 100;
  limits.key1 = 10;
  limits.key2 = 30;
  limits.nair = 50;
  limits.hanson = 50;
  limits.half_range_ln = 50;
  const auto all = run_lemma_suites(limits);
  CHECK(all.size() == suite_names().size());
  for (const auto& s : all) {
    CAPTURE(s.name);
    CHECK(s.passed());
    CHECK(s.checked > 0);
  }
}
