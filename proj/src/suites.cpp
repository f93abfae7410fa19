#include "lcmlab/verifier.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lcmlab {

namespace {

class SuiteRun {
 public:
  explicit SuiteRun(std::string name) : start_(std::chrono::steady_clock::now()) { summary_.name = std::move(name); }

  template <typename Describe>
  void record(bool ok, Describe&& describe) {
    ++summary_.checked;
    if (ok) return;
    if (summary_.failures++ == 0) summary_.first_counterexample = describe();
  }

  SuiteSummary finish() {
    summary_.duration_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return summary_;
  }

 private:
  SuiteSummary summary_;
  std::chrono::steady_clock::time_point start_;
};

std::string describe_report(const BoundReport& r) {
  std::ostringstream os;
  os << to_string(r.kind) << ": " << r.witness.left.get_str() << ' ' << to_string(r.witness.relation) << ' '
     << r.witness.right.get_str() << " is false";
  return os.str();
}

SuiteSummary lemma22_suite(std::int64_t hi) {
  SuiteRun run("lemma22");
  for (std::int64_t n = 7; n <= hi; ++n) {
    const auto r = lemma22_holds(n);
    run.record(r.holds, [&] { return "n=" + std::to_string(n) + " " + describe_report(r); });
  }
  return run.finish();
}

SuiteSummary lemma_key_suite(std::uint64_t cases, std::uint64_t seed) {
  SuiteRun run("lemma-key");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree_dist(1, 4), coeff_dist(0, 9), lead_dist(1, 9);
  std::uniform_int_distribution<std::int64_t> n_dist(1, 50);
  for (std::uint64_t c = 0; c < cases; ++c) {
    const int degree = degree_dist(rng);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(degree + 1));
    for (int i = 0; i < degree; ++i) coeffs[static_cast<std::size_t>(i)] = coeff_dist(rng);
    coeffs.back() = lead_dist(rng);
    const Poly f(std::move(coeffs));
    const std::int64_t n = n_dist(rng);
    const std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, n)(rng);
    const auto r = lemma_key_check(f, m, n);
    run.record(r.holds, [&] {
      return "f=" + f.to_string() + " m=" + std::to_string(m) + " n=" + std::to_string(n) + " " + describe_report(r);
    });
  }
  return run.finish();
}

SuiteSummary key1_suite(std::int64_t m_max) {
  SuiteRun run("key1");
  for (long a2 = 1; a2 <= 9; ++a2) {
    for (long a1 = 0; a1 <= 9; ++a1) {
      for (long a0 = 0; a0 <= 9; ++a0) {
        const Poly f{a0, a1, a2};
        for (std::int64_t m = 2; m <= m_max; ++m) {
          const auto r = key1_check(f, m);
          run.record(r.holds,
                     [&] { return "f=" + f.to_string() + " m=" + std::to_string(m) + " " + describe_report(r); });
        }
      }
    }
  }
  return run.finish();
}

SuiteSummary key2_suite(std::int64_t hi) {
  SuiteRun run("key2");
  for (std::int64_t a = 1; a <= hi; ++a) {
    for (std::int64_t b = 1; b <= hi; ++b) {
      if (gcd(a, b) != 1) continue;
      bool ok = false;
      std::string why;
      try {
        const auto r = key2_check(a, b);
        ok = r.holds;
        if (!ok) why = describe_report(r);
      } catch (const std::logic_error& e) {
        why = e.what();
      }
      run.record(ok, [&] { return "a=" + std::to_string(a) + " b=" + std::to_string(b) + " " + why; });
    }
  }
  return run.finish();
}

template <typename Check>
SuiteSummary index_suite(std::string name, std::int64_t lo, std::int64_t hi, Check check) {
  SuiteRun run(std::move(name));
  for (std::int64_t n = lo; n <= hi; ++n) {
    const BoundReport r = check(n);
    run.record(r.holds, [&] { return "n=" + std::to_string(n) + " " + describe_report(r); });
  }
  return run.finish();
}

}  // namespace

SuiteSummary run_identity_suite(std::int64_t m_max, std::int64_t n_max) {
  SuiteRun run("identity");
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t m = 1; m <= std::min(m_max, n); ++m) {
      const auto r = verify_identity(m, n);
      run.record(r.holds && r.pointwise_agrees, [&] {
        return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " lhs=" + r.lhs.to_string() +
               (r.pointwise_agrees ? "" : " (pointwise mismatch)");
      });
    }
  }
  return run.finish();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identity", "lemma22", "lemma-key", "key1",
                                              "key2",     "nair",    "hanson",    "half-range-ln"};
  return names;
}

SuiteSummary run_suite(std::string_view name, std::uint64_t limit, const SuiteLimits& base) {
  if (limit < 1) throw std::invalid_argument("suite limit must be >= 1");
  const auto hi = static_cast<std::int64_t>(limit);
  if (name == "identity") return run_identity_suite(hi, hi);
  if (name == "lemma22") return lemma22_suite(hi);
  if (name == "lemma-key") return lemma_key_suite(limit, base.seed);
  if (name == "key1") return key1_suite(hi);
  if (name == "key2") return key2_suite(hi);
  if (name == "nair") return index_suite("nair", 7, hi, nair_check);
  if (name == "hanson") return index_suite("hanson", 1, hi, hanson_check);
  if (name == "half-range-ln") return index_suite("half-range-ln", 1, hi, half_range_ln_check);
  throw std::invalid_argument("unknown suite: '" + std::string(name) + "'");
}

std::vector<SuiteSummary> run_lemma_suites(const SuiteLimits& limits) {
  return {
      run_identity_suite(limits.identity, limits.identity),
      lemma22_suite(limits.lemma22),
      lemma_key_suite(limits.lemma_key_cases, limits.seed),
      key1_suite(limits.key1),
      key2_suite(limits.key2),
      index_suite("nair", 7, limits.nair, nair_check),
      index_suite("hanson", 1, limits.hanson, hanson_check),
      index_suite("half-range-ln", 1, limits.half_range_ln, half_range_ln_check),
  };
}

}  // namespace lcmlab
