#include "cli_app.hpp"

#include "lcmlab/bounds.hpp"
#include "lcmlab/lcm_engine.hpp"
#include "lcmlab/polynomial.hpp"
#include "lcmlab/report_io.hpp"
#include "lcmlab/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lcmlab::cli {

namespace {

enum class Format { Plain, Json, Csv };

struct CliConfig {
  Format format = Format::Plain;
  std::string output_path;
  std::optional<unsigned> parallelism;
};

struct LcmArgs {
  std::string poly;
  std::int64_t m = 0;
  std::int64_t n = 0;
};

struct TheoremArgs {
  std::int64_t max_degree = 3;
  std::int64_t coeff_max = 5;
  std::int64_t n_max = 40;
  bool full_range = false;
  std::string family = "all";
};

struct IdentityArgs {
  std::int64_t m_max = 30;
  std::int64_t n_max = 30;
};

struct PsiArgs {
  std::int64_t n = 0;
  bool table = false;
};

struct SuiteArgs {
  std::string suite;
  std::optional<std::uint64_t> limit;
  std::uint64_t seed = SuiteLimits{}.seed;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned resolve_threads(const CliConfig& cfg) {
  if (cfg.parallelism) return *cfg.parallelism;
  if (const char* env = std::getenv("LCMLAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("LCMLAB_THREADS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

std::uint64_t default_limit(const std::string& suite) {
  const SuiteLimits d;
  static const std::map<std::string, std::uint64_t> defaults{
      {"identity", static_cast<std::uint64_t>(d.identity)}, {"lemma22", static_cast<std::uint64_t>(d.lemma22)},
      {"lemma-key", d.lemma_key_cases},                     {"key1", static_cast<std::uint64_t>(d.key1)},
      {"key2", static_cast<std::uint64_t>(d.key2)},         {"nair", static_cast<std::uint64_t>(d.nair)},
      {"hanson", static_cast<std::uint64_t>(d.hanson)},     {"half-range-ln", static_cast<std::uint64_t>(d.half_range_ln)},
  };
  return defaults.at(suite);
}

void write_suites(std::ostream& os, Format format, const std::vector<SuiteSummary>& summaries) {
  switch (format) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& s : summaries) arr.push_back(to_json(s));
      os << arr.dump(2) << '\n';
      break;
    }
    case Format::Csv: os << to_csv(summaries); break;
    case Format::Plain:
      for (const auto& s : summaries) {
        os << s.name << ": " << s.checked << " checked, " << s.failures << " failures";
        if (!s.passed()) os << " (first: " << s.first_counterexample << ')';
        os << '\n';
      }
      break;
  }
}

int cmd_lcm(const LcmArgs& a, const CliConfig& cfg, std::ostream& os) {
  const Poly f = parse_coeff_list(a.poly);
  if (a.m < 1 || a.m > a.n) throw UsageError("need 1 <= m <= n");
  const BigInt value = lcm_range(RangeLcmRequest(f, a.m, a.n), ReduceOptions{.threads = resolve_threads(cfg)});
  switch (cfg.format) {
    case Format::Plain: os << value.get_str() << '\n'; break;
    case Format::Json: {
      Json j;
      j["coeffs"] = Json::array();
      for (const auto& c : f.coeffs()) j["coeffs"].push_back(c.get_str());
      j["m"] = a.m;
      j["n"] = a.n;
      j["lcm"] = value.get_str();
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "coeffs,m,n,lcm\n";
      os << format_coeff_list(f) << ',' << a.m << ',' << a.n << ',' << value.get_str() << '\n';
      break;
  }
  return kOk;
}

int cmd_verify_theorem(const TheoremArgs& a, const CliConfig& cfg, std::ostream& os) {
  SweepConfig sweep;
  sweep.max_degree = a.max_degree;
  sweep.coeff_max = a.coeff_max;
  sweep.n_max = a.n_max;
  sweep.range = a.full_range ? RangeMode::Full : RangeMode::Half;
  sweep.family_filter = parse_family_filter(a.family);
  const CampaignReport report = run_campaign(sweep, resolve_threads(cfg));
  const bool ok = matches_expected(report);

  switch (cfg.format) {
    case Format::Json: os << to_json(report).dump(2) << '\n'; break;
    case Format::Csv: os << to_csv(report); break;
    case Format::Plain:
      os << "range: " << to_string(sweep.range) << ", family: " << to_string(sweep.family_filter)
         << ", max degree " << sweep.max_degree << ", coefficients <= " << sweep.coeff_max << ", n <= "
         << sweep.n_max << '\n';
      os << report.checked_count << " (f, n) pairs checked, " << report.exceptions.size() << " exceptions\n";
      for (const auto& e : report.exceptions) {
        os << "  f(x) = " << e.f.to_string() << ", n = " << e.n << ": lcm " << e.lcm_value.get_str() << " < "
           << e.threshold.get_str() << '\n';
      }
      for (const auto& note : report.notes) os << "note: " << note << '\n';
      os << (ok ? "exception set matches the known list\n" : "MISMATCH with the known exception list\n");
      break;
  }
  return ok ? kOk : kDiscrepancy;
}

int cmd_verify_identity(const IdentityArgs& a, const CliConfig& cfg, std::ostream& os) {
  const SuiteSummary s = run_identity_suite(a.m_max, a.n_max);
  if (cfg.format == Format::Plain) {
    os << s.checked << " identities verified, " << s.failures << " failures\n";
    if (!s.passed()) os << "first failure: " << s.first_counterexample << '\n';
  } else {
    write_suites(os, cfg.format, {s});
  }
  return s.passed() ? kOk : kDiscrepancy;
}

int cmd_psi(const PsiArgs& a, const CliConfig& cfg, std::ostream& os) {
  const ReduceOptions opts{.threads = resolve_threads(cfg)};
  std::vector<PsiValue> rows;
  if (a.table) {
    for (std::int64_t k = 1; k <= a.n; ++k) rows.push_back(chebyshev_psi(k, opts));
  } else {
    rows.push_back(chebyshev_psi(a.n, opts));
  }
  switch (cfg.format) {
    case Format::Json: {
      if (a.table) {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        os << arr.dump(2) << '\n';
      } else {
        os << to_json(rows.front()).dump(2) << '\n';
      }
      break;
    }
    case Format::Csv:
      os << "n,lcm,bit_length,psi\n";
      for (const auto& r : rows) {
        os << r.n << ',' << r.lcm_value.get_str() << ',' << r.bit_length << ',' << std::setprecision(10)
           << r.log_value << '\n';
      }
      break;
    case Format::Plain:
      os << std::fixed << std::setprecision(6);
      for (const auto& r : rows) {
        if (a.table) os << "n=" << r.n << ' ';
        os << "lcm=" << r.lcm_value.get_str() << " psi=" << r.log_value << " bits=" << r.bit_length
           << " psi/n=" << r.log_value / static_cast<double>(r.n) << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_bounds_report(const SuiteArgs& a, const CliConfig& cfg, std::ostream& os) {
  SuiteLimits limits;
  limits.seed = a.seed;
  std::vector<SuiteSummary> summaries;
  if (a.suite == "all") {
    summaries = run_lemma_suites(limits);
  } else {
    summaries.push_back(run_suite(a.suite, a.limit.value_or(default_limit(a.suite)), limits));
  }
  write_suites(os, cfg.format, summaries);
  const bool ok = std::all_of(summaries.begin(), summaries.end(), [](const SuiteSummary& s) { return s.passed(); });
  return ok ? kOk : kDiscrepancy;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lcm computations over polynomial sequences and checks of 2^n lower bounds"};
  app.name("lcmlab");
  app.require_subcommand(1);

  const CLI::Range at_least_one(std::int64_t{1}, std::numeric_limits<std::int64_t>::max());

  CliConfig cfg;
  const std::map<std::string, Format> formats{{"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", cfg.format, "Output format: plain, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("-o,--output", cfg.output_path, "Write output to this file instead of stdout");
  app.add_option("-j,--parallelism", cfg.parallelism, "Worker threads (default: $LCMLAB_THREADS or 1)")
      ->check(at_least_one);

  LcmArgs lcm_args;
  auto* lcm = app.add_subcommand("lcm", "Print lcm(f(m), ..., f(n)) exactly");
  lcm->add_option("--poly", lcm_args.poly,
                  "Coefficients, constant term first, comma separated: 1,0,1 is x^2+1. "
                  "Write --poly=-1,1 when the list starts with a minus sign")
      ->required();
  lcm->add_option("--m", lcm_args.m, "First index")->required();
  lcm->add_option("--n", lcm_args.n, "Last index")->required();

  TheoremArgs thm_args;
  auto* thm = app.add_subcommand("verify-theorem", "Sweep a polynomial family and list every (f, n) with lcm < 2^n");
  thm->add_option("--max-degree", thm_args.max_degree, "Largest degree in the family")->check(at_least_one);
  thm->add_option("--coeff-max", thm_args.coeff_max, "Coefficients range over [0, C]")->check(at_least_one);
  thm->add_option("--n-max", thm_args.n_max, "Check n = 1 .. N")->check(at_least_one);
  thm->add_flag("--full-range", thm_args.full_range, "Take the lcm over 1..n instead of ceil(n/2)..n");
  thm->add_option("--family", thm_args.family, "Family filter")
      ->check(CLI::IsMember({"all", "monic", "nonzero-constant"}));

  IdentityArgs id_args;
  auto* ident = app.add_subcommand("verify-identity", "Check the finite-difference product identity");
  ident->add_option("--m-max", id_args.m_max, "Largest m")->check(at_least_one);
  ident->add_option("--n-max", id_args.n_max, "Largest n")->check(at_least_one);

  PsiArgs psi_args;
  auto* psi = app.add_subcommand("psi", "Chebyshev psi(n) = log lcm(1..n)");
  psi->add_option("--n", psi_args.n, "Argument")->required()->check(at_least_one);
  psi->add_flag("--table", psi_args.table, "Print every k = 1 .. n");

  SuiteArgs suite_args;
  auto* bounds = app.add_subcommand("bounds-report", "Run one bound property suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  bounds->add_option("--suite", suite_args.suite, "Suite name")->required()->check(CLI::IsMember(suites));
  bounds->add_option("--limit", suite_args.limit, "Upper index (case count for lemma-key)")
      ->check(at_least_one);
  bounds->add_option("--seed", suite_args.seed, "Seed for the lemma-key generator");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (*lcm) {
      code = cmd_lcm(lcm_args, cfg, buffer);
    } else if (*thm) {
      code = cmd_verify_theorem(thm_args, cfg, buffer);
    } else if (*ident) {
      code = cmd_verify_identity(id_args, cfg, buffer);
    } else if (*psi) {
      code = cmd_psi(psi_args, cfg, buffer);
    } else {
      code = cmd_bounds_report(suite_args, cfg, buffer);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (cfg.output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << cfg.output_path << "' for writing\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace lcmlab::cli
