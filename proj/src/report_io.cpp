#include "lcmlab/report_io.hpp"

#include <sstream>
#include <stdexcept>

namespace lcmlab {

namespace {

Json coeff_array(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

RangeMode parse_range(const std::string& s) {
  if (s == "half") return RangeMode::Half;
  if (s == "full") return RangeMode::Full;
  throw std::invalid_argument("unknown range mode: '" + s + "'");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

Json to_json(const SweepConfig& cfg) {
  Json j;
  j["max_degree"] = cfg.max_degree;
  j["coeff_max"] = cfg.coeff_max;
  j["n_max"] = cfg.n_max;
  j["family_filter"] = std::string(to_string(cfg.family_filter));
  j["range"] = std::string(to_string(cfg.range));
  return j;
}

Json to_json(const CampaignReport& report) {
  Json j;
  j["config"] = to_json(report.config);
  j["checked_count"] = report.checked_count;
  Json exceptions = Json::array();
  for (const auto& e : report.exceptions) {
    Json row;
    row["coeffs"] = coeff_array(e.f);
    row["n"] = e.n;
    row["lcm"] = e.lcm_value.get_str();
    row["threshold"] = e.threshold.get_str();
    exceptions.push_back(std::move(row));
  }
  j["exceptions"] = std::move(exceptions);
  j["duration_s"] = report.duration_s;
  j["notes"] = report.notes;
  return j;
}

Json to_json(const SuiteSummary& s) {
  Json j;
  j["suite"] = s.name;
  j["checked"] = s.checked;
  j["failures"] = s.failures;
  j["passed"] = s.passed();
  j["first_counterexample"] = s.first_counterexample.empty() ? Json(nullptr) : Json(s.first_counterexample);
  j["duration_s"] = s.duration_s;
  return j;
}

Json to_json(const PsiValue& psi) {
  Json j;
  j["n"] = psi.n;
  j["lcm"] = psi.lcm_value.get_str();
  j["bit_length"] = psi.bit_length;
  j["psi"] = psi.log_value;
  return j;
}

CampaignReport campaign_from_json(const Json& j) {
  CampaignReport r;
  const Json& cfg = j.at("config");
  r.config.max_degree = cfg.at("max_degree").get<std::int64_t>();
  r.config.coeff_max = cfg.at("coeff_max").get<std::int64_t>();
  r.config.n_max = cfg.at("n_max").get<std::int64_t>();
  r.config.family_filter = parse_family_filter(cfg.at("family_filter").get<std::string>());
  r.config.range = parse_range(cfg.at("range").get<std::string>());
  r.checked_count = j.at("checked_count").get<std::uint64_t>();
  for (const Json& row : j.at("exceptions")) {
    std::vector<BigInt> coeffs;
    for (const Json& c : row.at("coeffs")) coeffs.push_back(parse_decimal(c.get<std::string>()));
    r.exceptions.push_back({Poly(std::move(coeffs)), row.at("n").get<std::int64_t>(),
                            parse_decimal(row.at("lcm").get<std::string>()),
                            parse_decimal(row.at("threshold").get<std::string>())});
  }
  r.duration_s = j.at("duration_s").get<double>();
  if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

std::string to_csv(const CampaignReport& report) {
  std::ostringstream os;
  os << "coeffs,n,lcm,threshold\n";
  for (const auto& e : report.exceptions) {
    std::string coeffs;
    for (std::size_t i = 0; i < e.f.coeffs().size(); ++i) {
      if (i) coeffs += ';';
      coeffs += e.f.coeffs()[i].get_str();
    }
    os << coeffs << ',' << e.n << ',' << e.lcm_value.get_str() << ',' << e.threshold.get_str() << '\n';
  }
  return os.str();
}

std::string to_csv(const std::vector<SuiteSummary>& summaries) {
  std::ostringstream os;
  os << "suite,checked,failures,first_counterexample\n";
  for (const auto& s : summaries) {
    os << csv_field(s.name) << ',' << s.checked << ',' << s.failures << ',' << csv_field(s.first_counterexample)
       << '\n';
  }
  return os.str();
}

}  // namespace lcmlab
