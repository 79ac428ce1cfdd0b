#pragma once

#include <string>

#include <json.hpp>

#include "newtonjump/dsl.hpp"
#include "newtonjump/oracle.hpp"
#include "newtonjump/predictor.hpp"

namespace newtonjump {

inline constexpr const char* kSchemaVersion = "1";

// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted.

inline nlohmann::json intervals_json(const std::vector<Interval>& intervals) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& i : intervals) out.push_back({i.lo, i.hi});
  return out;
}

inline nlohmann::json report_json(const GapReport& r) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["params"] = {{"p", r.params.p}, {"q", r.params.q}, {"k", r.params.k}, {"r", r.params.r}, {"m", r.params.m}};
  j["mu"] = r.mu;
  j["mu_pkp"] = r.mu_pkp;
  j["applicability"] = std::string(to_string(r.applicability));
  j["guaranteed"] = intervals_json(r.guaranteed);
  nlohmann::json gaps = nlohmann::json::array();
  for (const auto& g : r.possible_gaps)
    gaps.push_back({{"value", g.value}, {"case", std::string(to_string(g.case_tag))}, {"definitive", g.definitive}});
  j["possible_gaps"] = std::move(gaps);
  return j;
}

/// Adds the observed spectrum: attainable intervals, witnesses in vertex
/// form and the same witnesses in term form.
inline void add_spectrum_json(nlohmann::json& j, const SpectrumResult& s) {
  j["attainable"] = intervals_json(to_intervals(s.attainable));
  j["chain_count"] = s.chain_count;
  j["min_total_degree"] = s.constraints.min_total_degree;
  nlohmann::json witnesses = nlohmann::json::object();
  nlohmann::json terms = nlohmann::json::object();
  for (const auto& [nu, d] : s.witnesses) {
    witnesses[std::to_string(nu)] = render_vertices(d);
    terms[std::to_string(nu)] = render_terms(d);
  }
  j["witnesses"] = std::move(witnesses);
  j["witness_terms"] = std::move(terms);
}

inline nlohmann::json spectrum_json(const GapReport& predicted, const SpectrumResult& s) {
  nlohmann::json j = report_json(predicted);
  add_spectrum_json(j, s);
  return j;
}

inline nlohmann::json verification_json(const VerificationReport& v) {
  nlohmann::json j = spectrum_json(v.predicted, v.observed);
  j["missing_guaranteed"] = v.missing_guaranteed;
  j["closed_gaps"] = v.closed_gaps;
  j["status"] = std::string(to_string(v.status));
  return j;
}

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace newtonjump
