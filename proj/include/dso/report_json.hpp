#pragma once

// JSON serialization of verification and enumeration reports.
// Key names are part of the CLI's stable output contract.

#include <json.hpp>

#include "dso/enumerate.hpp"
#include "dso/verify.hpp"

namespace dso {

inline nlohmann::json to_json(const InstanceParams& params) {
  nlohmann::json j;
  j["n"] = params.n;
  j["ell"] = params.ell;
  if (params.max_degree) {
    j["max_degree"] = *params.max_degree;
  } else {
    j["max_degree"] = nullptr;
  }
  return j;
}

inline nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["instance"] = to_json(report.instance);
  j["brute_min"] = report.brute_min;
  j["paper_bound"] = report.paper_bound_value;
  j["regular_bound"] = report.regular_bound_value;
  j["verdict"] = to_string(report.verdict);
  j["extremal_signature_ok"] = report.extremal_signature_ok;
  j["argmin"] = report.argmin_graphs;
  j["notes"] = report.discrepancy_notes;
  return j;
}

inline nlohmann::json enumeration_summary(const EnumerationResult& result,
                                          double runtime_seconds) {
  nlohmann::json j;
  j["params"] = to_json(result.params);
  j["count"] = result.count;
  j["infeasible"] = result.infeasible;
  j["runtime"] = runtime_seconds;
  return j;
}

}  // namespace dso
