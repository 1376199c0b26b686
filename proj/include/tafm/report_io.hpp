#pragma once

#include <json.hpp>

#include "tafm/verify.hpp"

// JSON serialization of verification reports:
// {check_name, passed, max_deviation, tolerance, parameters}.

namespace tafm {

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check_name"] = r.check_name;
  j["passed"] = r.passed;
  j["max_deviation"] = r.max_deviation;
  j["tolerance"] = r.tolerance;
  j["parameters"] = r.parameters;
  return j;
}

inline nlohmann::ordered_json reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const VerificationReport& r : reports) arr.push_back(report_to_json(r));
  return arr;
}

}  // namespace tafm
