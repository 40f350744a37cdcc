#pragma once

// Structured outcome of one inequality check. The margin is relative,
// (rhs - lhs) / max(|lhs|, |rhs|), so it is comparable across scales; pass is
// recomputable from the stored fields as margin >= -tolerance.

#include <json.hpp>
#include <string>

#include "orlicz/young.hpp"

namespace orlicz {

struct VerificationReport {
  std::string check_id;
  nlohmann::json inputs = nlohmann::json::object();
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  std::string tolerance_source;
  bool pass = false;
  nlohmann::json details = nlohmann::json::object();
  // Sidecar field; never part of the canonical serialization.
  double wall_time_s = 0.0;

  bool recompute_pass() const { return margin >= -tolerance; }

  nlohmann::json to_json(bool include_timing = false) const;
  static VerificationReport from_json(const nlohmann::json& j);
};

double relative_margin(double lhs, double rhs);

// Builds a report for the claim lhs <= rhs.
VerificationReport make_report(std::string check_id, double lhs, double rhs, double tolerance,
                               std::string tolerance_source);

nlohmann::json to_json(const ConditionReport& rep);

}  // namespace orlicz
