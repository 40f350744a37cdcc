#include "orlicz/report.hpp"

#include <algorithm>
#include <cmath>

namespace orlicz {

double relative_margin(double lhs, double rhs) {
  const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
  if (scale == 0.0) return 0.0;
  if (!std::isfinite(scale)) return std::isfinite(rhs) ? -1.0 : (std::isfinite(lhs) ? 1.0 : 0.0);
  return (rhs - lhs) / scale;
}

VerificationReport make_report(std::string check_id, double lhs, double rhs, double tolerance,
                               std::string tolerance_source) {
  VerificationReport r;
  r.check_id = std::move(check_id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = relative_margin(lhs, rhs);
  r.tolerance = tolerance;
  r.tolerance_source = std::move(tolerance_source);
  r.pass = r.recompute_pass();
  return r;
}

nlohmann::json VerificationReport::to_json(bool include_timing) const {
  nlohmann::json j;
  j["check_id"] = check_id;
  j["inputs"] = inputs;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["margin"] = margin;
  j["tolerance"] = tolerance;
  j["tolerance_source"] = tolerance_source;
  j["pass"] = pass;
  j["details"] = details;
  if (include_timing) j["sidecar"] = {{"wall_time_s", wall_time_s}};
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.check_id = j.at("check_id").get<std::string>();
  r.inputs = j.value("inputs", nlohmann::json::object());
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.margin = j.at("margin").get<double>();
  r.tolerance = j.at("tolerance").get<double>();
  r.tolerance_source = j.value("tolerance_source", "");
  r.pass = j.at("pass").get<bool>();
  r.details = j.value("details", nlohmann::json::object());
  if (j.contains("sidecar")) r.wall_time_s = j["sidecar"].value("wall_time_s", 0.0);
  return r;
}

nlohmann::json to_json(const ConditionReport& rep) {
  return {{"condition", rep.condition},   {"grid_lo", rep.grid_lo},
          {"grid_hi", rep.grid_hi},       {"grid_size", rep.grid_size},
          {"worst_margin", rep.worst_margin}, {"witness", rep.witness},
          {"tolerance", rep.tolerance},   {"pass", rep.pass},
          {"note", rep.note}};
}

}  // namespace orlicz
