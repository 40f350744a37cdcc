#include "orlicz/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace orlicz {

namespace {

double number(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw std::invalid_argument(std::string("missing numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

std::vector<double> split_numbers(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad number: " + item);
    out.push_back(v);
  }
  return out;
}

}  // namespace

YoungFunction young_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_young_spec(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) throw std::invalid_argument("Young function needs a 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "power") return YoungFunction::power(number(j, "p"));
  if (kind == "logpower") return YoungFunction::logpower(number(j, "p0"), number(j, "gamma"));
  if (kind == "section7") return YoungFunction::section7(number(j, "alpha"));
  if (kind == "tabulated") {
    std::vector<std::pair<double, double>> bp;
    for (const auto& e : j.at("breakpoints")) bp.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    return YoungFunction::tabulated(std::move(bp));
  }
  throw std::invalid_argument("unknown Young function kind: " + kind);
}

nlohmann::json young_to_json(const YoungFunction& phi) {
  switch (phi.kind()) {
    case YoungKind::kPower:
      return {{"kind", "power"}, {"p", phi.params()[0]}};
    case YoungKind::kLogPower:
      return {{"kind", "logpower"}, {"p0", phi.params()[0]}, {"gamma", phi.params()[1]}};
    case YoungKind::kSection7:
      return {{"kind", "section7"}, {"alpha", phi.params()[0]}};
    case YoungKind::kTabulated: {
      nlohmann::json bp = nlohmann::json::array();
      // The stored table starts at the origin, which the constructor adds back.
      for (const auto& [t, v] : phi.breakpoints()) {
        if (t > 0.0) bp.push_back({t, v});
      }
      return {{"kind", "tabulated"}, {"breakpoints", bp}};
    }
  }
  throw std::logic_error("unreachable");
}

Weight weight_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw std::invalid_argument("weight needs a 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  const double factor = j.contains("factor") ? number(j, "factor") : 1.0;
  if (kind == "zero") return Weight::zero();
  if (kind == "constant") return Weight::constant(j.contains("c") ? number(j, "c") : factor);
  if (kind == "power") return Weight::power(number(j, "theta")).scaled(factor);
  if (kind == "phi_inverse_sq") return Weight::phi_inverse_sq(young_from_json(j.at("phi"))).scaled(factor);
  throw std::invalid_argument("unknown weight kind: " + kind);
}

nlohmann::json weight_to_json(const Weight& w) {
  switch (w.kind()) {
    case Weight::Kind::kZero:
      return {{"kind", "zero"}};
    case Weight::Kind::kConstant:
      return {{"kind", "constant"}, {"c", w.factor()}};
    case Weight::Kind::kPower:
      return {{"kind", "power"}, {"theta", w.theta()}, {"factor", w.factor()}};
    case Weight::Kind::kPhiInverseSq:
      return {{"kind", "phi_inverse_sq"}, {"phi", young_to_json(*w.phi())}, {"factor", w.factor()}};
  }
  throw std::logic_error("unreachable");
}

YoungFunction parse_young_spec(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty Young function spec");
  if (text.front() == '{') return young_from_json(nlohmann::json::parse(text));
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string kind = text.substr(0, colon);
    const auto v = split_numbers(text.substr(colon + 1));
    if (kind == "power" && v.size() == 1) return YoungFunction::power(v[0]);
    if (kind == "logpower" && v.size() == 2) return YoungFunction::logpower(v[0], v[1]);
    if (kind == "section7" && v.size() == 1) return YoungFunction::section7(v[0]);
  }
  if (std::filesystem::exists(text)) {
    const auto j = load_json_file(text);
    return young_from_json(j.contains("phi") ? j.at("phi") : j);
  }
  throw std::invalid_argument("cannot parse Young function spec: " + text);
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace orlicz
