#pragma once

// JSON descriptions of Young functions and weights, shared by the CLI configs
// and the reports. Accepted Young function forms:
//   {"kind": "power", "p": 2}
//   {"kind": "logpower", "p0": 1, "gamma": 1.5}
//   {"kind": "section7", "alpha": 0.05}
//   {"kind": "tabulated", "breakpoints": [[t, value], ...]}
// and the shorthand strings "power:2", "logpower:1,1.5", "section7:0.05".

#include <string>

#include <json.hpp>

#include "orlicz/weight.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

YoungFunction young_from_json(const nlohmann::json& j);
nlohmann::json young_to_json(const YoungFunction& phi);

// {"kind": "constant", "c": 1} | {"kind": "power", "theta": 0.5, "factor": 1}
// | {"kind": "phi_inverse_sq", "phi": {...}, "factor": 1} | {"kind": "zero"}
Weight weight_from_json(const nlohmann::json& j);
nlohmann::json weight_to_json(const Weight& w);

// Inline JSON, shorthand, or a path to a JSON file.
YoungFunction parse_young_spec(const std::string& text);

// Reads a JSON file; throws std::runtime_error with the path on failure.
nlohmann::json load_json_file(const std::string& path);

}  // namespace orlicz
