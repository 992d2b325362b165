#pragma once

#include <string>

#include <json.hpp>

#include "gap/geometry.hpp"
#include "gap/measures.hpp"
#include "gap/report.hpp"
#include "gap/weights.hpp"

namespace gap {

using json = nlohmann::json;

// Strict descriptor parsing: unknown keys are rejected, all parameters are
// validated. See README for the schemas.
Body body_from_json(const json& j);
Potential potential_from_json(const json& j);
WeightSpec weight_from_json(const json& j);

json report_to_json(const BoundReport& rep);

// Serializes with sorted keys, two-space indentation and floats at 17
// significant digits, so identical inputs reproduce identical bytes.
std::string dump_json(const json& j);

// write via a temp file in the same directory, then rename
void atomic_write(const std::string& path, const std::string& content);

}  // namespace gap
