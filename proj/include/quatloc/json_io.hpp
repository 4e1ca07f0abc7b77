#pragma once

#include <string>

#include "json.hpp"
#include "quatloc/qpoly.hpp"
#include "quatloc/regions.hpp"

namespace quatloc {

using json = nlohmann::json;

// Wire formats:
//   quaternion      [w, x, y, z]
//   matrix          {"n": int, "entries": [[quat, ...], ...]}
//   polynomial      {"side": "left"|"right", "coeffs": [quat, ...]} (monic)
//   region          {"kind": "ball"|"cassini"|"union"|"intersection", ...}

json quat_to_json(const Quaternion& q);
Quaternion quat_from_json(const json& j);

json matrix_to_json(const QMatrix& a);
QMatrix matrix_from_json(const json& j);

json poly_to_json(const QPolynomial& p);
QPolynomial poly_from_json(const json& j);

json region_to_json(const Region& r);
Region region_from_json(const json& j);

json bound_report_to_json(const BoundReport& r);
json roots_to_json(const RootSet& r);
json discs_to_json(const std::vector<DiscDescriptor>& discs);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

/// Validates a value against the subset of JSON Schema used by the shipped
/// schemas: type, properties, required, additionalProperties (bool), items,
/// enum, const, minItems/maxItems, minimum/maximum. Returns an error message
/// or empty string.
std::string schema_validate(const json& schema, const json& value);

}  // namespace quatloc
