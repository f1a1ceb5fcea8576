#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "skewq/contour.hpp"
#include "skewq/errors.hpp"
#include "skewq/func_expr.hpp"
#include "skewq/spherical_series.hpp"

namespace skewq::io {

using Json = nlohmann::ordered_json;

// Readers throw MathError(Schema) carrying the JSON path of the bad value.

Quaternion quaternion_from_json(const Json& j, const std::string& path = "$");
std::vector<Quaternion> quaternions_from_json(const Json& j, const std::string& path = "$");
Orbit orbit_from_json(const Json& j, const std::string& path = "$");
SphericalSeries series_from_json(const Json& j, const std::string& path = "$");
Contour contour_from_json(const Json& j, const std::string& path = "$", int default_nodes = 2048);
Expr expr_from_json(const Json& j, const std::string& path = "$");

/// 4-array with -0.0 written as 0.
Json to_json(const Quaternion& q);
Json to_json(const Orbit& o);
Json to_json(const SphericalSeries& s);
Json error_to_json(const MathError& e);

/// Two-space indented dump, shared by every writer so output is byte-stable.
std::string dump(const Json& j);

}  // namespace skewq::io
