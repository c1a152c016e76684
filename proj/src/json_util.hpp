#pragma once

// Schema helpers shared by the document readers. Every accessor throws
// ParseError carrying the JSON path of the offending field.

#include <string>
#include <string_view>

#include <json.hpp>

#include "trustalg/catalog.hpp"
#include "trustalg/error.hpp"

namespace trustalg::detail {

using nlohmann::json;

json parse_json(std::string_view text, std::string_view what);

const json& require(const json& obj, std::string_view key, const std::string& path);
const json* optional_field(const json& obj, std::string_view key);

std::string get_string(const json& obj, std::string_view key, const std::string& path);
double get_number(const json& obj, std::string_view key, const std::string& path);
bool get_bool(const json& obj, std::string_view key, const std::string& path);
const json& get_array(const json& obj, std::string_view key, const std::string& path);
const json& get_object(const json& obj, std::string_view key, const std::string& path);
Date get_date(const json& obj, std::string_view key, const std::string& path);
RelationCategory get_category(const json& obj, std::string_view key, const std::string& path);

void expect_object(const json& value, const std::string& path);

json date_range_to_json(const DateRange& r);
DateRange date_range_from_json(const json& obj, const std::string& path);

json per_category_to_json(const PerCategory<double>& v);
PerCategory<double> per_category_from_json(const json& obj, const std::string& path);
json signs_to_json(const ScalarConfig& s);
ScalarConfig signs_from_json(const json& obj, const std::string& path);
json bounds_to_json(const ScalarBounds& b);
ScalarBounds bounds_from_json(const json& obj, const std::string& path);
json evaluation_to_json(const TrustEvaluation& e);
TrustEvaluation evaluation_from_json(const json& obj, const std::string& path);

/// Stable dump: two-space indent, trailing newline.
std::string dump(const json& j);

} // namespace trustalg::detail
