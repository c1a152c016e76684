#include "json_util.hpp"

#include <algorithm>

namespace trustalg::detail {

namespace {

std::string join(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
}

} // namespace

json parse_json(std::string_view text, std::string_view what) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line/column pair.
        const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        const auto before = text.substr(0, offset);
        const std::size_t line = 1 + static_cast<std::size_t>(std::count(before.begin(), before.end(), '\n'));
        const auto nl = before.rfind('\n');
        const std::size_t column = nl == std::string_view::npos ? offset + 1 : offset - nl;
        throw ParseError(std::string(what) + ": malformed JSON at line " + std::to_string(line) +
                         ", column " + std::to_string(column));
    }
}

void expect_object(const json& value, const std::string& path) {
    if (!value.is_object()) {
        throw ParseError((path.empty() ? std::string("document") : path) + ": expected an object");
    }
}

const json& require(const json& obj, std::string_view key, const std::string& path) {
    expect_object(obj, path);
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(join(path, key) + ": missing required field");
    }
    return *it;
}

const json* optional_field(const json& obj, std::string_view key) {
    const auto it = obj.find(key);
    return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::string get_string(const json& obj, std::string_view key, const std::string& path) {
    const json& v = require(obj, key, path);
    if (!v.is_string()) {
        throw ParseError(join(path, key) + ": expected a string");
    }
    return v.get<std::string>();
}

double get_number(const json& obj, std::string_view key, const std::string& path) {
    const json& v = require(obj, key, path);
    if (!v.is_number()) {
        throw ParseError(join(path, key) + ": expected a number");
    }
    return v.get<double>();
}

bool get_bool(const json& obj, std::string_view key, const std::string& path) {
    const json& v = require(obj, key, path);
    if (!v.is_boolean()) {
        throw ParseError(join(path, key) + ": expected true or false");
    }
    return v.get<bool>();
}

const json& get_array(const json& obj, std::string_view key, const std::string& path) {
    const json& v = require(obj, key, path);
    if (!v.is_array()) {
        throw ParseError(join(path, key) + ": expected an array");
    }
    return v;
}

const json& get_object(const json& obj, std::string_view key, const std::string& path) {
    const json& v = require(obj, key, path);
    expect_object(v, join(path, key));
    return v;
}

Date get_date(const json& obj, std::string_view key, const std::string& path) {
    const std::string text = get_string(obj, key, path);
    const auto d = parse_date(text);
    if (!d) {
        throw ParseError(join(path, key) + ": '" + text + "' is not an ISO-8601 date (YYYY-MM-DD)");
    }
    return *d;
}

RelationCategory get_category(const json& obj, std::string_view key, const std::string& path) {
    const std::string text = get_string(obj, key, path);
    const auto c = parse_category(text);
    if (!c) {
        throw ParseError(join(path, key) + ": '" + text +
                         "' is not one of friendly, neutral, hostile");
    }
    return *c;
}

json date_range_to_json(const DateRange& r) {
    return json{{"start", format_date(r.start)}, {"end", format_date(r.end)}};
}

DateRange date_range_from_json(const json& obj, const std::string& path) {
    expect_object(obj, path);
    return DateRange{get_date(obj, "start", path), get_date(obj, "end", path)};
}

json per_category_to_json(const PerCategory<double>& v) {
    json out = json::object();
    for (auto c : kAllCategories) {
        out[std::string(to_string(c))] = v[c];
    }
    return out;
}

PerCategory<double> per_category_from_json(const json& obj, const std::string& path) {
    expect_object(obj, path);
    PerCategory<double> v;
    for (auto c : kAllCategories) {
        v[c] = get_number(obj, to_string(c), path);
    }
    return v;
}

json signs_to_json(const ScalarConfig& s) {
    json out = json::object();
    for (auto c : kAllCategories) {
        out[std::string(to_string(c))] = s[c];
    }
    return out;
}

ScalarConfig signs_from_json(const json& obj, const std::string& path) {
    expect_object(obj, path);
    PerCategory<int> v;
    for (auto c : kAllCategories) {
        const json& x = require(obj, to_string(c), path);
        if (!x.is_number_integer()) {
            throw ParseError(join(path, to_string(c)) + ": expected -1 or 1");
        }
        v[c] = x.get<int>();
    }
    try {
        return ScalarConfig::make(v.hostile(), v.neutral(), v.friendly());
    } catch (const DomainError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json bounds_to_json(const ScalarBounds& b) {
    return json{{"lower", b.lower},
                {"upper", b.upper},
                {"middle_band_low", b.middle_band_low},
                {"middle_band_high", b.middle_band_high}};
}

ScalarBounds bounds_from_json(const json& obj, const std::string& path) {
    expect_object(obj, path);
    return ScalarBounds{get_number(obj, "lower", path), get_number(obj, "upper", path),
                        get_number(obj, "middle_band_low", path),
                        get_number(obj, "middle_band_high", path)};
}

json evaluation_to_json(const TrustEvaluation& e) {
    json out{{"trust_mass", e.trust_mass},
             {"strength", e.strength},
             {"label", std::string(to_string(e.label))},
             {"bounds", bounds_to_json(e.bounds)},
             {"no_hostile", e.no_hostile}};
    if (e.band_label) {
        out["band_label"] = *e.band_label;
    }
    return out;
}

TrustEvaluation evaluation_from_json(const json& obj, const std::string& path) {
    expect_object(obj, path);
    TrustEvaluation e;
    e.trust_mass = get_number(obj, "trust_mass", path);
    e.strength = get_number(obj, "strength", path);
    e.label = get_category(obj, "label", path);
    e.bounds = bounds_from_json(get_object(obj, "bounds", path), join(path, "bounds"));
    e.no_hostile = get_bool(obj, "no_hostile", path);
    if (optional_field(obj, "band_label")) {
        e.band_label = get_string(obj, "band_label", path);
    }
    return e;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace trustalg::detail
