#include "trustalg/catalog.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "json_util.hpp"
#include "trustalg/error.hpp"

namespace trustalg {

using detail::json;

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string entry_path(std::size_t i) { return "entries[" + std::to_string(i) + "]"; }

} // namespace

std::optional<Date> parse_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
        return std::nullopt;
    }
    int y = 0;
    unsigned m = 0;
    unsigned d = 0;
    auto digits = [&](std::size_t pos, std::size_t len, auto& out) {
        const char* first = text.data() + pos;
        const auto [ptr, ec] = std::from_chars(first, first + len, out);
        return ec == std::errc{} && ptr == first + len;
    };
    if (!digits(0, 4, y) || !digits(5, 2, m) || !digits(8, 2, d)) {
        return std::nullopt;
    }
    const Date date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
    if (!date.ok()) {
        return std::nullopt;
    }
    return date;
}

std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                  static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
    return buf;
}

// ---- ValidationReport -------------------------------------------------------

bool ValidationReport::ok() const { return error_count() == 0; }

std::size_t ValidationReport::error_count() const {
    std::size_t n = 0;
    for (const auto& issue : issues) {
        n += issue.severity == Severity::Error ? 1 : 0;
    }
    return n;
}

void ValidationReport::error(std::string path, std::string message) {
    issues.push_back({Severity::Error, std::move(path), std::move(message)});
}

void ValidationReport::warning(std::string path, std::string message) {
    issues.push_back({Severity::Warning, std::move(path), std::move(message)});
}

std::string ValidationReport::summary() const {
    std::string out;
    for (const auto& issue : issues) {
        if (issue.severity != Severity::Error) {
            continue;
        }
        if (!out.empty()) {
            out += "\n";
        }
        out += issue.path + ": " + issue.message;
    }
    return out;
}

// ---- Catalog ----------------------------------------------------------------

const PropertyDef* PropertyCatalog::find(std::string_view id) const {
    for (const auto& p : doc_.properties) {
        if (p.id == id) {
            return &p;
        }
    }
    return nullptr;
}

std::size_t PropertyCatalog::count(RelationCategory c) const {
    std::size_t n = 0;
    for (const auto& p : doc_.properties) {
        n += p.category == c ? 1 : 0;
    }
    return n;
}

ValidationReport validate_catalog(const CatalogDocument& doc) {
    ValidationReport report;
    std::set<std::string> seen;
    PerCategory<double> totals{0.0, 0.0, 0.0};
    PerCategory<int> counts{0, 0, 0};

    for (std::size_t i = 0; i < doc.properties.size(); ++i) {
        const auto& p = doc.properties[i];
        const std::string path = "properties[" + std::to_string(i) + "]";
        if (p.id.empty()) {
            report.error(path + ".id", "property id is empty");
        } else if (!seen.insert(p.id).second) {
            report.error(path + ".id", "duplicate property id '" + p.id + "'");
        }
        if (!std::isfinite(p.cap) || p.cap < 0.0 || p.cap > 1.0) {
            report.error(path + ".cap", "cap " + fmt(p.cap) + " of '" + p.id + "' is outside [0, 1]");
        }
        totals[p.category] += p.cap;
        counts[p.category] += 1;
    }
    for (auto c : kAllCategories) {
        const std::string name{display_name(c)};
        if (counts[c] == 0) {
            report.error("properties", name + " category has no properties");
        } else if (std::abs(totals[c] - 1.0) > kTolerance) {
            report.error("properties", name + " caps total " + fmt(totals[c]) + ", expected 1");
        }
    }
    return report;
}

PropertyCatalog make_catalog(CatalogDocument doc) {
    const auto report = validate_catalog(doc);
    if (!report.ok()) {
        throw DomainError("invalid catalog:\n" + report.summary());
    }
    return PropertyCatalog{std::move(doc)};
}

CatalogDocument parse_catalog_document(std::string_view json_text) {
    const json root = detail::parse_json(json_text, "catalog");
    detail::expect_object(root, "");
    CatalogDocument doc;
    doc.version = detail::get_string(root, "version", "");
    const json& props = detail::get_array(root, "properties", "");
    for (std::size_t i = 0; i < props.size(); ++i) {
        const std::string path = "properties[" + std::to_string(i) + "]";
        const json& p = props[i];
        detail::expect_object(p, path);
        doc.properties.push_back(PropertyDef{
            detail::get_string(p, "id", path),
            detail::get_category(p, "category", path),
            detail::get_number(p, "cap", path),
            detail::get_string(p, "description", path),
        });
    }
    return doc;
}

PropertyCatalog load_catalog(std::string_view json_text) {
    return make_catalog(parse_catalog_document(json_text));
}

std::string serialize_catalog(const PropertyCatalog& catalog) {
    json props = json::array();
    for (const auto& p : catalog.properties()) {
        props.push_back(json{{"id", p.id},
                             {"category", std::string(to_string(p.category))},
                             {"cap", p.cap},
                             {"description", p.description}});
    }
    return detail::dump(json{{"version", catalog.version()}, {"properties", std::move(props)}});
}

const PropertyCatalog& default_catalog() {
    using enum RelationCategory;
    static const PropertyCatalog catalog = make_catalog(CatalogDocument{
        "usa-gbr-2001-2005/1",
        {
            {"f.P1", Friendly, 0.5, "War ally and mutual defense pact during war."},
            {"f.P2", Friendly, 0.2,
             "Share/trade nuclear technologies and materials (e.g. uranium) or mass destruction "
             "weapon for warfare. Arm collaboration in R&D for warfare. Financial aid for warfare."},
            {"f.P3", Friendly, 0.1, "Head of the state political sentiment and relationships."},
            {"f.P4", Friendly, 0.1,
             "Loan or share strategic technologies and equipment. Civil nuclear trade and "
             "agreement. Defense pact that enable during peace."},
            {"f.P5", Friendly, 0.075, "Share military intelligent. Large scale of joint military drills."},
            {"f.P6", Friendly, 0.025, "Global War on Terrorism (GWOT)"},
            {"n.P1", Neutral, 0.25, "Member of UN or nation state recognized by UN."},
            {"n.P2", Neutral, 0.35,
             "Economic cooperation. E.g. Bilateral trade, multilateral open market, free trade."},
            {"n.P3", Neutral, 0.40,
             "Diplomatic mission (embassy or representative). Disaster aid and peacekeeping."},
            {"h.P1", Hostile, 0.5, "War Enemy"},
            {"h.P2", Hostile, 0.2,
             "Strong disapproval of share/trade/usage nuclear technologies and materials, or mass "
             "destruction weapon. E.g. nuclear testing, intercontinental ballistic missile (ICBM) "
             "development and testing, and arms races."},
            {"h.P3", Hostile, 0.075,
             "Economy blockage or sanction. Embargo or boycott. (e.g. large scale product boycott, "
             "ban visa)"},
            {"h.P4", Hostile, 0.125,
             "Closed border military aggressive or hostility. Including land, air, maritime "
             "trespassing and terrorism. *peaceful dispute through international law is not "
             "included."},
            {"h.P5", Hostile, 0.05, "Political sentiments and threat by the head of state."},
            {"h.P6", Hostile, 0.05,
             "Kill or arrest another nation diplomats. Espionage. (e.g. spying and hacking)"},
        }});
    return catalog;
}

// ---- Assessment -------------------------------------------------------------

Assessment parse_assessment(std::string_view json_text) {
    const json root = detail::parse_json(json_text, "assessment");
    detail::expect_object(root, "");
    Assessment a;
    a.subject = detail::get_string(root, "subject", "");
    a.object = detail::get_string(root, "object", "");
    a.window = detail::date_range_from_json(detail::get_object(root, "window", ""), "window");
    const json& entries = detail::get_array(root, "entries", "");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string path = entry_path(i);
        const json& e = entries[i];
        detail::expect_object(e, path);
        AssessmentEntry entry;
        entry.property = detail::get_string(e, "property", path);
        entry.value = detail::get_number(e, "value", path);
        if (const json* ev = detail::optional_field(e, "evidence")) {
            if (!ev->is_array()) {
                throw ParseError(path + ".evidence: expected an array");
            }
            for (std::size_t k = 0; k < ev->size(); ++k) {
                const std::string epath = path + ".evidence[" + std::to_string(k) + "]";
                const json& link = (*ev)[k];
                detail::expect_object(link, epath);
                entry.evidence.push_back(EvidenceLink{
                    detail::get_date(link, "date", epath),
                    detail::get_string(link, "source", epath),
                    detail::get_string(link, "summary", epath),
                });
            }
        }
        a.entries.push_back(std::move(entry));
    }
    if (detail::optional_field(root, "notes")) {
        a.notes = detail::get_string(root, "notes", "");
    }
    return a;
}

std::string serialize_assessment(const Assessment& a) {
    json entries = json::array();
    for (const auto& e : a.entries) {
        json evidence = json::array();
        for (const auto& link : e.evidence) {
            evidence.push_back(
                json{{"date", format_date(link.date)}, {"source", link.source}, {"summary", link.summary}});
        }
        entries.push_back(json{{"property", e.property}, {"value", e.value}, {"evidence", std::move(evidence)}});
    }
    json root{{"subject", a.subject},
              {"object", a.object},
              {"window", detail::date_range_to_json(a.window)},
              {"entries", std::move(entries)}};
    if (!a.notes.empty()) {
        root["notes"] = a.notes;
    }
    return detail::dump(root);
}

ValidationReport validate_assessment(const Assessment& a, const PropertyCatalog& catalog, CapMode mode) {
    ValidationReport report;
    if (a.subject.empty()) {
        report.error("subject", "subject nation id is empty");
    }
    if (a.object.empty()) {
        report.error("object", "object nation id is empty");
    }
    const bool window_ok = a.window.start <= a.window.end;
    if (!window_ok) {
        report.error("window", "start " + format_date(a.window.start) + " is after end " +
                                   format_date(a.window.end));
    }

    PerCategory<double> sums{0.0, 0.0, 0.0};
    std::map<std::string, std::size_t> first_seen;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        const auto& e = a.entries[i];
        const std::string path = entry_path(i);
        const PropertyDef* def = catalog.find(e.property);
        if (def == nullptr) {
            report.error(path + ".property", "unknown property id '" + e.property + "'");
        }
        if (auto [it, inserted] = first_seen.emplace(e.property, i); !inserted) {
            report.error(path + ".property", "property '" + e.property + "' already assessed in " +
                                                 entry_path(it->second));
        }
        if (!std::isfinite(e.value) || e.value < 0.0 || e.value > 1.0) {
            report.error(path + ".value", "value " + fmt(e.value) + " is outside [0, 1]");
        } else if (def != nullptr && mode == CapMode::Strict && e.value > def->cap + kTolerance) {
            report.error(path + ".value", "value " + fmt(e.value) + " exceeds the cap " + fmt(def->cap) +
                                              " of '" + def->id + "'");
        }
        if (def != nullptr && std::isfinite(e.value)) {
            sums[def->category] += e.value;
        }
        if (e.evidence.empty()) {
            report.warning(path + ".evidence", "no evidence recorded for '" + e.property + "'");
        }
        for (std::size_t k = 0; k < e.evidence.size(); ++k) {
            const auto& link = e.evidence[k];
            if (window_ok && !a.window.contains(link.date)) {
                report.error(path + ".evidence[" + std::to_string(k) + "].date",
                             "evidence dated " + format_date(link.date) + " lies outside the window " +
                                 format_date(a.window.start) + " .. " + format_date(a.window.end));
            }
        }
    }
    for (auto c : kAllCategories) {
        if (sums[c] > 1.0 + kTolerance) {
            report.error("entries", std::string(display_name(c)) + " mass " + fmt(sums[c]) +
                                        " exceeds 1");
        }
    }
    return report;
}

CategoryMassVector aggregate_masses(const Assessment& a, const PropertyCatalog& catalog, CapMode mode) {
    PerCategory<double> sums{0.0, 0.0, 0.0};
    std::set<std::string_view> seen;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        const auto& e = a.entries[i];
        const PropertyDef* def = catalog.find(e.property);
        if (def == nullptr) {
            throw DomainError(entry_path(i) + ": unknown property id '" + e.property + "'");
        }
        if (!seen.insert(e.property).second) {
            throw DomainError(entry_path(i) + ": property '" + e.property + "' assessed twice");
        }
        if (!std::isfinite(e.value) || e.value < 0.0 || e.value > 1.0) {
            throw DomainError(entry_path(i) + ": value " + fmt(e.value) + " is outside [0, 1]");
        }
        if (mode == CapMode::Strict && e.value > def->cap + kTolerance) {
            throw DomainError(entry_path(i) + ": value " + fmt(e.value) + " exceeds the cap " +
                              fmt(def->cap) + " of '" + def->id + "'");
        }
        sums[def->category] += e.value;
    }
    for (auto c : kAllCategories) {
        if (sums[c] > 1.0 + kTolerance) {
            throw DomainError(std::string(display_name(c)) + " mass " + fmt(sums[c]) + " exceeds 1");
        }
    }
    // Sums within tolerance above 1 are reported as exactly 1.
    return CategoryMassVector::make(std::min(sums.hostile(), 1.0), std::min(sums.neutral(), 1.0),
                                    std::min(sums.friendly(), 1.0));
}

} // namespace trustalg
