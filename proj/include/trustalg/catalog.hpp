#pragma once

// Property catalogs (one capped list of trust properties per category) and
// evidence-backed assessments that aggregate into category masses.

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trustalg/algebra.hpp"
#include "trustalg/category.hpp"

namespace trustalg {

using Date = std::chrono::year_month_day;

/// Parses YYYY-MM-DD. Returns nullopt for anything else, including
/// impossible dates such as 2005-02-30.
std::optional<Date> parse_date(std::string_view text);
std::string format_date(const Date& d);

/// Closed calendar interval.
struct DateRange {
    Date start;
    Date end;

    bool contains(const Date& d) const { return start <= d && d <= end; }
    bool contains(const DateRange& r) const { return start <= r.start && r.end <= end; }
    bool overlaps(const DateRange& r) const { return start <= r.end && r.start <= end; }
    bool operator==(const DateRange&) const = default;
    auto operator<=>(const DateRange&) const = default;
};

struct PropertyDef {
    std::string id;
    RelationCategory category = RelationCategory::Neutral;
    double cap = 0.0;
    std::string description;

    bool operator==(const PropertyDef&) const = default;
};

/// Parsed but not yet validated catalog document.
struct CatalogDocument {
    std::string version;
    std::vector<PropertyDef> properties;

    bool operator==(const CatalogDocument&) const = default;
};

enum class Severity { Error, Warning };

struct ValidationIssue {
    Severity severity = Severity::Error;
    std::string path;
    std::string message;

    bool operator==(const ValidationIssue&) const = default;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const;
    std::size_t error_count() const;
    void error(std::string path, std::string message);
    void warning(std::string path, std::string message);
    /// Errors only, one per line.
    std::string summary() const;
};

class PropertyCatalog {
public:
    const std::string& version() const { return doc_.version; }
    const std::vector<PropertyDef>& properties() const { return doc_.properties; }
    const PropertyDef* find(std::string_view id) const;
    /// Number of properties in one category (the per-category cardinality).
    std::size_t count(RelationCategory c) const;
    bool operator==(const PropertyCatalog&) const = default;

private:
    explicit PropertyCatalog(CatalogDocument doc) : doc_(std::move(doc)) {}
    CatalogDocument doc_;
    friend PropertyCatalog make_catalog(CatalogDocument);
};

/// Unique ids, caps in [0,1], every category present and totalling 1.
ValidationReport validate_catalog(const CatalogDocument& doc);

/// Throws DomainError listing every violation.
PropertyCatalog make_catalog(CatalogDocument doc);

/// Throws ParseError with line or field location.
CatalogDocument parse_catalog_document(std::string_view json_text);

PropertyCatalog load_catalog(std::string_view json_text);
std::string serialize_catalog(const PropertyCatalog& catalog);

/// Friendly, neutral and hostile property tables from the USA-GB case study.
const PropertyCatalog& default_catalog();

struct EvidenceLink {
    Date date;
    std::string source;
    std::string summary;

    bool operator==(const EvidenceLink&) const = default;
};

struct AssessmentEntry {
    std::string property;
    double value = 0.0;
    std::vector<EvidenceLink> evidence;

    bool operator==(const AssessmentEntry&) const = default;
};

struct Assessment {
    std::string subject;
    std::string object;
    DateRange window;
    std::vector<AssessmentEntry> entries;
    std::string notes;

    bool operator==(const Assessment&) const = default;
};

Assessment parse_assessment(std::string_view json_text);
std::string serialize_assessment(const Assessment& assessment);

/// Strict bounds each observed value by its property's cap; Free only by [0,1].
enum class CapMode { Strict, Free };

/// Reports every problem without stopping at the first. Entries with no
/// evidence produce warnings, not errors.
ValidationReport validate_assessment(const Assessment& assessment, const PropertyCatalog& catalog,
                                     CapMode mode = CapMode::Strict);

/// Per-category sum of observed values. Throws DomainError on an unknown id,
/// a repeated property, a value outside the active cap mode, or a category
/// sum above 1.
CategoryMassVector aggregate_masses(const Assessment& assessment, const PropertyCatalog& catalog,
                                    CapMode mode = CapMode::Strict);

} // namespace trustalg
