#pragma once

// End-to-end evaluation of one assessment and its text/JSON/CSV renderings.

#include <optional>
#include <string>
#include <string_view>

#include "trustalg/algebra.hpp"
#include "trustalg/catalog.hpp"

namespace trustalg {

struct EvaluationReport {
    CategoryMassVector masses;
    WeightVector weights;
    ScalarConfig signs;
    TrustEvaluation evaluation;
    StrengthInterpretation interpretation;
    double delta = 0.1;
    std::string catalog_version;
    std::string assessment_ref;

    bool operator==(const EvaluationReport&) const = default;
};

struct ReportOptions {
    ScalarConfig signs;
    std::optional<BandTable> bands;
    CapMode cap_mode = CapMode::Strict;
    InterpretationOptions interpretation;
    std::string assessment_ref;
};

/// Runs weights -> bounds -> masses -> trust mass -> strength -> label. Any
/// failure is rethrown as the same error type with the failing stage named.
EvaluationReport build_report(const PropertyCatalog& catalog, const Assessment& assessment,
                              const WeightVector& weights, const ReportOptions& options = {});

std::string report_to_json(const EvaluationReport& report);
EvaluationReport report_from_json(std::string_view json_text);
std::string render_report_text(const EvaluationReport& report);
std::string render_report_csv(const EvaluationReport& report);

/// Band table document: {"bands": [{"label", "low", "high", "parent"}]}.
/// Validated against `bounds`.
BandTable load_band_table(std::string_view json_text, const ScalarBounds& bounds);
std::string serialize_band_table(const BandTable& table);

/// Fixed six-decimal rendering used by every text and CSV output.
std::string format_fixed(double value);

} // namespace trustalg
