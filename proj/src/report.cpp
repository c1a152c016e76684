#include "trustalg/report.hpp"

#include <cstdio>
#include <sstream>

#include "json_util.hpp"
#include "trustalg/error.hpp"

namespace trustalg {

using detail::json;

namespace {

template <typename F>
auto stage(std::string_view name, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const DomainError& e) {
        throw DomainError("stage '" + std::string(name) + "': " + e.what());
    } catch (const ParseError& e) {
        throw ParseError("stage '" + std::string(name) + "': " + e.what());
    }
}

json interpretation_to_json(const StrengthInterpretation& i) {
    return json{{"contradiction_prone", i.contradiction_prone},
                {"fair_consistent", i.fair_consistent},
                {"neutral_biased", i.neutral_biased},
                {"no_hostile", i.no_hostile},
                {"raw_neutral_distance", i.raw_neutral_distance}};
}

StrengthInterpretation interpretation_from_json(const json& obj, const std::string& path) {
    StrengthInterpretation i;
    i.contradiction_prone = detail::get_bool(obj, "contradiction_prone", path);
    i.fair_consistent = detail::get_bool(obj, "fair_consistent", path);
    i.neutral_biased = detail::get_bool(obj, "neutral_biased", path);
    i.no_hostile = detail::get_bool(obj, "no_hostile", path);
    i.raw_neutral_distance = detail::get_number(obj, "raw_neutral_distance", path);
    return i;
}

std::string sign_char(int s) { return s < 0 ? "-" : "+"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string format_fixed(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    std::string out = buf;
    if (out == "-0.000000") {
        out = "0.000000";
    }
    return out;
}

EvaluationReport build_report(const PropertyCatalog& catalog, const Assessment& assessment,
                              const WeightVector& weights, const ReportOptions& options) {
    const auto bounds = stage("bounds", [&] { return compute_bounds(weights, options.signs); });
    const auto masses = stage("masses", [&] {
        const auto report = validate_assessment(assessment, catalog, options.cap_mode);
        if (!report.ok()) {
            throw DomainError("invalid assessment:\n" + report.summary());
        }
        return aggregate_masses(assessment, catalog, options.cap_mode);
    });
    TrustEvaluation evaluation;
    evaluation.bounds = bounds;
    evaluation.trust_mass = compute_trust_mass(masses, weights, options.signs);
    evaluation.strength = compute_strength(masses, weights);
    evaluation.label = stage("label", [&] { return classify(evaluation.trust_mass, bounds); });
    evaluation.no_hostile = weights[RelationCategory::Hostile] * masses[RelationCategory::Hostile] == 0.0;
    if (options.bands) {
        evaluation.band_label = stage("band", [&] {
            // Same checks as evaluate(); keeps the two paths field-for-field equal.
            return evaluate(masses, weights, options.signs, options.bands).band_label;
        });
    }

    return EvaluationReport{
        masses,
        weights,
        options.signs,
        evaluation,
        interpret_strength(evaluation, masses[RelationCategory::Neutral],
                           weights[RelationCategory::Neutral], options.interpretation),
        options.interpretation.delta,
        catalog.version(),
        options.assessment_ref.empty() ? assessment.subject + "->" + assessment.object
                                       : options.assessment_ref,
    };
}

std::string report_to_json(const EvaluationReport& r) {
    json inputs{{"masses", detail::per_category_to_json(r.masses.values())},
                {"weights", detail::per_category_to_json(r.weights.values())},
                {"signs", detail::signs_to_json(r.signs)}};
    return detail::dump(json{{"inputs", std::move(inputs)},
                             {"evaluation", detail::evaluation_to_json(r.evaluation)},
                             {"interpretation", interpretation_to_json(r.interpretation)},
                             {"delta", r.delta},
                             {"provenance",
                              {{"catalog_version", r.catalog_version}, {"assessment", r.assessment_ref}}}});
}

EvaluationReport report_from_json(std::string_view json_text) {
    const json root = detail::parse_json(json_text, "report");
    detail::expect_object(root, "");
    const json& inputs = detail::get_object(root, "inputs", "");
    const auto m = detail::per_category_from_json(detail::get_object(inputs, "masses", "inputs"), "inputs.masses");
    const auto w = detail::per_category_from_json(detail::get_object(inputs, "weights", "inputs"), "inputs.weights");
    const json& prov = detail::get_object(root, "provenance", "");
    try {
        return EvaluationReport{
            CategoryMassVector::make(m.hostile(), m.neutral(), m.friendly()),
            validate_weights(w.hostile(), w.neutral(), w.friendly()),
            detail::signs_from_json(detail::get_object(inputs, "signs", "inputs"), "inputs.signs"),
            detail::evaluation_from_json(detail::get_object(root, "evaluation", ""), "evaluation"),
            interpretation_from_json(detail::get_object(root, "interpretation", ""), "interpretation"),
            detail::get_number(root, "delta", ""),
            detail::get_string(prov, "catalog_version", "provenance"),
            detail::get_string(prov, "assessment", "provenance"),
        };
    } catch (const DomainError& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

std::string render_report_text(const EvaluationReport& r) {
    using enum RelationCategory;
    const auto& e = r.evaluation;
    std::ostringstream os;
    os << "assessment   " << r.assessment_ref << "\n";
    os << "catalog      " << r.catalog_version << "\n";
    os << "weights      hostile " << format_fixed(r.weights[Hostile]) << "  neutral "
       << format_fixed(r.weights[Neutral]) << "  friendly " << format_fixed(r.weights[Friendly]) << "\n";
    os << "signs        hostile " << sign_char(r.signs[Hostile]) << "  neutral " << sign_char(r.signs[Neutral])
       << "  friendly " << sign_char(r.signs[Friendly]) << "\n";
    os << "bounds       lower " << format_fixed(e.bounds.lower) << "  upper " << format_fixed(e.bounds.upper)
       << "  middle band [" << format_fixed(e.bounds.middle_band_low) << ", "
       << format_fixed(e.bounds.middle_band_high) << "]\n";
    os << "masses       hostile " << format_fixed(r.masses[Hostile]) << "  neutral "
       << format_fixed(r.masses[Neutral]) << "  friendly " << format_fixed(r.masses[Friendly]) << "\n";
    os << "trust mass   " << format_fixed(e.trust_mass) << "\n";
    os << "strength     " << format_fixed(e.strength) << "\n";
    os << "label        " << to_string(e.label) << "\n";
    if (e.band_label) {
        os << "band         " << *e.band_label << "\n";
    }
    const auto& i = r.interpretation;
    os << "reading      (delta " << format_fixed(r.delta) << ")\n";
    os << "  contradiction-prone  " << yes_no(i.contradiction_prone) << "\n";
    os << "  fair/consistent      " << yes_no(i.fair_consistent) << "\n";
    os << "  neutral-biased       " << yes_no(i.neutral_biased) << " (raw distance "
       << format_fixed(i.raw_neutral_distance) << ")\n";
    os << "  no hostile evidence  " << yes_no(i.no_hostile) << "\n";
    return os.str();
}

std::string render_report_csv(const EvaluationReport& r) {
    using enum RelationCategory;
    const auto& e = r.evaluation;
    const auto& i = r.interpretation;
    std::ostringstream os;
    os << "assessment,catalog_version,w_hostile,w_neutral,w_friendly,s_hostile,s_neutral,s_friendly,"
          "lower,upper,middle_band_low,middle_band_high,m_hostile,m_neutral,m_friendly,trust_mass,"
          "strength,label,band,contradiction_prone,fair_consistent,neutral_biased,no_hostile\n";
    os << r.assessment_ref << ',' << r.catalog_version << ',' << format_fixed(r.weights[Hostile]) << ','
       << format_fixed(r.weights[Neutral]) << ',' << format_fixed(r.weights[Friendly]) << ','
       << r.signs[Hostile] << ',' << r.signs[Neutral] << ',' << r.signs[Friendly] << ','
       << format_fixed(e.bounds.lower) << ',' << format_fixed(e.bounds.upper) << ','
       << format_fixed(e.bounds.middle_band_low) << ',' << format_fixed(e.bounds.middle_band_high) << ','
       << format_fixed(r.masses[Hostile]) << ',' << format_fixed(r.masses[Neutral]) << ','
       << format_fixed(r.masses[Friendly]) << ',' << format_fixed(e.trust_mass) << ','
       << format_fixed(e.strength) << ',' << to_string(e.label) << ',' << e.band_label.value_or("") << ','
       << i.contradiction_prone << ',' << i.fair_consistent << ',' << i.neutral_biased << ','
       << i.no_hostile << "\n";
    return os.str();
}

BandTable load_band_table(std::string_view json_text, const ScalarBounds& bounds) {
    const json root = detail::parse_json(json_text, "band table");
    detail::expect_object(root, "");
    const json& arr = detail::get_array(root, "bands", "");
    std::vector<Band> bands;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "bands[" + std::to_string(i) + "]";
        detail::expect_object(arr[i], path);
        bands.push_back(Band{detail::get_string(arr[i], "label", path), detail::get_number(arr[i], "low", path),
                             detail::get_number(arr[i], "high", path),
                             detail::get_category(arr[i], "parent", path)});
    }
    return make_band_table(std::move(bands), bounds);
}

std::string serialize_band_table(const BandTable& table) {
    json arr = json::array();
    for (const auto& b : table.bands()) {
        arr.push_back(json{{"label", b.label}, {"low", b.low}, {"high", b.high},
                           {"parent", std::string(to_string(b.parent))}});
    }
    return detail::dump(json{{"bands", std::move(arr)}});
}

} // namespace trustalg
