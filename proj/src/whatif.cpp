#include "trustalg/whatif.hpp"

#include <cmath>
#include <sstream>

#include "json_util.hpp"
#include "trustalg/error.hpp"
#include "trustalg/kernels.hpp"
#include "trustalg/report.hpp"

namespace trustalg {

using detail::json;

std::vector<double> sweep_grid(const SensitivitySpec& spec) {
    for (double v : {spec.from, spec.to}) {
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
            throw DomainError("sweep endpoint " + format_fixed(v) + " is outside [0, 1]");
        }
    }
    if (!std::isfinite(spec.step) || spec.step <= 0.0) {
        throw DomainError("sweep step must be positive");
    }
    const double span = std::abs(spec.to - spec.from);
    const auto count = static_cast<std::size_t>(std::floor(span / spec.step + kTolerance)) + 1;
    const double direction = spec.to >= spec.from ? 1.0 : -1.0;
    std::vector<double> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        // Computed from the index, not accumulated, so the grid does not drift.
        grid.push_back(spec.from + direction * static_cast<double>(i) * spec.step);
    }
    return grid;
}

WeightVector renormalize_weights(const WeightVector& base, RelationCategory swept, double value) {
    const double rest = 1.0 - base[swept];
    PerCategory<double> w;
    for (auto c : kAllCategories) {
        if (c == swept) {
            w[c] = value;
        } else if (rest > kTolerance) {
            w[c] = base[c] * (1.0 - value) / rest;
        } else if (value < 1.0 - kTolerance) {
            throw DomainError("cannot renormalize: the weights other than " +
                              std::string(to_string(swept)) + " are all zero");
        } else {
            w[c] = 0.0;
        }
    }
    return validate_weights(w.hostile(), w.neutral(), w.friendly());
}

SweepResult run_sweep(const PropertyCatalog& catalog, const Assessment& assessment,
                      const WeightVector& base_weights, const SensitivitySpec& spec,
                      const ScalarConfig& signs, CapMode mode) {
    const auto grid = sweep_grid(spec);
    const auto base_masses = aggregate_masses(assessment, catalog, mode);
    const auto base = evaluate(base_masses, base_weights, signs);

    // Scenario construction validates and may throw, so it stays serial.
    std::vector<Scenario> scenarios;
    scenarios.reserve(grid.size());
    for (double v : grid) {
        if (const auto* wt = std::get_if<WeightTarget>(&spec.target)) {
            scenarios.push_back(make_scenario(base_masses, renormalize_weights(base_weights, wt->category, v), signs));
        } else {
            const auto& id = std::get<PropertyTarget>(spec.target).property;
            if (catalog.find(id) == nullptr) {
                throw DomainError("unknown property id '" + id + "'");
            }
            Assessment varied = assessment;
            bool found = false;
            for (auto& e : varied.entries) {
                if (e.property == id) {
                    e.value = v;
                    found = true;
                }
            }
            if (!found) {
                varied.entries.push_back(AssessmentEntry{id, v, {}});
            }
            scenarios.push_back(make_scenario(aggregate_masses(varied, catalog, mode), base_weights, signs));
        }
    }

    const auto results = evaluate_batch_parallel(scenarios);
    SweepResult out;
    out.base_label = base.label;
    out.base_trust_mass = base.trust_mass;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        if (!r.in_range) {
            throw DomainError("sweep value " + format_fixed(grid[i]) + " puts the trust mass " +
                              format_fixed(r.trust_mass) + " outside the bounds");
        }
        SweepRow row{grid[i], scenarios[i].weights.values(), scenarios[i].masses.values(), r.trust_mass,
                     r.strength, r.label, r.label != base.label};
        if (row.flipped && !out.first_flip) {
            out.first_flip = i;
        }
        out.rows.push_back(row);
    }
    return out;
}

std::string render_sweep_text(const SweepResult& result, const SensitivitySpec& spec) {
    std::ostringstream os;
    if (const auto* wt = std::get_if<WeightTarget>(&spec.target)) {
        os << "sweeping weight of " << to_string(wt->category);
    } else {
        os << "sweeping value of " << std::get<PropertyTarget>(spec.target).property;
    }
    os << " from " << format_fixed(spec.from) << " to " << format_fixed(spec.to) << " step "
       << format_fixed(spec.step) << "\n";
    os << "base label " << to_string(result.base_label) << " (trust mass "
       << format_fixed(result.base_trust_mass) << ")\n\n";
    os << "    value   trust_mass     strength  label\n";
    for (const auto& row : result.rows) {
        char line[128];
        std::snprintf(line, sizeof line, "%9s %12s %12s  %-8s%s\n", format_fixed(row.value).c_str(),
                      format_fixed(row.trust_mass).c_str(), format_fixed(row.strength).c_str(),
                      std::string(to_string(row.label)).c_str(), row.flipped ? "  *flip" : "");
        os << line;
    }
    os << "\n";
    if (result.first_flip) {
        const auto& row = result.rows[*result.first_flip];
        os << "first flip at " << format_fixed(row.value) << ": " << to_string(result.base_label) << " -> "
           << to_string(row.label) << "\n";
    } else {
        os << "no flip\n";
    }
    return os.str();
}

std::string render_sweep_csv(const SweepResult& result) {
    std::ostringstream os;
    os << "value,w_hostile,w_neutral,w_friendly,m_hostile,m_neutral,m_friendly,trust_mass,strength,label,flipped\n";
    for (const auto& r : result.rows) {
        os << format_fixed(r.value) << ',' << format_fixed(r.weights.hostile()) << ','
           << format_fixed(r.weights.neutral()) << ',' << format_fixed(r.weights.friendly()) << ','
           << format_fixed(r.masses.hostile()) << ',' << format_fixed(r.masses.neutral()) << ','
           << format_fixed(r.masses.friendly()) << ',' << format_fixed(r.trust_mass) << ','
           << format_fixed(r.strength) << ',' << to_string(r.label) << ',' << (r.flipped ? 1 : 0) << "\n";
    }
    return os.str();
}

std::string render_sweep_json(const SweepResult& result) {
    json rows = json::array();
    for (const auto& r : result.rows) {
        rows.push_back(json{{"value", r.value},
                            {"weights", detail::per_category_to_json(r.weights)},
                            {"masses", detail::per_category_to_json(r.masses)},
                            {"trust_mass", r.trust_mass},
                            {"strength", r.strength},
                            {"label", std::string(to_string(r.label))},
                            {"flipped", r.flipped}});
    }
    json root{{"base_label", std::string(to_string(result.base_label))},
              {"base_trust_mass", result.base_trust_mass},
              {"rows", std::move(rows)}};
    root["first_flip"] = result.first_flip ? json(result.rows[*result.first_flip].value) : json(nullptr);
    return detail::dump(root);
}

} // namespace trustalg
