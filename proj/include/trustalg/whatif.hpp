#pragma once

// What-if sweeps: vary one weight or one property value over a grid and report
// where the classification flips relative to the base configuration.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trustalg/algebra.hpp"
#include "trustalg/catalog.hpp"

namespace trustalg {

struct WeightTarget {
    RelationCategory category;
};

struct PropertyTarget {
    std::string property;
};

/// The sweep runs from `from` toward `to` (either direction) in increments of
/// `step`. When a weight is swept the other two are rescaled proportionally so
/// the three still sum to 1.
struct SensitivitySpec {
    std::variant<WeightTarget, PropertyTarget> target;
    double from = 0.0;
    double to = 0.0;
    double step = 0.0;
};

/// Throws DomainError if the range leaves [0,1] or the step is not positive.
std::vector<double> sweep_grid(const SensitivitySpec& spec);

struct SweepRow {
    double value = 0.0;
    PerCategory<double> weights;
    PerCategory<double> masses;
    double trust_mass = 0.0;
    double strength = 0.0;
    RelationCategory label = RelationCategory::Neutral;
    bool flipped = false;

    bool operator==(const SweepRow&) const = default;
};

struct SweepResult {
    RelationCategory base_label = RelationCategory::Neutral;
    double base_trust_mass = 0.0;
    std::vector<SweepRow> rows;
    std::optional<std::size_t> first_flip;

    bool operator==(const SweepResult&) const = default;
};

/// Rescales the non-swept weights. Throws DomainError when they are both
/// zero and the swept weight is below 1.
WeightVector renormalize_weights(const WeightVector& base, RelationCategory swept, double value);

SweepResult run_sweep(const PropertyCatalog& catalog, const Assessment& assessment,
                      const WeightVector& base_weights, const SensitivitySpec& spec,
                      const ScalarConfig& signs = {}, CapMode mode = CapMode::Strict);

std::string render_sweep_text(const SweepResult& result, const SensitivitySpec& spec);
std::string render_sweep_csv(const SweepResult& result);
std::string render_sweep_json(const SweepResult& result);

} // namespace trustalg
