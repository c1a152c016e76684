#include "trustalg/algebra.hpp"

#include <cmath>
#include <sstream>

#include "trustalg/error.hpp"

namespace trustalg {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

bool approx_equal(double a, double b) { return std::abs(a - b) <= kTolerance; }

// Hostile region is half-open, neutral closed, friendly half-open on the left.
std::pair<double, double> region_of(RelationCategory c, const ScalarBounds& b) {
    switch (c) {
    case RelationCategory::Hostile: return {b.lower, b.middle_band_low};
    case RelationCategory::Neutral: return {b.middle_band_low, b.middle_band_high};
    case RelationCategory::Friendly: return {b.middle_band_high, b.upper};
    }
    return {b.lower, b.upper};
}

void check_bands_match(const ScalarBounds& table, const ScalarBounds& computed) {
    if (!approx_equal(table.lower, computed.lower) || !approx_equal(table.upper, computed.upper) ||
        !approx_equal(table.middle_band_low, computed.middle_band_low) ||
        !approx_equal(table.middle_band_high, computed.middle_band_high)) {
        throw DomainError("band table was built for different scalar bounds than the evaluation");
    }
}

} // namespace

WeightVector validate_weights(double hostile, double neutral, double friendly) {
    const PerCategory<double> w{hostile, neutral, friendly};
    double sum = 0.0;
    for (auto c : kAllCategories) {
        const double x = w[c];
        if (!std::isfinite(x)) {
            throw DomainError("weight for " + std::string(display_name(c)) + " is not finite");
        }
        if (x < 0.0 || x > 1.0) {
            throw DomainError("weight for " + std::string(display_name(c)) + " is " + fmt(x) +
                              ", outside [0, 1]");
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > kTolerance) {
        throw DomainError("weights sum to " + fmt(sum) + ", expected 1");
    }
    return WeightVector{w};
}

ScalarConfig ScalarConfig::make(int hostile, int neutral, int friendly) {
    const PerCategory<int> s{hostile, neutral, friendly};
    for (auto c : kAllCategories) {
        if (s[c] != -1 && s[c] != +1) {
            throw DomainError("sign for " + std::string(display_name(c)) + " must be -1 or +1, got " +
                              std::to_string(s[c]));
        }
    }
    return ScalarConfig{s};
}

CategoryMassVector CategoryMassVector::make(double hostile, double neutral, double friendly) {
    const PerCategory<double> m{hostile, neutral, friendly};
    for (auto c : kAllCategories) {
        if (!std::isfinite(m[c]) || m[c] < -kTolerance || m[c] > 1.0 + kTolerance) {
            throw DomainError("mass for " + std::string(display_name(c)) + " is " + fmt(m[c]) +
                              ", outside [0, 1]");
        }
    }
    return CategoryMassVector{m};
}

ScalarBounds compute_bounds(const WeightVector& weights, const ScalarConfig& signs) {
    using enum RelationCategory;
    ScalarBounds b;
    b.lower = signs[Hostile] * weights[Hostile];
    for (auto c : kAllCategories) {
        if (signs[c] > 0) {
            b.upper += signs[c] * weights[c];
        }
    }
    b.middle_band_low = b.lower + weights[Hostile];
    b.middle_band_high = b.upper - signs[Friendly] * weights[Friendly];

    if (b.middle_band_low > b.middle_band_high) {
        throw DomainError("middle band is empty: [" + fmt(b.middle_band_low) + ", " +
                          fmt(b.middle_band_high) + "]");
    }
    if (b.middle_band_high > b.upper + kTolerance || b.lower > b.middle_band_low + kTolerance) {
        throw DomainError("middle band [" + fmt(b.middle_band_low) + ", " + fmt(b.middle_band_high) +
                          "] falls outside [" + fmt(b.lower) + ", " + fmt(b.upper) + "]");
    }
    return b;
}

double compute_trust_mass(const CategoryMassVector& masses, const WeightVector& weights,
                          const ScalarConfig& signs) {
    double t = 0.0;
    for (auto c : kAllCategories) {
        t += masses[c] * signs[c] * weights[c];
    }
    return t;
}

double compute_strength(const CategoryMassVector& masses, const WeightVector& weights) {
    double s = 0.0;
    for (auto c : kAllCategories) {
        s += masses[c] * weights[c];
    }
    return s;
}

RelationCategory classify(double trust_mass, const ScalarBounds& bounds) {
    if (!(trust_mass >= bounds.lower - kTolerance && trust_mass <= bounds.upper + kTolerance)) {
        throw DomainError("trust mass " + fmt(trust_mass) + " lies outside [" + fmt(bounds.lower) +
                          ", " + fmt(bounds.upper) + "]");
    }
    if (trust_mass < bounds.middle_band_low) {
        return RelationCategory::Hostile;
    }
    if (trust_mass > bounds.middle_band_high) {
        return RelationCategory::Friendly;
    }
    return RelationCategory::Neutral;
}

BandTable make_band_table(std::vector<Band> bands, const ScalarBounds& bounds) {
    if (bands.empty()) {
        throw DomainError("band table is empty");
    }
    if (!approx_equal(bands.front().low, bounds.lower)) {
        throw DomainError("first band '" + bands.front().label + "' starts at " +
                          fmt(bands.front().low) + ", expected lower bound " + fmt(bounds.lower));
    }
    if (!approx_equal(bands.back().high, bounds.upper)) {
        throw DomainError("last band '" + bands.back().label + "' ends at " + fmt(bands.back().high) +
                          ", expected upper bound " + fmt(bounds.upper));
    }
    for (std::size_t i = 0; i < bands.size(); ++i) {
        const Band& band = bands[i];
        if (band.label.empty()) {
            throw DomainError("band " + std::to_string(i) + " has no label");
        }
        if (!(band.low < band.high)) {
            throw DomainError("band '" + band.label + "' has low >= high");
        }
        if (i > 0 && !approx_equal(bands[i - 1].high, band.low)) {
            throw DomainError("bands '" + bands[i - 1].label + "' and '" + band.label +
                              "' are not contiguous");
        }
        const auto [region_low, region_high] = region_of(band.parent, bounds);
        if (band.low < region_low - kTolerance || band.high > region_high + kTolerance) {
            throw DomainError("band '" + band.label + "' [" + fmt(band.low) + ", " + fmt(band.high) +
                              "] is not inside the " + std::string(to_string(band.parent)) +
                              " region [" + fmt(region_low) + ", " + fmt(region_high) + "]");
        }
    }
    return BandTable{std::move(bands), bounds};
}

const Band& classify_extended(double trust_mass, const BandTable& table) {
    const auto& bands = table.bands();
    for (std::size_t i = 0; i + 1 < bands.size(); ++i) {
        if (trust_mass >= bands[i].low && trust_mass < bands[i].high) {
            return bands[i];
        }
    }
    const Band& last = bands.back();
    if (trust_mass >= last.low && trust_mass <= last.high) {
        return last;
    }
    // Absorb rounding at the outer edges only.
    if (trust_mass < bands.front().low && trust_mass >= bands.front().low - kTolerance) {
        return bands.front();
    }
    if (trust_mass > last.high && trust_mass <= last.high + kTolerance) {
        return last;
    }
    throw DomainError("trust mass " + fmt(trust_mass) + " is outside the band table cover [" +
                      fmt(bands.front().low) + ", " + fmt(last.high) + "]");
}

StrengthInterpretation interpret_strength(const TrustEvaluation& evaluation, double neutral_mass,
                                          double neutral_weight,
                                          const InterpretationOptions& options) {
    const double s = evaluation.strength;
    const double t = evaluation.trust_mass;
    StrengthInterpretation out;
    out.contradiction_prone = std::abs(s - 1.0) <= options.delta;
    out.fair_consistent = std::abs(s - 0.5) <= options.delta;
    // A neutral bias needs some neutral evidence to be biased towards.
    out.neutral_biased = neutral_mass > 0.0 && std::abs(s - neutral_mass * neutral_weight) <= options.delta;
    out.no_hostile = std::abs(s - t) <= kTolerance && s > 0.0 && t > 0.0;
    out.raw_neutral_distance = std::abs(s - neutral_mass);
    return out;
}

TrustEvaluation evaluate(const CategoryMassVector& masses, const WeightVector& weights,
                         const ScalarConfig& signs, const std::optional<BandTable>& bands) {
    TrustEvaluation e;
    e.bounds = compute_bounds(weights, signs);
    e.trust_mass = compute_trust_mass(masses, weights, signs);
    e.strength = compute_strength(masses, weights);
    e.label = classify(e.trust_mass, e.bounds);
    e.no_hostile = weights[RelationCategory::Hostile] * masses[RelationCategory::Hostile] == 0.0;
    if (bands) {
        check_bands_match(bands->bounds(), e.bounds);
        e.band_label = classify_extended(e.trust_mass, *bands).label;
    }
    return e;
}

} // namespace trustalg
