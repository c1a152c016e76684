#pragma once

// Trust calculus: weights, signed interval bounds, trust mass, strength and
// classification. Everything here is a pure function of its arguments.

#include <optional>
#include <string>
#include <vector>

#include "trustalg/category.hpp"

namespace trustalg {

/// Absolute tolerance for normalization, range and equality checks.
inline constexpr double kTolerance = 1e-9;

/// Normalized per-category emphasis. Each weight is in [0,1] and the three sum
/// to 1 within kTolerance. Only constructible through validate_weights().
class WeightVector {
public:
    double operator[](RelationCategory c) const { return w_[c]; }
    const PerCategory<double>& values() const { return w_; }
    bool operator==(const WeightVector&) const = default;

private:
    explicit WeightVector(PerCategory<double> w) : w_(w) {}
    PerCategory<double> w_;
    friend WeightVector validate_weights(double, double, double);
};

/// Throws DomainError naming the offending weight or the bad sum.
WeightVector validate_weights(double hostile, double neutral, double friendly);

/// Per-category sign of the interval scale, each exactly -1 or +1.
class ScalarConfig {
public:
    /// Hostile -1, neutral +1, friendly +1.
    ScalarConfig() : s_(-1, +1, +1) {}

    /// Throws DomainError if any sign is not -1 or +1.
    static ScalarConfig make(int hostile, int neutral, int friendly);

    int operator[](RelationCategory c) const { return s_[c]; }
    bool is_default() const { return *this == ScalarConfig{}; }
    bool operator==(const ScalarConfig&) const = default;

private:
    explicit ScalarConfig(PerCategory<int> s) : s_(s) {}
    PerCategory<int> s_;
};

/// Interval scale [lower, upper] with the closed neutral band inside it.
struct ScalarBounds {
    double lower = 0.0;
    double upper = 0.0;
    double middle_band_low = 0.0;
    double middle_band_high = 0.0;

    bool operator==(const ScalarBounds&) const = default;
};

/// Aggregated property mass per category, each in [0,1]. The three are
/// independent; their sum may exceed 1.
class CategoryMassVector {
public:
    CategoryMassVector() = default;

    /// Throws DomainError if any mass lies outside [0,1] (kTolerance slack).
    static CategoryMassVector make(double hostile, double neutral, double friendly);

    double operator[](RelationCategory c) const { return m_[c]; }
    const PerCategory<double>& values() const { return m_; }
    bool operator==(const CategoryMassVector&) const = default;

private:
    explicit CategoryMassVector(PerCategory<double> m) : m_(m) {}
    PerCategory<double> m_{0.0, 0.0, 0.0};
};

struct Band {
    std::string label;
    double low = 0.0;
    double high = 0.0;
    RelationCategory parent = RelationCategory::Neutral;

    bool operator==(const Band&) const = default;
};

/// Finer-grained classification bands refining the three categories. Built
/// only through make_band_table(), which checks the bands against the bounds.
class BandTable {
public:
    const std::vector<Band>& bands() const { return bands_; }
    const ScalarBounds& bounds() const { return bounds_; }
    bool operator==(const BandTable&) const = default;

private:
    BandTable(std::vector<Band> bands, ScalarBounds bounds)
        : bands_(std::move(bands)), bounds_(bounds) {}
    std::vector<Band> bands_;
    ScalarBounds bounds_;
    friend BandTable make_band_table(std::vector<Band>, const ScalarBounds&);
};

/// Bands must be ordered, contiguous, exactly cover [lower, upper] and each sit
/// inside its parent's region. Throws DomainError otherwise.
BandTable make_band_table(std::vector<Band> bands, const ScalarBounds& bounds);

struct TrustEvaluation {
    double trust_mass = 0.0;
    double strength = 0.0;
    RelationCategory label = RelationCategory::Neutral;
    ScalarBounds bounds;
    bool no_hostile = false;
    std::optional<std::string> band_label;

    bool operator==(const TrustEvaluation&) const = default;
};

/// Throws DomainError when the middle band is empty or falls outside
/// [lower, upper] for the given sign choice.
ScalarBounds compute_bounds(const WeightVector& weights, const ScalarConfig& signs);

double compute_trust_mass(const CategoryMassVector& masses, const WeightVector& weights,
                          const ScalarConfig& signs);

double compute_strength(const CategoryMassVector& masses, const WeightVector& weights);

/// Hostile below the middle band, friendly above it, neutral inside (closed).
/// Throws DomainError if trust_mass lies outside the bounds.
RelationCategory classify(double trust_mass, const ScalarBounds& bounds);

/// Bands are low-inclusive and high-exclusive except the last, which is closed.
const Band& classify_extended(double trust_mass, const BandTable& bands);

struct InterpretationOptions {
    double delta = 0.1;
};

struct StrengthInterpretation {
    bool contradiction_prone = false;
    bool fair_consistent = false;
    bool neutral_biased = false;
    bool no_hostile = false;
    /// Unweighted |strength - neutral mass|, reported alongside the weighted flag.
    double raw_neutral_distance = 0.0;

    bool operator==(const StrengthInterpretation&) const = default;
};

/// Qualitative reading of the strength value. `neutral_weight` scales the
/// neutral mass for the neutral-bias comparison.
StrengthInterpretation interpret_strength(const TrustEvaluation& evaluation, double neutral_mass,
                                          double neutral_weight,
                                          const InterpretationOptions& options = {});

TrustEvaluation evaluate(const CategoryMassVector& masses, const WeightVector& weights,
                         const ScalarConfig& signs = {},
                         const std::optional<BandTable>& bands = std::nullopt);

} // namespace trustalg
