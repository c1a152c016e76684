#pragma once

// Batch evaluation of many (masses, weights, signs) scenarios. The serial
// reference goes through the public algebra functions one scenario at a time;
// the parallel kernel is a flat OpenMP loop over the same arithmetic and must
// agree with it bit for bit.

#include <span>
#include <vector>

#include "trustalg/algebra.hpp"

namespace trustalg {

/// One prepared scenario. Bounds are computed (and validated) up front so the
/// parallel loop never throws.
struct Scenario {
    CategoryMassVector masses;
    WeightVector weights;
    ScalarConfig signs;
    ScalarBounds bounds;
};

Scenario make_scenario(const CategoryMassVector& masses, const WeightVector& weights,
                       const ScalarConfig& signs = {});

struct KernelResult {
    double trust_mass = 0.0;
    double strength = 0.0;
    RelationCategory label = RelationCategory::Neutral;
    /// False when trust_mass fell outside the bounds; label is then meaningless.
    bool in_range = true;

    bool operator==(const KernelResult&) const = default;
};

std::vector<KernelResult> evaluate_batch_serial(std::span<const Scenario> scenarios);
std::vector<KernelResult> evaluate_batch_parallel(std::span<const Scenario> scenarios);

/// Number of threads the parallel kernel will use (1 without OpenMP).
int parallel_thread_count();

} // namespace trustalg
