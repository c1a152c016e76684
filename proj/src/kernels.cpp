#include "trustalg/kernels.hpp"

#include <cstdint>

#include "trustalg/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trustalg {

Scenario make_scenario(const CategoryMassVector& masses, const WeightVector& weights,
                       const ScalarConfig& signs) {
    return Scenario{masses, weights, signs, compute_bounds(weights, signs)};
}

std::vector<KernelResult> evaluate_batch_serial(std::span<const Scenario> scenarios) {
    std::vector<KernelResult> out;
    out.reserve(scenarios.size());
    for (const auto& s : scenarios) {
        KernelResult r;
        r.trust_mass = compute_trust_mass(s.masses, s.weights, s.signs);
        r.strength = compute_strength(s.masses, s.weights);
        try {
            r.label = classify(r.trust_mass, s.bounds);
        } catch (const DomainError&) {
            r.in_range = false;
        }
        out.push_back(r);
    }
    return out;
}

std::vector<KernelResult> evaluate_batch_parallel(std::span<const Scenario> scenarios) {
    using enum RelationCategory;
    std::vector<KernelResult> out(scenarios.size());
    const auto n = static_cast<std::int64_t>(scenarios.size());

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const Scenario& s = scenarios[static_cast<std::size_t>(i)];
        const auto& m = s.masses;
        const auto& w = s.weights;
        // Same summation order as the serial path: hostile, neutral, friendly.
        double t = 0.0;
        t += m[Hostile] * s.signs[Hostile] * w[Hostile];
        t += m[Neutral] * s.signs[Neutral] * w[Neutral];
        t += m[Friendly] * s.signs[Friendly] * w[Friendly];
        double st = 0.0;
        st += m[Hostile] * w[Hostile];
        st += m[Neutral] * w[Neutral];
        st += m[Friendly] * w[Friendly];

        KernelResult& r = out[static_cast<std::size_t>(i)];
        r.trust_mass = t;
        r.strength = st;
        r.in_range = t >= s.bounds.lower - kTolerance && t <= s.bounds.upper + kTolerance;
        if (r.in_range) {
            r.label = t < s.bounds.middle_band_low    ? Hostile
                      : t > s.bounds.middle_band_high ? Friendly
                                                      : Neutral;
        }
    }
    return out;
}

int parallel_thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace trustalg
