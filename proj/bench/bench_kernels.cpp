// Serial reference vs OpenMP batch kernel on random scenarios.
//
//   bench_kernels [scenarios] [repeats]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <vector>

#include "trustalg/kernels.hpp"

using namespace trustalg;

namespace {

std::vector<Scenario> random_scenarios(std::size_t n) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Scenario> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double a = u(rng), b = u(rng);
        if (a > b) std::swap(a, b);
        out.push_back(make_scenario(CategoryMassVector::make(u(rng), u(rng), u(rng)), validate_weights(a, b - a, 1.0 - b)));
    }
    return out;
}

template <typename F>
double time_ms(F&& f, int repeats, std::vector<KernelResult>& last) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < repeats; ++r) last = f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / repeats;
}

} // namespace

int main(int argc, char** argv) {
    const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2'000'000;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;
    const auto scenarios = random_scenarios(n);

    std::vector<KernelResult> serial, parallel;
    const double serial_ms = time_ms([&] { return evaluate_batch_serial(scenarios); }, repeats, serial);
    const double parallel_ms = time_ms([&] { return evaluate_batch_parallel(scenarios); }, repeats, parallel);

    std::cout << "scenarios " << n << "  repeats " << repeats << "  threads " << parallel_thread_count() << "\n";
    std::cout << "serial    " << serial_ms << " ms\n";
    std::cout << "parallel  " << parallel_ms << " ms\n";
    std::cout << "speedup   " << serial_ms / parallel_ms << "x\n";
    std::cout << "agree     " << (serial == parallel ? "yes" : "NO") << "\n";
    return serial == parallel ? 0 : 1;
}
