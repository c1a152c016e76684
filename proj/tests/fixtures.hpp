#pragma once

// Paper-derived fixtures and small helpers shared by the unit and acceptance
// suites.

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "trustalg/algebra.hpp"
#include "trustalg/catalog.hpp"

namespace fixtures {

inline std::string data_path(const std::string& rel) { return std::string(TRUSTALG_DATA_DIR) + "/" + rel; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline trustalg::Date ymd(int y, unsigned m, unsigned d) {
    return trustalg::Date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
}

// Generic worked example: masses (h 0.9, n 0.6, f 0.15), weights 0.45/0.10/0.45.
inline trustalg::CategoryMassVector table1_masses() { return trustalg::CategoryMassVector::make(0.9, 0.6, 0.15); }
inline trustalg::WeightVector table1_weights() { return trustalg::validate_weights(0.45, 0.10, 0.45); }

// USA toward GBR, 2001-2005: masses (h 0, n 1, f 0.70), weights 0.40/0.20/0.40.
inline trustalg::CategoryMassVector usa_gbr_masses() { return trustalg::CategoryMassVector::make(0.0, 1.0, 0.70); }
inline trustalg::WeightVector usa_gbr_weights() { return trustalg::validate_weights(0.40, 0.20, 0.40); }

inline trustalg::Assessment usa_gbr_assessment() {
    return trustalg::parse_assessment(read_file(data_path("assessments/usa_gbr_2001_2005.json")));
}

inline trustalg::Assessment table1_assessment() {
    return trustalg::parse_assessment(read_file(data_path("assessments/table1_example.json")));
}

inline trustalg::PropertyCatalog generic_catalog() {
    return trustalg::load_catalog(read_file(data_path("catalog/generic.json")));
}

/// Uniformly random valid weight vector; a third of the time one weight is
/// forced to exactly zero.
inline trustalg::WeightVector random_weights(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    double h = a, n = b - a, f = 1.0 - b;
    switch (std::uniform_int_distribution<int>(0, 8)(rng)) {
    case 0: h = 0.0; n = 1.0 - f; break;
    case 1: n = 0.0; f = 1.0 - h; break;
    case 2: f = 0.0; n = 1.0 - h; break;
    default: break;
    }
    return trustalg::validate_weights(h, n, f);
}

/// Random mass in [0,1], exactly zero one time in five.
inline double random_mass(std::mt19937_64& rng) {
    if (std::uniform_int_distribution<int>(0, 4)(rng) == 0) return 0.0;
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline trustalg::CategoryMassVector random_masses(std::mt19937_64& rng) {
    const double h = random_mass(rng), n = random_mass(rng), f = random_mass(rng);
    return trustalg::CategoryMassVector::make(h, n, f);
}

} // namespace fixtures
