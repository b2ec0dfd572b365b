#pragma once

#include "latsym/symmetry/verify.hpp"

#include <cstdint>

namespace latsym {

/// Constructive solution sampling for the heat system: lattices from the
/// closed form, u propagated by the explicit scheme from seeded random rows.
struct HeatSamplerConfig {
    double sigma_x = 1.0;
    double sigma_t = 1.0;
    double x0 = 0.0;
    double t0 = 0.0;
    long row_length = 44;
    long steps = 10;
    int fields = 5;
    int base_points_per_field = 12;
    double amplitude = 1.0;
    std::uint64_t seed = 0;
    /// extra margin kept around base points for characteristic stencils
    long margin_m = 3;
    long margin_n = 3;
};

std::vector<SolutionSample<double>> sample_heat_solutions(const HeatSamplerConfig& cfg);

/// Constructive solution sampling for the DTTL system: two seeded random
/// initial rows advanced through the implicit three-level recursion.
/// Row direction is the internal space axis (the scheme's own spatial label
/// n); time steps the internal n axis (the scheme's label m).
struct DttlSamplerConfig {
    double alpha = 1.0;
    double sigma_x = 1.0;
    double sigma_t = 1.0;
    long row_length = 36;
    long steps = 6;
    int fields = 5;
    int base_points_per_field = 12;
    double amplitude = 0.05;
    std::uint64_t seed = 0;
    long margin_m = 2;
    long margin_n = 2;
};

std::vector<SolutionSample<double>> sample_dttl_solutions(const DttlSamplerConfig& cfg);

} // namespace latsym
