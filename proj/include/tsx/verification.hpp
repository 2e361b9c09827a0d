#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tsx {

struct SweepConfig {
    /// Random simplex points drawn for each support size.
    std::size_t points_per_support = 10000;
    std::size_t support_min = 2;
    std::size_t support_max = 12;
    std::vector<double> alphas = {0.1, 0.5, 0.9, 1.0, 1.1, 2.0, 3.0, 10.0};
    /// Range for the N-indexed checks (threshold, bracketing curves, monotonicity).
    std::uint64_t n_min = 3;
    std::uint64_t n_max = 10000;
    std::uint64_t seed = 20240607;
    /// Test hook: adds this offset to every Tsallis extropy the sweep evaluates.
    double extropy_fault = 0.0;
};

struct PropertyCheck {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    std::string counterexample;  // first violation, empty when passed
};

/// Runs every numerical property of the measures over random simplex points
/// and integer ranges. Deterministic for a fixed config.
std::vector<PropertyCheck> run_property_sweep(const SweepConfig& config);

/// Draws a Dirichlet(1, ..., 1) point; roughly a quarter of draws get some
/// coordinates zeroed to exercise the boundary of the simplex.
template <typename Rng>
std::vector<double> random_simplex_point(Rng& rng, std::size_t n);

}  // namespace tsx

#include "tsx/detail/simplex_sampling.hpp"
