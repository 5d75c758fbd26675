#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lcsf/drop.hpp"
#include "lcsf/parallel.hpp"

namespace lcsf {

// Slope constants for the linear-growth event, pinned from a pilot run at n = 2000
// (see README, "Pilot constants").
inline constexpr double kDefaultSlopeK1 = 0.2;
inline constexpr double kDefaultSlopeK2 = 10.0;
inline constexpr double kDefaultEpsilon = 0.001;

// Fractions of n used by the event definitions.
struct Thresholds {
    double low = 0.45;      // E1 holds below low*n; E2, E4, E6 range over [low*n, n]
    double mid = 0.65;      // E4 score ratio
    double e3_start = 0.2;  // E3 ranges over Y-prefix lengths l in [e3_start*n, n]
};

struct ExperimentConfig {
    std::size_t n = 500;
    double p = 0.5;
    std::size_t reps = 1000;
    double k1 = kDefaultSlopeK1;
    double k2 = kDefaultSlopeK2;
    double epsilon = kDefaultEpsilon;
    std::optional<double> delta;          // default: delta_of_epsilon(epsilon, fitted rate)
    std::optional<std::size_t> D;         // default: least D >= 2 with D 2^-D < epsilon/4
    std::optional<double> gamma_match;    // default: 0.0425 epsilon / (D - 1)
    Thresholds thresholds;
    std::uint64_t seed = 1;
    InsertionMode mode = InsertionMode::PaperInterior;
    std::size_t stride = 0;  // 0 selects `grid_points` log-spaced values of k
    std::size_t grid_points = 32;
    unsigned threads = default_thread_count();

    double delta_value() const;
    std::size_t d_value() const;
    double gamma_match_value() const;
    // k values in [ceil(low*n), n] where matchings are extracted; empty when low*n < 10.
    std::vector<std::size_t> k_grid() const;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

std::size_t default_block_cutoff(double epsilon);

}  // namespace lcsf
