#include "lcsf/config.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lcsf/oracles.hpp"

namespace lcsf {

std::size_t default_block_cutoff(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    std::size_t d = 2;
    while (static_cast<double>(d) * std::ldexp(1.0, -static_cast<int>(d)) >= epsilon / 4.0) ++d;
    return d;
}

double ExperimentConfig::delta_value() const {
    return delta ? *delta : delta_of_epsilon(epsilon, fitted_containment_rate());
}

std::size_t ExperimentConfig::d_value() const { return D ? *D : default_block_cutoff(epsilon); }

double ExperimentConfig::gamma_match_value() const {
    return gamma_match ? *gamma_match : 0.0425 * epsilon / static_cast<double>(d_value() - 1);
}

std::vector<std::size_t> ExperimentConfig::k_grid() const {
    std::vector<std::size_t> grid;
    const double lo_real = thresholds.low * static_cast<double>(n);
    if (lo_real < 10.0) return grid;
    const auto lo = static_cast<std::size_t>(std::ceil(lo_real - 1e-9));
    if (stride > 0) {
        for (std::size_t k = lo; k <= n; k += stride) grid.push_back(k);
        if (grid.back() != n) grid.push_back(n);
        return grid;
    }
    const std::size_t points = std::max<std::size_t>(grid_points, 2);
    const double ratio = static_cast<double>(n) / static_cast<double>(lo);
    for (std::size_t i = 0; i < points; ++i) {
        const double x = static_cast<double>(lo) * std::pow(ratio, static_cast<double>(i) / (points - 1));
        grid.push_back(std::clamp(static_cast<std::size_t>(std::llround(x)), lo, n));
    }
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

void ExperimentConfig::validate() const {
    auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
    if (n < 1) fail("--n must be at least 1");
    if (!(p > 0.0 && p < 1.0)) fail("--p must lie strictly between 0 and 1");
    if (reps < 1) fail("--reps must be at least 1");
    if (!(k1 > 0.0 && k1 <= 1.0)) fail("--k1 must lie in (0, 1]");
    if (!(k2 > 0.0)) fail("--k2 must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0)) fail("--epsilon must lie in (0, 1)");
    if (delta && !(*delta > 0.0 && *delta < 0.5)) fail("--delta must lie in (0, 0.5)");
    if (D && *D < 2) fail("--D must be at least 2");
    if (gamma_match && !(*gamma_match > 0.0)) fail("gamma_match must be positive");
    for (double t : {thresholds.low, thresholds.mid, thresholds.e3_start}) {
        if (!(t > 0.0 && t < 1.0)) fail("thresholds must lie in (0, 1)");
    }
    if (threads < 1) fail("--threads must be at least 1");
}

}  // namespace lcsf
