#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "lcsf/config.hpp"
#include "lcsf/stats.hpp"

namespace lcsf {

// Coupled: L^a(n - Na) from the drop scheme. Direct: LCS of a generated (X, Y) pair.
enum class SimulationMethod { Coupled, Direct };
SimulationMethod parse_simulation_method(std::string_view text);
std::string_view to_string(SimulationMethod m);

struct LnSample {
    std::size_t ln = 0;
    std::size_t a_count = 0;
};

// One sample per replication r = first_rep .. first_rep + cfg.reps - 1, stream r of cfg.seed.
std::vector<LnSample> sample_ln(const ExperimentConfig& cfg, SimulationMethod method, std::size_t first_rep = 0);

struct VarianceRow {
    std::size_t n = 0;
    std::size_t reps = 0;
    double mean = 0.0;
    double variance = 0.0;   // unbiased
    double var_over_n = 0.0;
    stats::Interval var_ci;  // bootstrap, of the variance
    bool insufficient = false;  // fewer than two replications: variance undefined
    std::vector<double> dn;  // (Ln - mean) / sqrt(n), in replication order
};

VarianceRow variance_row(std::size_t n, const std::vector<LnSample>& samples, std::uint64_t seed,
                         std::size_t resamples = 1000);
std::vector<VarianceRow> run_variance_scaling(const ExperimentConfig& cfg, const std::vector<std::size_t>& ns,
                                              SimulationMethod method, std::size_t resamples = 1000);

// Mean of L_n / n with a normal 95% interval.
enum class GammaMode { Binary, CaseOne };
struct GammaEstimate {
    double mean_ratio = 0.0;
    stats::Interval ci;
    std::size_t reps = 0;
};
// Binary: LCS of two independent fair n-bit strings. CaseOne: direct (X, Y) draws with cfg.p.
GammaEstimate estimate_gamma(const ExperimentConfig& cfg, GammaMode mode);

struct DistributionComparison {
    std::vector<double> reference;  // exact law, or the first sample's pmf
    std::vector<double> observed;
    double tv = 0.0;
    double ks = 0.0;
    double ks_p_value = 1.0;  // two-sample mode only (asymptotic Kolmogorov tail)
    std::size_t reps = 0;
};

// Exact law of L_n by enumeration (n <= 10) against cfg.reps coupled simulations.
DistributionComparison compare_exact_vs_coupled(const ExperimentConfig& cfg);
// Two samples of cfg.reps draws each on disjoint replication streams.
DistributionComparison compare_two_samples(const ExperimentConfig& cfg, SimulationMethod first,
                                           SimulationMethod second);

// Empirical tail P(|Ln - mean| >= n d) and the rate -ln P / (n d^2). With no exceedance
// the rate is reported from the 95% upper bound 3/reps on the tail.
struct TailPoint {
    double delta = 0.0;
    std::size_t exceedances = 0;
    double tail = 0.0;
    double rate = 0.0;
    bool censored = false;  // no exceedance; rate is a lower bound
};
struct TailFit {
    std::vector<TailPoint> points;
    double c_hat = 0.0;  // min rate over points, so tail <= exp(-c_hat n d^2) at every d
};
TailFit fit_tail_rate(std::size_t n, const std::vector<LnSample>& samples, const std::vector<double>& deltas);

}  // namespace lcsf
