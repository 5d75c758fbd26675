#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lcsf/rng.hpp"

namespace lcsf::stats {

// Mean and unbiased variance from exact integer power sums, so the result does not
// depend on the order in which samples were produced.
struct IntegerMoments {
    std::uint64_t count = 0;
    unsigned __int128 sum = 0;
    unsigned __int128 sum_sq = 0;

    void add(std::uint64_t x) {
        ++count;
        sum += x;
        sum_sq += static_cast<unsigned __int128>(x) * x;
    }
    void merge(const IntegerMoments& o) {
        count += o.count;
        sum += o.sum;
        sum_sq += o.sum_sq;
    }
    double mean() const;
    // Unbiased (count - 1 denominator); 0 when count < 2.
    double variance() const;
};

IntegerMoments moments_of(std::span<const std::size_t> xs);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Clopper-Pearson interval for a binomial proportion.
Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials, double confidence = 0.95);

// Percentile bootstrap interval of the unbiased sample variance.
Interval bootstrap_variance_ci(std::span<const std::size_t> xs, std::size_t resamples, RngStream rng,
                               double confidence = 0.95);

// Pearson chi-square statistic and upper-tail p-value against equal cell probabilities.
struct ChiSquare {
    double statistic = 0.0;
    double dof = 0.0;
    double p_value = 1.0;
};
ChiSquare chi_square_uniform(std::span<const std::uint64_t> counts);
ChiSquare chi_square(std::span<const std::uint64_t> counts, std::span<const double> probs);

// Empirical pmf over 0..max_value from integer samples.
std::vector<double> empirical_pmf(std::span<const std::size_t> xs, std::size_t max_value);
double total_variation(std::span<const double> p, std::span<const double> q);
// sup |F_p - F_q| over the common integer support.
double ks_distance(std::span<const double> p, std::span<const double> q);
// Asymptotic Kolmogorov tail P(K > lambda).
double kolmogorov_tail(double lambda);

// Standard normal quantile.
double normal_quantile(double prob);

}  // namespace lcsf::stats
