#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace lcsf {

// Distribution on the integers lo, lo+1, ..., lo + pmf.size() - 1.
struct FiniteDistribution {
    std::int64_t lo = 0;
    std::vector<double> pmf;

    std::int64_t hi() const { return lo + static_cast<std::int64_t>(pmf.size()) - 1; }
    double mean() const;
    double variance() const;
};

FiniteDistribution binomial_distribution(std::uint64_t n, double p);

// Integer map tabulated on lo .. lo + values.size() - 1.
struct TabulatedMap {
    std::int64_t lo = 0;
    std::vector<std::int64_t> values;

    std::int64_t hi() const { return lo + static_cast<std::int64_t>(values.size()) - 1; }
    std::int64_t operator()(std::int64_t x) const { return values.at(static_cast<std::size_t>(x - lo)); }
};

struct VarianceBound {
    double var_f = 0.0;  // VAR[f(B)]
    double var_b = 0.0;  // VAR[B]
    double bound = 0.0;  // right-hand side of the inequality
    bool holds = false;
};

// Discrete variance transfer: for f non-decreasing, f(j)-f(i) <= j-i, and
// f(j)-f(i) >= c (j-i) whenever j-i >= m (all on the support of B),
//   VAR[f(B)] >= c^2 (1 - 2m / (c sqrt(VAR[B]))) VAR[B].
// Throws std::invalid_argument naming the violated precondition.
VarianceBound verify_variance_lemma(const TabulatedMap& f, const FiniteDistribution& b, double c, double m);

// Continuous version: f with f' >= c gives VAR[f(B)] >= c^2 VAR[B]. The slope condition
// is checked on consecutive support points of B.
VarianceBound verify_continuous_variance_bound(const std::function<double(double)>& f, const FiniteDistribution& b,
                                               double c);

}  // namespace lcsf
