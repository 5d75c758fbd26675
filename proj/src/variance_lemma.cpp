#include "lcsf/variance_lemma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/distributions/binomial.hpp>

namespace lcsf {

double FiniteDistribution::mean() const {
    double m = 0;
    for (std::size_t i = 0; i < pmf.size(); ++i) m += pmf[i] * static_cast<double>(lo + static_cast<std::int64_t>(i));
    return m;
}

double FiniteDistribution::variance() const {
    const double mu = mean();
    double v = 0;
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        const double d = static_cast<double>(lo + static_cast<std::int64_t>(i)) - mu;
        v += pmf[i] * d * d;
    }
    return v;
}

FiniteDistribution binomial_distribution(std::uint64_t n, double p) {
    FiniteDistribution d;
    d.lo = 0;
    const boost::math::binomial_distribution<> law(static_cast<double>(n), p);
    for (std::uint64_t k = 0; k <= n; ++k) d.pmf.push_back(boost::math::pdf(law, static_cast<double>(k)));
    return d;
}

namespace {

// Support of b trimmed to cells with positive mass.
std::pair<std::int64_t, std::int64_t> support(const FiniteDistribution& b) {
    std::int64_t lo = b.hi() + 1;
    std::int64_t hi = b.lo - 1;
    for (std::size_t i = 0; i < b.pmf.size(); ++i) {
        if (b.pmf[i] > 0) {
            const std::int64_t x = b.lo + static_cast<std::int64_t>(i);
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    }
    if (lo > hi) throw std::invalid_argument("distribution has no mass");
    return {lo, hi};
}

VarianceBound finish(const FiniteDistribution& b, const std::function<double(std::int64_t)>& f, double rhs_factor) {
    VarianceBound out;
    out.var_b = b.variance();
    double mean_f = 0;
    for (std::size_t i = 0; i < b.pmf.size(); ++i) mean_f += b.pmf[i] * f(b.lo + static_cast<std::int64_t>(i));
    for (std::size_t i = 0; i < b.pmf.size(); ++i) {
        if (b.pmf[i] == 0) continue;
        const double d = f(b.lo + static_cast<std::int64_t>(i)) - mean_f;
        out.var_f += b.pmf[i] * d * d;
    }
    out.bound = rhs_factor * out.var_b;
    // relative slack for floating summation
    out.holds = out.var_f >= out.bound - 1e-9 * std::max(1.0, std::abs(out.bound));
    return out;
}

}  // namespace

VarianceBound verify_variance_lemma(const TabulatedMap& f, const FiniteDistribution& b, double c, double m) {
    if (!(c > 0.0) || !(m > 0.0)) throw std::invalid_argument("constants c and m must be positive");
    const auto [lo, hi] = support(b);
    if (lo < f.lo || hi > f.hi()) throw std::invalid_argument("f is not tabulated on the support of B");
    for (std::int64_t x = lo; x < hi; ++x) {
        const std::int64_t step = f(x + 1) - f(x);
        if (step < 0) throw std::invalid_argument("f is not non-decreasing at " + std::to_string(x));
        if (step > 1) throw std::invalid_argument("f grows faster than slope 1 at " + std::to_string(x));
    }
    // growth: f(j) - f(i) >= c (j - i) for j - i >= ceil(m), via suffix minima of f(j) - c j
    const auto window = static_cast<std::int64_t>(std::ceil(m - 1e-12));
    const std::size_t span = static_cast<std::size_t>(hi - lo + 1);
    std::vector<double> suffix_min(span + 1, INFINITY);
    for (std::size_t idx = span; idx-- > 0;) {
        const std::int64_t j = lo + static_cast<std::int64_t>(idx);
        suffix_min[idx] = std::min(suffix_min[idx + 1], static_cast<double>(f(j)) - c * static_cast<double>(j));
    }
    for (std::int64_t i = lo; i + window <= hi; ++i) {
        const double lhs = static_cast<double>(f(i)) - c * static_cast<double>(i);
        if (suffix_min[static_cast<std::size_t>(i + window - lo)] < lhs - 1e-9) {
            throw std::invalid_argument("f grows slower than c over a window starting at " + std::to_string(i));
        }
    }
    const double var_b = b.variance();
    const double factor = var_b > 0 ? c * c * (1.0 - 2.0 * m / (c * std::sqrt(var_b))) : 0.0;
    return finish(b, [&f](std::int64_t x) { return static_cast<double>(f(x)); }, factor);
}

VarianceBound verify_continuous_variance_bound(const std::function<double(double)>& f, const FiniteDistribution& b,
                                               double c) {
    if (!(c > 0.0)) throw std::invalid_argument("constant c must be positive");
    const auto [lo, hi] = support(b);
    for (std::int64_t x = lo; x < hi; ++x) {
        const double slope = f(static_cast<double>(x + 1)) - f(static_cast<double>(x));
        if (slope < c - 1e-12) throw std::invalid_argument("f has slope below c near " + std::to_string(x));
    }
    return finish(b, [&f](std::int64_t x) { return f(static_cast<double>(x)); }, c * c);
}

}  // namespace lcsf
