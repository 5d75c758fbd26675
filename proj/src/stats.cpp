#include "lcsf/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

namespace lcsf::stats {

double IntegerMoments::mean() const {
    if (count == 0) return 0.0;
    return static_cast<double>(sum) / static_cast<double>(count);
}

double IntegerMoments::variance() const {
    if (count < 2) return 0.0;
    // count * sum_sq - sum^2 is exact in 128 bits for the sample sizes used here.
    const unsigned __int128 scaled = static_cast<unsigned __int128>(count) * sum_sq - sum * sum;
    const double c = static_cast<double>(count);
    return static_cast<double>(scaled) / (c * (c - 1.0));
}

IntegerMoments moments_of(std::span<const std::size_t> xs) {
    IntegerMoments m;
    for (auto x : xs) m.add(x);
    return m;
}

Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials, double confidence) {
    if (trials == 0) return {0.0, 1.0};
    if (successes > trials) throw std::invalid_argument("successes exceed trials");
    const double alpha = 1.0 - confidence;
    const auto s = static_cast<double>(successes);
    const auto t = static_cast<double>(trials);
    Interval ci;
    ci.lo = successes == 0 ? 0.0 : boost::math::quantile(boost::math::beta_distribution<>(s, t - s + 1), alpha / 2);
    ci.hi = successes == trials ? 1.0
                                : boost::math::quantile(boost::math::beta_distribution<>(s + 1, t - s), 1 - alpha / 2);
    return ci;
}

Interval bootstrap_variance_ci(std::span<const std::size_t> xs, std::size_t resamples, RngStream rng,
                               double confidence) {
    if (xs.size() < 2 || resamples == 0) return {0.0, 0.0};
    std::vector<double> vars;
    vars.reserve(resamples);
    for (std::size_t b = 0; b < resamples; ++b) {
        IntegerMoments m;
        for (std::size_t i = 0; i < xs.size(); ++i) m.add(xs[rng.uniform_below(xs.size())]);
        vars.push_back(m.variance());
    }
    std::sort(vars.begin(), vars.end());
    const double alpha = 1.0 - confidence;
    auto at = [&](double q) {
        const auto idx = static_cast<std::size_t>(std::floor(q * static_cast<double>(vars.size() - 1)));
        return vars[std::min(idx, vars.size() - 1)];
    };
    return {at(alpha / 2), at(1 - alpha / 2)};
}

ChiSquare chi_square(std::span<const std::uint64_t> counts, std::span<const double> probs) {
    if (counts.size() != probs.size() || counts.size() < 2) throw std::invalid_argument("chi-square needs >= 2 cells");
    double total = 0;
    for (auto c : counts) total += static_cast<double>(c);
    ChiSquare out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double expected = total * probs[i];
        const double d = static_cast<double>(counts[i]) - expected;
        out.statistic += d * d / expected;
    }
    out.dof = static_cast<double>(counts.size() - 1);
    out.p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared(out.dof), out.statistic));
    return out;
}

ChiSquare chi_square_uniform(std::span<const std::uint64_t> counts) {
    std::vector<double> probs(counts.size(), 1.0 / static_cast<double>(counts.size()));
    return chi_square(counts, probs);
}

std::vector<double> empirical_pmf(std::span<const std::size_t> xs, std::size_t max_value) {
    std::vector<double> pmf(max_value + 1, 0.0);
    for (auto x : xs) {
        if (x > max_value) throw std::out_of_range("sample exceeds pmf support");
        pmf[x] += 1.0;
    }
    for (auto& v : pmf) v /= static_cast<double>(xs.size());
    return pmf;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    const std::size_t n = std::max(p.size(), q.size());
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = i < p.size() ? p[i] : 0.0;
        const double b = i < q.size() ? q[i] : 0.0;
        acc += std::abs(a - b);
    }
    return acc / 2;
}

double ks_distance(std::span<const double> p, std::span<const double> q) {
    const std::size_t n = std::max(p.size(), q.size());
    double fp = 0;
    double fq = 0;
    double best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        fp += i < p.size() ? p[i] : 0.0;
        fq += i < q.size() ? q[i] : 0.0;
        best = std::max(best, std::abs(fp - fq));
    }
    return best;
}

double kolmogorov_tail(double lambda) {
    if (lambda <= 0) return 1.0;
    if (lambda < 0.2) return 1.0;  // series converges slowly; the tail is 1 to double precision here
    double acc = 0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        acc += (k % 2 ? 1.0 : -1.0) * term;
        if (term < 1e-17) break;
    }
    return std::clamp(2 * acc, 0.0, 1.0);
}

double normal_quantile(double prob) { return boost::math::quantile(boost::math::normal(), prob); }

}  // namespace lcsf::stats
