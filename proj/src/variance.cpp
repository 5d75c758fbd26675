#include "lcsf/variance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lcsf/drop.hpp"
#include "lcsf/lcs.hpp"
#include "lcsf/oracles.hpp"
#include "lcsf/parallel.hpp"
#include "lcsf/sequences.hpp"

namespace lcsf {

namespace {

// Stream index reserved for estimator-side randomness (bootstrap), disjoint from replications.
constexpr std::uint64_t kStatsStream = std::numeric_limits<std::uint64_t>::max();

std::vector<std::size_t> lengths(const std::vector<LnSample>& samples) {
    std::vector<std::size_t> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.ln);
    return out;
}

}  // namespace

SimulationMethod parse_simulation_method(std::string_view text) {
    if (text == "coupled") return SimulationMethod::Coupled;
    if (text == "direct") return SimulationMethod::Direct;
    throw std::invalid_argument("unknown method '" + std::string(text) + "', expected coupled or direct");
}

std::string_view to_string(SimulationMethod m) { return m == SimulationMethod::Coupled ? "coupled" : "direct"; }

std::vector<LnSample> sample_ln(const ExperimentConfig& cfg, SimulationMethod method, std::size_t first_rep) {
    cfg.validate();
    std::vector<LnSample> out(cfg.reps);
    parallel_for(cfg.reps, cfg.threads, [&](std::size_t i) {
        const RngStream rng(cfg.seed, first_rep + i);
        if (method == SimulationMethod::Coupled) {
            const CoupledValue v = sample_ln_coupled(cfg.n, cfg.p, rng, cfg.mode);
            out[i] = {v.ln, v.a_count};
        } else {
            const CaseOnePair pair = generate_case1(cfg.n, cfg.p, rng);
            const StrippedSequence x01 = strip_a(pair.x);
            out[i] = {lcs_bitparallel(x01.bits, pair.y), x01.a_count};
        }
    });
    return out;
}

VarianceRow variance_row(std::size_t n, const std::vector<LnSample>& samples, std::uint64_t seed,
                         std::size_t resamples) {
    VarianceRow row;
    row.n = n;
    row.reps = samples.size();
    const std::vector<std::size_t> xs = lengths(samples);
    const stats::IntegerMoments m = stats::moments_of(xs);
    row.mean = m.mean();
    row.insufficient = samples.size() < 2;
    row.variance = m.variance();
    row.var_over_n = row.variance / static_cast<double>(n);
    if (!row.insufficient) row.var_ci = stats::bootstrap_variance_ci(xs, resamples, RngStream(seed, kStatsStream, n));
    const double root = std::sqrt(static_cast<double>(n));
    for (std::size_t x : xs) row.dn.push_back((static_cast<double>(x) - row.mean) / root);
    return row;
}

std::vector<VarianceRow> run_variance_scaling(const ExperimentConfig& cfg, const std::vector<std::size_t>& ns,
                                              SimulationMethod method, std::size_t resamples) {
    std::vector<VarianceRow> rows;
    for (std::size_t n : ns) {
        ExperimentConfig c = cfg;
        c.n = n;
        rows.push_back(variance_row(n, sample_ln(c, method), cfg.seed, resamples));
    }
    return rows;
}

GammaEstimate estimate_gamma(const ExperimentConfig& cfg, GammaMode mode) {
    cfg.validate();
    std::vector<double> ratios(cfg.reps);
    parallel_for(cfg.reps, cfg.threads, [&](std::size_t r) {
        const RngStream rng(cfg.seed, r);
        std::size_t l;
        if (mode == GammaMode::Binary) {
            RngStream xr = rng.substream(0);
            RngStream yr = rng.substream(1);
            const BinarySequence x = BinarySequence::random(cfg.n, xr);
            const BinarySequence y = BinarySequence::random(cfg.n, yr);
            l = lcs_bitparallel(x, y);
        } else {
            const CaseOnePair pair = generate_case1(cfg.n, cfg.p, rng);
            l = lcs_bitparallel(strip_a(pair.x).bits, pair.y);
        }
        ratios[r] = static_cast<double>(l) / static_cast<double>(cfg.n);
    });
    GammaEstimate g;
    g.reps = cfg.reps;
    double sum = 0, sum_sq = 0;
    for (double x : ratios) sum += x;
    g.mean_ratio = sum / static_cast<double>(cfg.reps);
    for (double x : ratios) sum_sq += (x - g.mean_ratio) * (x - g.mean_ratio);
    const double sd = cfg.reps > 1 ? std::sqrt(sum_sq / static_cast<double>(cfg.reps - 1)) : 0.0;
    const double half = stats::normal_quantile(0.975) * sd / std::sqrt(static_cast<double>(cfg.reps));
    g.ci = {g.mean_ratio - half, g.mean_ratio + half};
    return g;
}

DistributionComparison compare_exact_vs_coupled(const ExperimentConfig& cfg) {
    DistributionComparison out;
    out.reference = exact_ln_law(cfg.n, cfg.p);
    const std::vector<std::size_t> xs = lengths(sample_ln(cfg, SimulationMethod::Coupled));
    out.observed = stats::empirical_pmf(xs, cfg.n);
    out.tv = stats::total_variation(out.reference, out.observed);
    out.ks = stats::ks_distance(out.reference, out.observed);
    out.reps = cfg.reps;
    return out;
}

DistributionComparison compare_two_samples(const ExperimentConfig& cfg, SimulationMethod first,
                                           SimulationMethod second) {
    DistributionComparison out;
    const std::vector<std::size_t> a = lengths(sample_ln(cfg, first, 0));
    const std::vector<std::size_t> b = lengths(sample_ln(cfg, second, cfg.reps));
    out.reference = stats::empirical_pmf(a, cfg.n);
    out.observed = stats::empirical_pmf(b, cfg.n);
    out.tv = stats::total_variation(out.reference, out.observed);
    out.ks = stats::ks_distance(out.reference, out.observed);
    const double m = static_cast<double>(cfg.reps);
    out.ks_p_value = stats::kolmogorov_tail(std::sqrt(m * m / (2.0 * m)) * out.ks);
    out.reps = cfg.reps;
    return out;
}

TailFit fit_tail_rate(std::size_t n, const std::vector<LnSample>& samples, const std::vector<double>& deltas) {
    if (samples.empty()) throw std::invalid_argument("tail fit needs samples");
    const std::vector<std::size_t> xs = lengths(samples);
    const double mean = stats::moments_of(xs).mean();
    const double reps = static_cast<double>(samples.size());
    TailFit fit;
    fit.c_hat = std::numeric_limits<double>::infinity();
    for (double d : deltas) {
        if (!(d > 0.0)) throw std::invalid_argument("tail deviation must be positive");
        TailPoint pt;
        pt.delta = d;
        const double cut = static_cast<double>(n) * d;
        for (std::size_t x : xs) {
            if (std::abs(static_cast<double>(x) - mean) >= cut - 1e-9) ++pt.exceedances;
        }
        pt.tail = static_cast<double>(pt.exceedances) / reps;
        pt.censored = pt.exceedances == 0;
        const double p_eff = pt.censored ? 3.0 / reps : pt.tail;
        pt.rate = p_eff >= 1.0 ? 0.0 : -std::log(p_eff) / (static_cast<double>(n) * d * d);
        fit.c_hat = std::min(fit.c_hat, pt.rate);
        fit.points.push_back(pt);
    }
    return fit;
}

}  // namespace lcsf
