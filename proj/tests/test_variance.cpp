#include <doctest.h>

#include <cmath>

#include "lcsf/oracles.hpp"
#include "lcsf/variance.hpp"

using namespace lcsf;

namespace {

ExperimentConfig cfg_with(std::size_t n, double p, std::size_t reps, std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.n = n;
    cfg.p = p;
    cfg.reps = reps;
    cfg.seed = seed;
    cfg.threads = 2;
    return cfg;
}

}  // namespace

TEST_CASE("a single replication is flagged as insufficient") {
    const auto cfg = cfg_with(50, 0.5, 1, 3);
    const auto row = variance_row(50, sample_ln(cfg, SimulationMethod::Coupled), cfg.seed);
    CHECK(row.insufficient);
    CHECK(row.variance == 0.0);
}

TEST_CASE("variance rows are deterministic and carry Dn samples") {
    const auto cfg = cfg_with(100, 0.5, 300, 4);
    const auto a = run_variance_scaling(cfg, {100, 200}, SimulationMethod::Coupled, 200);
    const auto b = run_variance_scaling(cfg, {100, 200}, SimulationMethod::Coupled, 200);
    REQUIRE(a.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(a[i].variance == b[i].variance);
        CHECK(a[i].var_ci.lo == b[i].var_ci.lo);
        CHECK(a[i].dn.size() == 300);
        CHECK(a[i].variance > 0.0);
        CHECK(a[i].var_ci.lo <= a[i].variance);
        CHECK(a[i].var_ci.hi >= a[i].variance);
    }
    double dn_mean = 0;
    for (double d : a[0].dn) dn_mean += d;
    CHECK(std::abs(dn_mean) < 1e-9);
}

TEST_CASE("small p still gives a positive variance") {
    const auto cfg = cfg_with(400, 0.01, 300, 5);
    const auto row = variance_row(400, sample_ln(cfg, SimulationMethod::Coupled), cfg.seed, 100);
    CHECK(row.var_over_n > 0.0);
}

TEST_CASE("coupled and direct methods agree in mean") {
    const auto cfg = cfg_with(200, 0.3, 2000, 6);
    const auto c = variance_row(200, sample_ln(cfg, SimulationMethod::Coupled), 6, 10);
    const auto d = variance_row(200, sample_ln(cfg, SimulationMethod::Direct), 6, 10);
    const double se = std::sqrt((c.variance + d.variance) / 2000);
    CHECK(std::abs(c.mean - d.mean) < 4 * se);
}

TEST_CASE("exact law against coupled simulation at n = 6") {
    const auto cmp = compare_exact_vs_coupled(cfg_with(6, 0.25, 50000, 7));
    CHECK(cmp.tv < 0.015);
    CHECK(cmp.ks < 0.015);
}

TEST_CASE("two direct samples are not rejected (null calibration)") {
    const auto cmp = compare_two_samples(cfg_with(40, 0.3, 3000, 8), SimulationMethod::Direct, SimulationMethod::Direct);
    CHECK(cmp.ks_p_value > 0.001);
}

TEST_CASE("gamma estimates") {
    auto cfg = cfg_with(1, 0.4, 20000, 9);
    const auto one = estimate_gamma(cfg, GammaMode::CaseOne);
    CHECK(one.ci.lo - 0.01 <= 0.3);
    CHECK(one.ci.hi + 0.01 >= 0.3);

    cfg = cfg_with(500, 0.1, 200, 10);
    const double low_p = estimate_gamma(cfg, GammaMode::CaseOne).mean_ratio;
    cfg.p = 0.5;
    const double high_p = estimate_gamma(cfg, GammaMode::CaseOne).mean_ratio;
    CHECK(high_p < low_p);

    cfg = cfg_with(1000, 0.5, 50, 11);
    const auto bin = estimate_gamma(cfg, GammaMode::Binary);
    CHECK(bin.mean_ratio > 0.78);
    CHECK(bin.mean_ratio < 0.84);
}

TEST_CASE("tail rate fit") {
    std::vector<LnSample> xs;
    for (std::size_t i = 0; i < 100; ++i) xs.push_back({i % 2 ? 110u : 90u, 0});
    xs.push_back({150, 0});
    const auto fit = fit_tail_rate(100, xs, {0.05, 0.3, 0.9});
    REQUIRE(fit.points.size() == 3);
    CHECK(fit.points[0].exceedances == 101);
    CHECK(fit.points[1].exceedances == 1);
    CHECK(fit.points[2].censored);
    CHECK(fit.c_hat >= 0.0);
    for (const auto& pt : fit.points) {
        if (!pt.censored) CHECK(pt.tail <= std::exp(-fit.c_hat * 100 * pt.delta * pt.delta) + 1e-12);
    }
}
