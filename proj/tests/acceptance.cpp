// One PASS/FAIL line per acceptance criterion. Seeds are fixed per criterion (1000 + number).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lcsf/drop.hpp"
#include "lcsf/events.hpp"
#include "lcsf/increment.hpp"
#include "lcsf/lcs.hpp"
#include "lcsf/matchings.hpp"
#include "lcsf/oracles.hpp"
#include "lcsf/stats.hpp"
#include "lcsf/variance.hpp"
#include "support.hpp"

using namespace lcsf;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

int failures = 0;

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

void run(const char* id, const char* title, const std::function<Verdict()>& body, double budget_seconds = 0) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_seconds > 0 && secs > budget_seconds) {
        v.pass = false;
        v.detail += fmt(" [over budget %.0fs]", budget_seconds);
    }
    if (!v.pass) ++failures;
    std::printf("criterion %-3s %s  %s: %s (%.1fs)\n", id, v.pass ? "PASS" : "FAIL", title, v.detail.c_str(), secs);
    std::fflush(stdout);
}

ExperimentConfig config(std::size_t n, double p, std::size_t reps, std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.n = n;
    cfg.p = p;
    cfg.reps = reps;
    cfg.seed = seed;
    return cfg;
}

Verdict worked_lcs_values() {
    const auto lcs1 = lcs_length(TriSequence::from_string("a11a1000"), test::bits("00110011"));
    const auto lcs2 = lcs_length(TriSequence::from_string("011a0a"), test::bits("101011"));
    const auto nu = renewal_embed(test::bits("001"), test::bits("10101000111")).nu;
    const bool ok = lcs1 == 4 && lcs2 == 3 && nu == std::vector<std::size_t>{2, 4, 5};
    return {ok, fmt("lcs=%zu (want 4), lcs=%zu (want 3), nu=(%zu,%zu,%zu) (want 2,4,5)", lcs1, lcs2, nu.size() > 0 ? nu[0] : 0,
                    nu.size() > 1 ? nu[1] : 0, nu.size() > 2 ? nu[2] : 0)};
}

Verdict worked_alignment() {
    const auto m = SubstitutionMatrix::binary(2, 1, 1, 3, 0);
    const auto score = align_score(test::bits("0101"), test::bits("1100"), m);
    return {score == 6, fmt("align_score(0101, 1100) = %lld, want 6 (the diagonal alignment scores 1+3+2+1 = 7)",
                            static_cast<long long>(score))};
}

Verdict expected_l10() {
    const auto e = exact_E_L10();
    const double diff = std::abs(e.value - 6.97844);
    return {diff <= 5e-4, fmt("E[L10] = %llu/%llu = %s, |diff| = %.2e (tol 5e-4)",
                              static_cast<unsigned long long>(e.numerator), static_cast<unsigned long long>(e.denominator),
                              e.decimal.c_str(), diff)};
}

Verdict representation() {
    const auto cmp = compare_exact_vs_coupled(config(8, 0.25, 1000000, 1003));
    return {cmp.tv < 0.01, fmt("TV = %.5f (tol 0.01), KS = %.5f, 1e6 coupled draws", cmp.tv, cmp.ks)};
}

Verdict drop_uniformity() {
    std::string detail;
    bool ok = true;
    for (auto mode : {InsertionMode::PaperInterior, InsertionMode::FullUniform}) {
        for (std::size_t k : {2u, 3u, 4u}) {
            std::vector<std::uint64_t> counts(std::size_t{1} << k, 0);
            for (std::size_t t = 0; t < 1000000; ++t) {
                RngStream rng(1004, t);
                const auto z = grow_drop_string(k, rng, mode);
                std::size_t code = 0;
                for (std::size_t i = 0; i < k; ++i) code |= static_cast<std::size_t>(z[i]) << i;
                ++counts[code];
            }
            const auto chi = stats::chi_square_uniform(counts);
            ok = ok && chi.p_value > 1e-3;
            detail += fmt("%s k=%zu p=%.3f; ", std::string(to_string(mode)).c_str(), k, chi.p_value);
        }
    }
    return {ok, detail + "chi-square, 1e6 trials each, reject below 1e-3"};
}

Verdict variance_scaling() {
    auto cfg = config(100, 0.5, 10000, 1005);
    const auto rows = run_variance_scaling(cfg, {100, 400, 1600, 6400}, SimulationMethod::Coupled, 1000);
    double lo = INFINITY, hi = 0;
    bool positive = true;
    std::string detail;
    for (const auto& r : rows) {
        positive = positive && r.var_over_n > 0.0;
        lo = std::min(lo, r.var_over_n);
        hi = std::max(hi, r.var_over_n);
        detail += fmt("n=%zu var/n=%.4f; ", r.n, r.var_over_n);
    }
    const double ratio = hi > 0 ? lo / hi : 0.0;
    return {positive && ratio >= 1.0 / 3.0, detail + fmt("min/max = %.3f (need >= 1/3)", ratio)};
}

Verdict matching_invariants() {
    std::size_t not_max = 0, mixed = 0, not_minimal = 0, exhaustive_pairs = 0;
    RngStream rng(1006, 0);
    for (int t = 0; t < 10000; ++t) {
        const auto z = BinarySequence::random(rng.uniform_below(201), rng);
        const auto y = BinarySequence::random(rng.uniform_below(201), rng);
        const Matching mt = minimal_matching(z, y);
        if (mt.size() != lcs_bitparallel(z, y) || !is_valid_matching(mt, z, y)) ++not_max;
        if (!check_single_color(classify_matches(mt, z, y))) ++mixed;
    }
    auto exhaustive = [&](const BinarySequence& z, const BinarySequence& y) {
        ++exhaustive_pairs;
        const Matching got = minimal_matching(z, y);
        std::vector<Matching> all;
        Matching cur;
        test::enumerate_matchings(z, y, got.size(), cur, all);
        for (const auto& other : all) {
            if (!(other == got) && precedes_or_equal(other, got)) {
                ++not_minimal;
                return;
            }
        }
    };
    for (std::size_t lz = 0; lz <= 7; ++lz) {
        for (std::size_t ly = 0; ly <= 7; ++ly) {
            for (std::uint64_t a = 0; a < (std::uint64_t{1} << lz); ++a) {
                for (std::uint64_t b = 0; b < (std::uint64_t{1} << ly); ++b) {
                    exhaustive(test::from_mask(a, lz), test::from_mask(b, ly));
                }
            }
        }
    }
    for (int t = 0; t < 1000; ++t) {
        const auto z = BinarySequence::random(rng.uniform_below(11), rng);
        const auto y = BinarySequence::random(rng.uniform_below(11), rng);
        exhaustive(z, y);
    }
    const bool ok = not_max == 0 && mixed == 0 && not_minimal == 0;
    return {ok, fmt("1e4 random pairs (len <= 200): %zu not maximal, %zu mixed-colour; %zu exhaustive pairs "
                    "(all len <= 7, 1e3 random len <= 10): %zu not minimal",
                    not_max, mixed, exhaustive_pairs, not_minimal)};
}

Verdict inclusions() {
    auto cfg = config(500, 0.5, 1000, 1007);
    const double delta = cfg.delta_value();
    const auto rep = check_inclusions(cfg);
    const bool ok = !rep.vacuous && rep.e3e4_e6_violations == 0 && rep.e4e5e6_e2_violations == 0;
    return {ok, fmt("eps=%.3g delta=%.4f (0.5/(1-delta)=%.4f) D=%zu gamma=%.3g; E3&E4k=>E6k: %zu/%zu violated; "
                    "E4&E5&E6k=>E2k: %zu/%zu violated; grid %zu points",
                    cfg.epsilon, delta, 0.5 / (1 - delta), rep.D, rep.gamma_match, rep.e3e4_e6_violations,
                    rep.e3e4_e6_checks, rep.e4e5e6_e2_violations, rep.e4e5e6_e2_checks, rep.grid_size)};
}

Verdict increment_bound() {
    const auto w = worked_increment_state();
    const auto worked = enumerate_increment(w.z, w.y, InsertionMode::PaperInterior, w.matching);
    auto cfg = config(200, 0.5, 100, 1008);
    const auto rows = increment_probability_check(cfg, 2000);
    std::size_t viol_k = 0, viol_k1 = 0;
    for (const auto& r : rows) {
        viol_k += r.violates_k;
        viol_k1 += r.violates_k_minus_1;
    }
    const bool ok = worked.probability >= 0.5 * 2.0 / 6.0 && viol_k == 0;
    return {ok, fmt("worked state P = %llu/%llu = %.4f >= %.4f; 100 states at n=200, 2000 replays each: "
                    "%zu violations (k), %zu violations (k-1)",
                    static_cast<unsigned long long>(worked.hits), static_cast<unsigned long long>(worked.outcomes),
                    worked.probability, 0.5 * 2.0 / 6.0, viol_k, viol_k1)};
}

struct BlockSample {
    std::vector<std::size_t> n_d, ntilde_d;
};

BlockSample block_sample(std::size_t d) {
    BlockSample s;
    for (std::size_t r = 0; r < 1000; ++r) {
        RngStream rng(1009, r);
        const auto y = BinarySequence::random(100000, rng);
        const auto c = count_nd(y, d);
        s.n_d.push_back(c.n_d);
        s.ntilde_d.push_back(c.ntilde_d);
    }
    return s;
}

Verdict block_inequality(const std::vector<BlockSample>& samples) {
    std::size_t bad = 0, total = 0;
    std::string detail;
    const std::size_t ds[] = {5, 10};
    for (std::size_t i = 0; i < samples.size(); ++i) {
        std::size_t here = 0;
        for (std::size_t r = 0; r < samples[i].n_d.size(); ++r) {
            ++total;
            if (samples[i].n_d[r] > ds[i] * samples[i].ntilde_d[r]) ++here;
        }
        bad += here;
        detail += fmt("D=%zu: %zu/%zu Y with N_D > D*Ntilde_D; ", ds[i], here, samples[i].n_d.size());
    }
    return {bad == 0, detail + "(Ntilde_D counts D+1 equal letters)"};
}

Verdict block_mean(const std::vector<BlockSample>& samples) {
    bool ok = true;
    std::string detail;
    const std::size_t ds[] = {5, 10};
    const double n = 100000;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto m = stats::moments_of(samples[i].ntilde_d);
        const double want = (n - static_cast<double>(ds[i])) * std::ldexp(1.0, -static_cast<int>(ds[i]));
        const double se = std::sqrt(m.variance() / static_cast<double>(m.count));
        const bool here = std::abs(m.mean() - want) <= 3 * se;
        ok = ok && here;
        detail += fmt("D=%zu mean=%.2f want=%.2f 3se=%.2f; ", ds[i], m.mean(), want, 3 * se);
    }
    return {ok, detail};
}

Verdict event_frequencies() {
    auto cfg = config(2000, 0.5, 1000, 1010);
    EventMask mask = mask_of(Event::E1) | mask_of(Event::E4) | mask_of(Event::Slope);
    const auto est = summarize_events(run_replications(cfg, mask), mask);
    bool ok = true;
    std::string detail;
    for (const auto& e : est) {
        ok = ok && e.frequency >= 0.99;
        detail += fmt("P(%s)=%.3f [%.3f,%.3f]; ", std::string(event_name(e.event)).c_str(), e.frequency, e.ci.lo, e.ci.hi);
    }
    return {ok, detail + fmt("k1=%.2f k2=%.1f, need >= 0.99", cfg.k1, cfg.k2)};
}

Verdict gamma_sanity() {
    const auto g = estimate_gamma(config(10000, 0.5, 100, 1011), GammaMode::Binary);
    return {g.mean_ratio >= 0.80 && g.mean_ratio <= 0.83,
            fmt("mean L_n/n = %.4f [%.4f, %.4f], need in [0.80, 0.83]", g.mean_ratio, g.ci.lo, g.ci.hi)};
}

}  // namespace

int main() {
    std::printf("acceptance suite, %u worker thread(s)\n", default_thread_count());
    run("1a", "worked LCS and renewal values", worked_lcs_values, 1);
    run("1b", "worked alignment score", worked_alignment, 1);
    run("2", "exact E[L10]", expected_l10, 60);
    run("3", "coupling in law", representation, 300);
    run("4", "drop-scheme uniformity", drop_uniformity);
    run("5", "variance scaling", variance_scaling, 1800);
    run("6", "minimal-matching invariants", matching_invariants);
    run("7", "deterministic inclusions", inclusions);
    run("8", "increment bound", increment_bound);
    const std::vector<BlockSample> blocks{block_sample(5), block_sample(10)};
    run("9a", "block inequality N_D <= D Ntilde_D", [&] { return block_inequality(blocks); });
    run("9b", "block mean E[Ntilde_D]", [&] { return block_mean(blocks); });
    run("10", "event frequencies", event_frequencies);
    run("11", "gamma sanity", gamma_sanity);
    std::printf("%d criterion line(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
