#include "lcsf/events.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lcsf/drop.hpp"
#include "lcsf/matchings.hpp"
#include "lcsf/parallel.hpp"

namespace lcsf {

namespace {

constexpr double kTol = 1e-9;

constexpr std::array<std::string_view, kEventCount> kNames{"E1", "E2", "E3", "E4", "E5", "E6", "slope"};

std::size_t ceil_index(double x) { return static_cast<std::size_t>(std::max(0.0, std::ceil(x - kTol))); }
std::size_t floor_index(double x) { return static_cast<std::size_t>(std::max(0.0, std::floor(x + kTol))); }

// Target Z length for E3 at Y-prefix length l.
std::size_t e3_target(std::size_t l, double delta) {
    return floor_index(2.0 * static_cast<double>(l) * (1.0 - delta));
}

}  // namespace

std::string_view event_name(Event e) { return kNames[static_cast<std::size_t>(e)]; }

Event parse_event(std::string_view name) {
    for (std::size_t i = 0; i < kEventCount; ++i) {
        if (kNames[i] == name) return kAllEvents[i];
    }
    if (name == "Eslope" || name == "E_slope") return Event::Slope;
    throw std::invalid_argument("unknown event '" + std::string(name) + "', expected E1..E6 or slope");
}

bool slope_event(const ScoreCurve& curve, std::size_t n, double k1, double k2) {
    if (curve.max_k() < n) throw std::invalid_argument("score curve shorter than n");
    if (n < 2) return true;
    const std::size_t window = std::max<std::size_t>(1, ceil_index(k2 * std::log(static_cast<double>(n))));
    if (window > n - 1) return true;
    // g(j) = L(j) - k1 j; need min_{j >= i + window} g(j) >= g(i) for every i >= 1
    std::vector<double> suffix_min(n + 2, INFINITY);
    for (std::size_t j = n; j >= 1; --j) {
        suffix_min[j] = std::min(suffix_min[j + 1], static_cast<double>(curve[j]) - k1 * static_cast<double>(j));
    }
    for (std::size_t i = 1; i + window <= n; ++i) {
        const double gi = static_cast<double>(curve[i]) - k1 * static_cast<double>(i);
        if (suffix_min[i + window] < gi - kTol) return false;
    }
    return true;
}

ReplicationResult run_replication(const ExperimentConfig& cfg, std::size_t rep, EventMask which) {
    const std::size_t n = cfg.n;
    const RngStream base(cfg.seed, rep);
    RngStream na_rng = base.substream(streams::kNa);
    RngStream y_rng = base.substream(streams::kY);
    RngStream drop_rng = base.substream(streams::kDrop);

    ReplicationResult out;
    out.rep = rep;
    out.a_count = na_rng.binomial(n, cfg.p);
    const BinarySequence y = BinarySequence::random(n, y_rng);
    auto set = [&out](Event e, bool v) { out.events[static_cast<std::size_t>(e)] = v; };

    if (which[static_cast<std::size_t>(Event::E5)]) {
        const BlockCounts bc = count_nd(y, cfg.d_value());
        out.n_d = bc.n_d;
        out.ntilde_d = bc.ntilde_d;
        set(Event::E5, static_cast<double>(bc.n_d) <= cfg.epsilon * static_cast<double>(n) / 4.0 + kTol);
    }

    const bool want_e3 = which[static_cast<std::size_t>(Event::E3)];
    const bool want_grid = which[static_cast<std::size_t>(Event::E2)] || which[static_cast<std::size_t>(Event::E6)];
    const double delta = want_e3 ? cfg.delta_value() : 0.0;

    // E3 walks l upward; its Z targets floor(2l(1-delta)) are non-decreasing in l
    const std::size_t e3_lo = std::max<std::size_t>(1, ceil_index(cfg.thresholds.e3_start * static_cast<double>(n)));
    std::size_t grow_to = n;
    if (want_e3) grow_to = std::max(grow_to, e3_target(n, delta));
    grow_to = std::max<std::size_t>(grow_to, 2);

    ScoreCurveTracker tracker(y, n);
    DropState state = drop_init(drop_rng, cfg.mode);
    tracker.reset(state.current());

    bool e3 = true;
    std::size_t next_l = e3_lo;
    auto check_e3 = [&](std::size_t k) {
        while (want_e3 && next_l <= n && e3_target(next_l, delta) <= k) {
            const std::size_t target = e3_target(next_l, delta);
            std::size_t score;
            if (target == k) {
                score = tracker.current_score_prefix(next_l);
            } else {
                // only reachable for targets below the initial length 2
                score = lcs_length(tracker.z().prefix(target), y.prefix(next_l));
            }
            if (static_cast<double>(score) > (1.0 - cfg.epsilon) * static_cast<double>(next_l) + kTol) e3 = false;
            ++next_l;
        }
    };

    const std::vector<std::size_t> grid = want_grid ? cfg.k_grid() : std::vector<std::size_t>{};
    std::size_t next_grid = 0;
    const double gamma_n = want_grid ? cfg.gamma_match_value() * static_cast<double>(n) : 0.0;
    auto snapshot = [&](std::size_t k) {
        while (next_grid < grid.size() && grid[next_grid] <= k) {
            if (grid[next_grid] != k) throw std::logic_error("k grid point skipped");
            const BinarySequence& z = tracker.z();
            const Matching mt = minimal_matching(z, y);
            const auto records = classify_matches(mt, z, y);
            const MatchSummary sum = summarize(records);
            GridPoint g;
            g.k = k;
            g.score = tracker.curve()[k];
            if (mt.size() != g.score) throw std::logic_error("minimal matching length differs from the score curve");
            g.nonempty = sum.nonempty;
            g.match_free_bits = sum.free_bits;
            g.last_eta = mt.size() ? mt.eta.back() : 0;
            g.free_bits = g.last_eta - mt.size();
            g.single_color = check_single_color(records);
            g.e4k = static_cast<double>(g.score) >= cfg.thresholds.mid * static_cast<double>(k) - kTol;
            g.e6k = static_cast<double>(g.score) <= (1.0 - cfg.epsilon) * static_cast<double>(g.last_eta) + kTol;
            g.e2k = static_cast<double>(g.nonempty) >= gamma_n - kTol;
            out.grid.push_back(g);
            ++next_grid;
        }
    };

    check_e3(2);
    snapshot(2);
    while (state.k() < grow_to) {
        const DropEvent ev = drop_step(state, drop_rng);
        tracker.insert(ev.position - 1, ev.bit);
        check_e3(state.k());
        snapshot(state.k());
    }

    const ScoreCurve& curve = tracker.curve();
    out.ln = curve[n - out.a_count];
    if (want_e3) set(Event::E3, e3);

    if (which[static_cast<std::size_t>(Event::E1)]) {
        bool e1 = true;
        const std::size_t hi = floor_index(cfg.thresholds.low * static_cast<double>(n));
        for (std::size_t k = 1; k <= hi && e1; ++k) e1 = curve[k] == k;
        set(Event::E1, e1);
    }
    if (which[static_cast<std::size_t>(Event::E4)]) {
        bool e4 = true;
        const std::size_t lo = std::max<std::size_t>(1, ceil_index(cfg.thresholds.low * static_cast<double>(n)));
        for (std::size_t k = lo; k <= n && e4; ++k) {
            e4 = static_cast<double>(curve[k]) >= cfg.thresholds.mid * static_cast<double>(k) - kTol;
        }
        set(Event::E4, e4);
    }
    if (which[static_cast<std::size_t>(Event::Slope)]) set(Event::Slope, slope_event(curve, n, cfg.k1, cfg.k2));
    if (which[static_cast<std::size_t>(Event::E2)]) {
        set(Event::E2, std::all_of(out.grid.begin(), out.grid.end(), [](const GridPoint& g) { return g.e2k; }));
    }
    if (which[static_cast<std::size_t>(Event::E6)]) {
        set(Event::E6, std::all_of(out.grid.begin(), out.grid.end(), [](const GridPoint& g) { return g.e6k; }));
    }
    return out;
}

std::vector<ReplicationResult> run_replications(const ExperimentConfig& cfg, EventMask which) {
    cfg.validate();
    if (which[static_cast<std::size_t>(Event::E3)]) (void)cfg.delta_value();  // fit once before fanning out
    std::vector<ReplicationResult> results(cfg.reps);
    parallel_for(cfg.reps, cfg.threads, [&](std::size_t r) { results[r] = run_replication(cfg, r, which); });
    return results;
}

std::vector<EventEstimate> summarize_events(const std::vector<ReplicationResult>& results, EventMask which) {
    std::vector<EventEstimate> out;
    for (Event e : kAllEvents) {
        if (!which[static_cast<std::size_t>(e)]) continue;
        EventEstimate est;
        est.event = e;
        for (const auto& r : results) {
            const auto& v = r.events[static_cast<std::size_t>(e)];
            if (!v) continue;
            ++est.trials;
            if (*v) ++est.successes;
        }
        est.frequency = est.trials ? static_cast<double>(est.successes) / static_cast<double>(est.trials) : 0.0;
        est.ci = stats::clopper_pearson(est.successes, est.trials);
        out.push_back(est);
    }
    return out;
}

EventEstimate estimate_event(const ExperimentConfig& cfg, Event which) {
    return summarize_events(run_replications(cfg, mask_of(which)), mask_of(which)).front();
}

InclusionReport check_inclusions(const ExperimentConfig& cfg) {
    EventMask mask;
    for (Event e : {Event::E2, Event::E3, Event::E4, Event::E5, Event::E6}) mask |= mask_of(e);
    const double delta = cfg.delta_value();
    if (!(delta < 1.0 && 0.5 / (1.0 - delta) < cfg.thresholds.mid)) {
        throw std::invalid_argument("--epsilon too large: 0.5 / (1 - delta) must stay below the mid threshold (delta = " +
                                    std::to_string(delta) + ")");
    }
    if (cfg.k_grid().empty()) return check_inclusions(cfg, {});
    return check_inclusions(cfg, run_replications(cfg, mask));
}

InclusionReport check_inclusions(const ExperimentConfig& cfg, const std::vector<ReplicationResult>& results) {
    InclusionReport rep;
    rep.delta = cfg.delta_value();
    if (!(rep.delta < 1.0 && 0.5 / (1.0 - rep.delta) < cfg.thresholds.mid)) {
        throw std::invalid_argument("--epsilon: 0.5 / (1 - delta) must stay below the mid threshold");
    }
    rep.D = cfg.d_value();
    rep.gamma_match = cfg.gamma_match_value();
    rep.grid_size = cfg.k_grid().size();
    rep.vacuous = rep.grid_size == 0;
    rep.reps = results.size();
    for (const auto& r : results) {
        const bool e3 = r.event(Event::E3);
        const bool e4 = r.event(Event::E4);
        const bool e5 = r.event(Event::E5);
        for (const auto& g : r.grid) {
            if (!g.single_color) ++rep.single_color_failures;
            if (e3 && g.e4k) {
                ++rep.e3e4_e6_checks;
                if (!g.e6k) ++rep.e3e4_e6_violations;
            }
            if (e4 && e5 && g.e6k) {
                ++rep.e4e5e6_e2_checks;
                if (!g.e2k) ++rep.e4e5e6_e2_violations;
            }
        }
    }
    return rep;
}

}  // namespace lcsf
