#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lcsf/config.hpp"
#include "lcsf/lcs.hpp"
#include "lcsf/stats.hpp"

namespace lcsf {

// Events of the slope argument, all evaluated on one coupled realisation (Y, drop history):
//   E1     L(k) = k for every k <= low*n
//   E2     every extracted minimal matching at grid k has >= gamma_match*n non-empty matches
//   E3     L_l(floor(2l(1-delta))) <= (1-eps) l for every l in [e3_start*n, n]
//   E4     L(k) >= mid*k for every k in [low*n, n]
//   E5     N^D <= eps*n/4
//   E6     L(k) <= (1-eps) eta(L(k)) at every grid k
//   Slope  L(j) - L(i) >= k1 (j - i) whenever 0 < i < j <= n and j - i >= k2 ln n
enum class Event : std::size_t { E1 = 0, E2, E3, E4, E5, E6, Slope };
inline constexpr std::size_t kEventCount = 7;
inline constexpr std::array<Event, kEventCount> kAllEvents{Event::E1, Event::E2, Event::E3, Event::E4,
                                                          Event::E5, Event::E6, Event::Slope};

std::string_view event_name(Event e);
Event parse_event(std::string_view name);

using EventMask = std::bitset<kEventCount>;
inline EventMask mask_of(Event e) { return EventMask().set(static_cast<std::size_t>(e)); }
inline EventMask all_events() { return EventMask().set(); }

struct GridPoint {
    std::size_t k = 0;
    std::uint32_t score = 0;      // L(k), equal to the matching length
    std::size_t nonempty = 0;     // non-empty matches of the minimal matching
    std::size_t free_bits = 0;    // eta(L(k)) - L(k), including Y letters before eta(1)
    std::size_t match_free_bits = 0;  // free bits strictly inside matches
    std::size_t last_eta = 0;     // eta(L(k)), 0 for an empty matching
    bool single_color = true;
    bool e2k = true;
    bool e4k = true;
    bool e6k = true;
};

struct ReplicationResult {
    std::size_t rep = 0;
    std::size_t ln = 0;
    std::size_t a_count = 0;
    std::array<std::optional<bool>, kEventCount> events{};
    std::vector<GridPoint> grid;
    std::size_t n_d = 0;
    std::size_t ntilde_d = 0;

    bool event(Event e) const { return events[static_cast<std::size_t>(e)].value(); }
};

// One coupled replication (stream `rep` of cfg.seed) with the requested events evaluated.
ReplicationResult run_replication(const ExperimentConfig& cfg, std::size_t rep, EventMask which);
std::vector<ReplicationResult> run_replications(const ExperimentConfig& cfg, EventMask which);

bool slope_event(const ScoreCurve& curve, std::size_t n, double k1, double k2);

struct EventEstimate {
    Event event = Event::E1;
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    double frequency = 0.0;
    stats::Interval ci;  // exact 95% binomial interval
};

EventEstimate estimate_event(const ExperimentConfig& cfg, Event which);
std::vector<EventEstimate> summarize_events(const std::vector<ReplicationResult>& results, EventMask which);

// Violations of the set inclusions E3 & E4k => E6k and E4 & E5 & E6k => E2k, counted
// per (replication, grid k). Both inclusions hold surely, so any violation is a defect.
struct InclusionReport {
    bool vacuous = false;
    std::size_t reps = 0;
    std::size_t grid_size = 0;
    double delta = 0.0;
    double gamma_match = 0.0;
    std::size_t D = 0;
    std::size_t e3e4_e6_checks = 0;      // (rep, k) pairs where E3 and E4k hold
    std::size_t e3e4_e6_violations = 0;
    std::size_t e4e5e6_e2_checks = 0;      // (rep, k) pairs where E4, E5 and E6k hold
    std::size_t e4e5e6_e2_violations = 0;
    std::size_t single_color_failures = 0;
};

// Throws std::invalid_argument unless delta < 1 and 0.5 / (1 - delta) < mid.
InclusionReport check_inclusions(const ExperimentConfig& cfg);
InclusionReport check_inclusions(const ExperimentConfig& cfg, const std::vector<ReplicationResult>& results);

}  // namespace lcsf
