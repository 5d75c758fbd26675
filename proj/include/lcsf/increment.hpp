#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lcsf/config.hpp"
#include "lcsf/drop.hpp"
#include "lcsf/matchings.hpp"
#include "lcsf/sequences.hpp"

namespace lcsf {

// Conditional probability that one more drop step raises LCS(Z, Y), for a frozen (Z, Y).
struct IncrementExact {
    std::size_t k = 0;
    std::size_t slots = 0;
    std::size_t nonempty = 0;       // non-empty matches of the minimal matching of (Z, Y)
    std::uint64_t hits = 0;         // (slot, bit) outcomes that raise the score
    std::uint64_t outcomes = 0;     // 2 * slots
    double probability = 0.0;
    double bound_k = 0.0;           // 0.5 * nonempty / k
    double bound_k_minus_1 = 0.0;   // 0.5 * nonempty / (k - 1)
};

// Enumerates every legal (slot, bit) outcome under `mode`. Requires |Z| >= 2.
IncrementExact enumerate_increment(const BinarySequence& z, const BinarySequence& y, InsertionMode mode);
// Same, with the non-empty count taken from a caller-supplied maximal matching.
IncrementExact enumerate_increment(const BinarySequence& z, const BinarySequence& y, InsertionMode mode,
                                   const Matching& mt);

struct IncrementReplay {
    std::uint64_t draws = 0;
    std::uint64_t hits = 0;
    double estimate = 0.0;
    double sigma = 0.0;  // binomial standard error, sqrt(b (1 - b) / draws) at b = max(estimate, bound_k)
};

// Monte Carlo replay of `draws` independent (T, V) drops from the same frozen state.
IncrementReplay replay_increment(const BinarySequence& z, const BinarySequence& y, InsertionMode mode,
                                 std::uint64_t draws, RngStream rng, double bound_k);

struct IncrementRow {
    std::size_t rep = 0;
    IncrementExact exact;
    IncrementReplay replay;
    bool violates_k = false;          // replay estimate below bound_k - 3 sigma
    bool violates_k_minus_1 = false;  // replay estimate below bound_k_minus_1 - 3 sigma
    bool exact_below_k = false;       // exact probability below bound_k
    bool exact_below_k_minus_1 = false;
};

// One frozen state per replication: Y of length n and Z grown to k = grid[rep % |grid|]
// (k in [low*n, n]); `draws` replays per state.
std::vector<IncrementRow> increment_probability_check(const ExperimentConfig& cfg, std::uint64_t draws);

// Z^6 = 101011, Y = 111000111 and the matching pi = (1,3,4,5,6), eta = (1,2,4,7,8).
struct WorkedState {
    BinarySequence z;
    BinarySequence y;
    Matching matching;
};
WorkedState worked_increment_state();

}  // namespace lcsf
