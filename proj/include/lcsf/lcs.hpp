#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lcsf/sequences.hpp"

namespace lcsf {

// Score table over {0,1,a} plus a linear per-gap penalty. Letters outside `covered`
// are rejected by align_score.
struct SubstitutionMatrix {
    std::array<std::array<std::int64_t, 3>, 3> scores{};
    std::array<bool, 3> covered{true, true, true};
    std::int64_t gap = 0;

    // s(x,x)=1, s(x,y)=0 otherwise, over all three letters. With gap 0 this scores LCS.
    static SubstitutionMatrix identity(std::int64_t gap = 0);
    // Binary-only matrix; 'a' is not covered.
    static SubstitutionMatrix binary(std::int64_t s00, std::int64_t s01, std::int64_t s10, std::int64_t s11,
                                     std::int64_t gap);
};

// values[k] = L^a_l(k), the LCS of the k-th drop string against Y[1..l].
struct ScoreCurve {
    std::vector<std::uint32_t> values;
    std::size_t y_length = 0;

    std::size_t max_k() const { return values.empty() ? 0 : values.size() - 1; }
    std::uint32_t operator[](std::size_t k) const { return values[k]; }
};

// Plain dynamic programme, O(min(|a|,|b|)) memory.
std::size_t lcs_length(const BinarySequence& a, const BinarySequence& b);
// 'a' letters never match a binary letter.
std::size_t lcs_length(const TriSequence& a, const BinarySequence& b);

// Word-parallel LCS (Crochemore et al. bit-vector recurrence), |a|*ceil(|b|/64) word steps.
std::size_t lcs_bitparallel(const BinarySequence& a, const BinarySequence& b);

// Global alignment maximising pair scores plus gap * (number of gap columns).
std::int64_t align_score(const TriSequence& a, const TriSequence& b, const SubstitutionMatrix& m);
std::int64_t align_score(const BinarySequence& a, const BinarySequence& b, const SubstitutionMatrix& m);

// Bit-vector LCS kernel against a fixed reference Y[1..l]. A state is ceil(l/64) words;
// after feeding a string A, the number of zero bits among the low j bits of the state
// equals LCS(A, Y[1..j]) for every j <= l.
class BitParallelLcs {
public:
    BitParallelLcs(const BinarySequence& y, std::size_t l);
    explicit BitParallelLcs(const BinarySequence& y) : BitParallelLcs(y, y.size()) {}

    std::size_t length() const { return l_; }
    std::size_t words() const { return words_; }

    void reset(std::span<std::uint64_t> state) const;
    void feed(std::span<std::uint64_t> state, Bit c) const;
    // dst = src after feeding c.
    void feed(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst, Bit c) const;
    std::size_t score(std::span<const std::uint64_t> state) const { return score_prefix(state, l_); }
    std::size_t score_prefix(std::span<const std::uint64_t> state, std::size_t j) const;

    std::size_t run(const BinarySequence& a) const;

private:
    std::size_t l_;
    std::size_t words_;
    std::uint64_t top_mask_;
    std::vector<std::uint64_t> match_[2];
};

// Tracks L^a_l(k) while bits are inserted into Z at arbitrary positions. Keeps one
// bit-vector state per prefix of the current Z; an insertion at position t only
// recomputes the states of prefixes longer than t.
class ScoreCurveTracker {
public:
    ScoreCurveTracker(const BinarySequence& y, std::size_t l);

    // Starts from `z`; records values[j] = LCS(z[0..j), Y^l) for j = 0..|z|.
    void reset(const BinarySequence& z);
    // Inserts b at 0-based position pos of the current Z and appends the new score.
    void insert(std::size_t pos, Bit b);

    // Compare every new score against an independent full DP (slow; for audits).
    void set_verify(bool on) { verify_ = on; }

    const ScoreCurve& curve() const { return curve_; }
    const BinarySequence& z() const { return z_; }
    std::size_t current_score() const { return curve_.values.back(); }
    // LCS(current Z, Y[1..j]) for j <= l.
    std::size_t current_score_prefix(std::size_t j) const;

private:
    std::span<std::uint64_t> state(std::size_t i) { return {states_.data() + i * kernel_.words(), kernel_.words()}; }
    std::span<const std::uint64_t> state(std::size_t i) const {
        return {states_.data() + i * kernel_.words(), kernel_.words()};
    }

    BinarySequence y_;
    BitParallelLcs kernel_;
    BinarySequence z_;
    std::vector<std::uint64_t> states_;
    ScoreCurve curve_;
    bool verify_ = false;
};

}  // namespace lcsf
