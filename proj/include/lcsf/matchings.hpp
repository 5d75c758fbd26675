#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcsf/sequences.hpp"

namespace lcsf {

// Pair of strictly increasing 1-based index maps with Z[pi(i)] = Y[eta(i)].
struct Matching {
    std::vector<std::uint32_t> pi;
    std::vector<std::uint32_t> eta;

    std::size_t size() const { return pi.size(); }
    friend bool operator==(const Matching&, const Matching&) = default;
};

bool is_valid_matching(const Matching& mt, const BinarySequence& z, const BinarySequence& y);

// Coordinatewise order on equal-length matchings: a <= b iff pi_a <= pi_b and eta_a <= eta_b.
bool precedes_or_equal(const Matching& a, const Matching& b);

// The quadruple (pi(i), pi(i+1), eta(i), eta(i+1)) between consecutive matched pairs,
// with the census of unmatched Y letters strictly inside the eta gap.
struct MatchRecord {
    std::uint32_t pi_i = 0;
    std::uint32_t pi_next = 0;
    std::uint32_t eta_i = 0;
    std::uint32_t eta_next = 0;
    bool is_empty = true;
    bool contains_zero = false;
    bool contains_one = false;
    std::uint32_t free_bits = 0;
};

struct MatchSummary {
    std::size_t matches = 0;
    std::size_t nonempty = 0;
    std::size_t free_bits = 0;
};

// Lexicographically smallest (pi(1), eta(1), pi(2), eta(2), ...) among maximum-length
// matchings. Lex-minimal implies minimal in the coordinatewise order.
Matching minimal_matching(const BinarySequence& z, const BinarySequence& y);

// One record per i in [1, m-1]. Letters before eta(1) and after eta(m) belong to no match.
std::vector<MatchRecord> classify_matches(const Matching& mt, const BinarySequence& z, const BinarySequence& y);
MatchSummary summarize(std::span<const MatchRecord> records);

// True iff no match holds free letters of both colours.
bool check_single_color(std::span<const MatchRecord> records);

// Two-row alignment text with '_' for gaps, as in the usual LCS illustrations.
std::pair<std::string, std::string> render_alignment(const Matching& mt, const BinarySequence& z,
                                                     const BinarySequence& y);
// CSV rows "i,pi,eta".
void write_matching_csv(std::ostream& out, const Matching& mt);

// Maximal constant run [start, end] of Y, 1-based and inclusive.
struct Block {
    std::size_t start = 0;
    std::size_t end = 0;
    Bit color = 0;
    std::size_t length() const { return end - start + 1; }
};

std::vector<Block> blocks(const BinarySequence& y);

struct BlockCounts {
    std::size_t n_d = 0;       // letters of Y lying in blocks of length >= D
    std::size_t ntilde_d = 0;  // s in [1, n-D] with Y_s = Y_{s+1} = ... = Y_{s+D}
};

BlockCounts count_nd(const BinarySequence& y, std::size_t d);

// nu(i) = least l such that Z[1..i] is a subsequence of Y[1..l]; stops at the longest
// embeddable prefix of Z.
struct RenewalEmbedding {
    std::vector<std::size_t> nu;
    bool complete = false;

    std::vector<std::size_t> interarrivals() const;
};

RenewalEmbedding renewal_embed(const BinarySequence& z, const BinarySequence& y);

// P(Y^l is a subsequence of Z^k) for independent fair-bit strings,
// sum_{j=l}^{k} C(j-1, l-1) 2^{-j}. Exact as numerator / 2^k when l + k <= 64.
struct ContainmentProbability {
    long double value = 0.0L;
    std::optional<std::uint64_t> numerator;
    std::size_t denominator_log2 = 0;
};

ContainmentProbability containment_prob_exact(std::size_t l, std::size_t k);

}  // namespace lcsf
