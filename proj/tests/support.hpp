#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lcsf/lcs.hpp"
#include "lcsf/matchings.hpp"
#include "lcsf/rng.hpp"
#include "lcsf/sequences.hpp"

namespace lcsf::test {

inline BinarySequence bits(const char* s) { return BinarySequence::from_string(s); }

inline BinarySequence from_mask(std::uint64_t mask, std::size_t len) {
    BinarySequence s;
    for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<Bit>((mask >> i) & 1u));
    return s;
}

inline bool is_subsequence(const BinarySequence& small, const BinarySequence& big) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < big.size() && j < small.size(); ++i) {
        if (big[i] == small[j]) ++j;
    }
    return j == small.size();
}

// Exhaustive: longest subsequence of `a` (by subset mask) that is also a subsequence of `b`.
inline std::size_t brute_lcs(const BinarySequence& a, const BinarySequence& b) {
    std::size_t best = 0;
    const std::uint64_t limit = std::uint64_t{1} << a.size();
    for (std::uint64_t m = 0; m < limit; ++m) {
        const auto pop = static_cast<std::size_t>(__builtin_popcountll(m));
        if (pop <= best) continue;
        BinarySequence sub;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if ((m >> i) & 1u) sub.push_back(a[i]);
        }
        if (is_subsequence(sub, b)) best = pop;
    }
    return best;
}

// Every matching of length m between z and y (1-based index arrays).
inline void enumerate_matchings(const BinarySequence& z, const BinarySequence& y, std::size_t m, Matching& cur,
                                std::vector<Matching>& out) {
    if (cur.size() == m) {
        out.push_back(cur);
        return;
    }
    const std::uint32_t pi0 = cur.size() ? cur.pi.back() : 0;
    const std::uint32_t eta0 = cur.size() ? cur.eta.back() : 0;
    const std::size_t left = m - cur.size();
    for (std::uint32_t i = pi0 + 1; i + left - 1 <= z.size(); ++i) {
        for (std::uint32_t j = eta0 + 1; j + left - 1 <= y.size(); ++j) {
            if (z[i - 1] != y[j - 1]) continue;
            cur.pi.push_back(i);
            cur.eta.push_back(j);
            enumerate_matchings(z, y, m, cur, out);
            cur.pi.pop_back();
            cur.eta.pop_back();
        }
    }
}

// Exhaustive over every alignment path (no memo): pair, gap in b, or gap in a.
inline std::int64_t brute_align(const BinarySequence& a, const BinarySequence& b, const SubstitutionMatrix& m,
                                std::size_t i = 0, std::size_t j = 0) {
    if (i == a.size()) return m.gap * static_cast<std::int64_t>(b.size() - j);
    if (j == b.size()) return m.gap * static_cast<std::int64_t>(a.size() - i);
    const std::int64_t pair = m.scores[a[i]][b[j]] + brute_align(a, b, m, i + 1, j + 1);
    const std::int64_t skip_a = m.gap + brute_align(a, b, m, i + 1, j);
    const std::int64_t skip_b = m.gap + brute_align(a, b, m, i, j + 1);
    return std::max({pair, skip_a, skip_b});
}

inline BinarySequence random_bits(std::size_t len, RngStream& rng) { return BinarySequence::random(len, rng); }

}  // namespace lcsf::test
