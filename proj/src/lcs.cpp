#include "lcsf/lcs.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace lcsf {

SubstitutionMatrix SubstitutionMatrix::identity(std::int64_t gap) {
    SubstitutionMatrix m;
    for (int i = 0; i < 3; ++i) m.scores[i][i] = 1;
    m.gap = gap;
    return m;
}

SubstitutionMatrix SubstitutionMatrix::binary(std::int64_t s00, std::int64_t s01, std::int64_t s10, std::int64_t s11,
                                              std::int64_t gap) {
    SubstitutionMatrix m;
    m.scores[0][0] = s00;
    m.scores[0][1] = s01;
    m.scores[1][0] = s10;
    m.scores[1][1] = s11;
    m.covered = {true, true, false};
    m.gap = gap;
    return m;
}

std::size_t lcs_length(const BinarySequence& a, const BinarySequence& b) {
    const BinarySequence& outer = a.size() >= b.size() ? a : b;
    const BinarySequence& inner = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> row(inner.size() + 1, 0);
    for (std::size_t i = 0; i < outer.size(); ++i) {
        const Bit c = outer[i];
        std::uint32_t diag = 0;
        for (std::size_t j = 1; j <= inner.size(); ++j) {
            const std::uint32_t up = row[j];
            row[j] = inner[j - 1] == c ? diag + 1 : std::max(up, row[j - 1]);
            diag = up;
        }
    }
    return row.back();
}

std::size_t lcs_length(const TriSequence& a, const BinarySequence& b) {
    std::vector<std::uint32_t> row(b.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Symbol3 s = a[i];
        if (s == Symbol3::A) continue;  // an 'a' row never changes the table
        const Bit c = s == Symbol3::One ? 1 : 0;
        std::uint32_t diag = 0;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::uint32_t up = row[j];
            row[j] = b[j - 1] == c ? diag + 1 : std::max(up, row[j - 1]);
            diag = up;
        }
    }
    return row.back();
}

std::size_t lcs_bitparallel(const BinarySequence& a, const BinarySequence& b) {
    const BinarySequence& ref = a.size() >= b.size() ? a : b;
    const BinarySequence& fed = a.size() >= b.size() ? b : a;
    return BitParallelLcs(ref).run(fed);
}

std::int64_t align_score(const TriSequence& a, const TriSequence& b, const SubstitutionMatrix& m) {
    auto check = [&m](const TriSequence& s) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (!m.covered[static_cast<int>(s[i])]) {
                throw std::invalid_argument(std::string("substitution matrix does not cover letter '") +
                                            to_char(s[i]) + "'");
            }
        }
    };
    check(a);
    check(b);
    std::vector<std::int64_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = m.gap * static_cast<std::int64_t>(j);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        const auto ai = static_cast<int>(a[i - 1]);
        std::int64_t diag = row[0];
        row[0] = m.gap * static_cast<std::int64_t>(i);
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::int64_t up = row[j];
            const std::int64_t pair = diag + m.scores[ai][static_cast<int>(b[j - 1])];
            row[j] = std::max({pair, up + m.gap, row[j - 1] + m.gap});
            diag = up;
        }
    }
    return row.back();
}

std::int64_t align_score(const BinarySequence& a, const BinarySequence& b, const SubstitutionMatrix& m) {
    return align_score(TriSequence::from_binary(a), TriSequence::from_binary(b), m);
}

// ---------------------------------------------------------------------------
// BitParallelLcs

BitParallelLcs::BitParallelLcs(const BinarySequence& y, std::size_t l)
    : l_(l), words_((l + 63) / 64), top_mask_((l & 63) ? (std::uint64_t{1} << (l & 63)) - 1 : ~std::uint64_t{0}) {
    if (l > y.size()) throw std::out_of_range("reference prefix longer than the reference sequence");
    match_[0].assign(words_, 0);
    match_[1].assign(words_, 0);
    for (std::size_t j = 0; j < l; ++j) match_[y[j]][j >> 6] |= std::uint64_t{1} << (j & 63);
}

void BitParallelLcs::reset(std::span<std::uint64_t> state) const {
    std::fill(state.begin(), state.end(), ~std::uint64_t{0});
    if (words_) state[words_ - 1] &= top_mask_;
}

void BitParallelLcs::feed(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst, Bit c) const {
    const std::uint64_t* m = match_[c & 1].data();
    unsigned long long carry = 0;
    for (std::size_t i = 0; i < words_; ++i) {
        const std::uint64_t v = src[i];
        const std::uint64_t u = v & m[i];
        unsigned long long s;
        const bool c1 = __builtin_add_overflow(static_cast<unsigned long long>(v), static_cast<unsigned long long>(u), &s);
        const bool c2 = __builtin_add_overflow(s, carry, &s);
        carry = (c1 || c2) ? 1 : 0;
        dst[i] = s | (v & ~m[i]);
    }
    if (words_) dst[words_ - 1] &= top_mask_;
}

void BitParallelLcs::feed(std::span<std::uint64_t> state, Bit c) const { feed(state, state, c); }

std::size_t BitParallelLcs::score_prefix(std::span<const std::uint64_t> state, std::size_t j) const {
    if (j > l_) throw std::out_of_range("prefix length exceeds reference length");
    std::size_t ones = 0;
    const std::size_t full = j >> 6;
    for (std::size_t i = 0; i < full; ++i) ones += static_cast<std::size_t>(std::popcount(state[i]));
    if (j & 63) ones += static_cast<std::size_t>(std::popcount(state[full] & ((std::uint64_t{1} << (j & 63)) - 1)));
    return j - ones;
}

std::size_t BitParallelLcs::run(const BinarySequence& a) const {
    std::vector<std::uint64_t> state(words_);
    reset(state);
    for (std::size_t i = 0; i < a.size(); ++i) feed(state, a[i]);
    return score(state);
}

// ---------------------------------------------------------------------------
// ScoreCurveTracker

ScoreCurveTracker::ScoreCurveTracker(const BinarySequence& y, std::size_t l) : y_(y.prefix(l)), kernel_(y_, l) {
    curve_.y_length = l;
}

void ScoreCurveTracker::reset(const BinarySequence& z) {
    z_ = z;
    const std::size_t w = kernel_.words();
    states_.assign((z.size() + 1) * w, 0);
    kernel_.reset(state(0));
    curve_.values.assign(1, 0);
    for (std::size_t i = 0; i < z.size(); ++i) {
        kernel_.feed(state(i), state(i + 1), z[i]);
        curve_.values.push_back(static_cast<std::uint32_t>(kernel_.score(state(i + 1))));
    }
}

void ScoreCurveTracker::insert(std::size_t pos, Bit b) {
    z_.insert(pos, b);
    const std::size_t k = z_.size();
    states_.resize((k + 1) * kernel_.words());
    for (std::size_t i = pos; i < k; ++i) kernel_.feed(state(i), state(i + 1), z_[i]);
    const auto score = static_cast<std::uint32_t>(kernel_.score(state(k)));
    if (verify_ && score != lcs_length(z_, y_)) {
        throw std::logic_error("incremental score curve disagrees with full recomputation");
    }
    curve_.values.push_back(score);
}

std::size_t ScoreCurveTracker::current_score_prefix(std::size_t j) const {
    return kernel_.score_prefix(state(z_.size()), j);
}

}  // namespace lcsf
