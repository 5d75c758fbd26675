#include "lcsf/matchings.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace lcsf {

bool is_valid_matching(const Matching& mt, const BinarySequence& z, const BinarySequence& y) {
    if (mt.pi.size() != mt.eta.size()) return false;
    for (std::size_t i = 0; i < mt.size(); ++i) {
        if (mt.pi[i] < 1 || mt.pi[i] > z.size() || mt.eta[i] < 1 || mt.eta[i] > y.size()) return false;
        if (i > 0 && (mt.pi[i] <= mt.pi[i - 1] || mt.eta[i] <= mt.eta[i - 1])) return false;
        if (z[mt.pi[i] - 1] != y[mt.eta[i] - 1]) return false;
    }
    return true;
}

bool precedes_or_equal(const Matching& a, const Matching& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.pi[i] > b.pi[i] || a.eta[i] > b.eta[i]) return false;
    }
    return true;
}

Matching minimal_matching(const BinarySequence& z, const BinarySequence& y) {
    const std::size_t k = z.size();
    const std::size_t n = y.size();
    const std::size_t stride = n + 1;
    // suffix[i*stride + j] = LCS(Z[i..], Y[j..]) with 0-based suffix starts.
    std::vector<std::uint32_t> suffix((k + 1) * stride, 0);
    for (std::size_t i = k; i-- > 0;) {
        std::uint32_t* row = suffix.data() + i * stride;
        const std::uint32_t* below = row + stride;
        const Bit c = z[i];
        for (std::size_t j = n; j-- > 0;) {
            row[j] = y[j] == c ? below[j + 1] + 1 : std::max(below[j], row[j + 1]);
        }
    }
    // next[c][j] = least q >= j with Y[q] = c, or n.
    std::vector<std::uint32_t> next[2];
    for (auto& v : next) v.assign(n + 1, static_cast<std::uint32_t>(n));
    for (std::size_t j = n; j-- > 0;) {
        next[0][j] = next[0][j + 1];
        next[1][j] = next[1][j + 1];
        next[y[j]][j] = static_cast<std::uint32_t>(j);
    }

    Matching mt;
    std::size_t need = suffix[0];
    mt.pi.reserve(need);
    mt.eta.reserve(need);
    std::size_t zi = 0;
    std::size_t yj = 0;
    while (need > 0) {
        for (std::size_t p = zi;; ++p) {
            const std::size_t q = next[z[p]][yj];
            if (q < n && 1 + suffix[(p + 1) * stride + q + 1] >= need) {
                mt.pi.push_back(static_cast<std::uint32_t>(p + 1));
                mt.eta.push_back(static_cast<std::uint32_t>(q + 1));
                zi = p + 1;
                yj = q + 1;
                --need;
                break;
            }
        }
    }
    return mt;
}

std::vector<MatchRecord> classify_matches(const Matching& mt, const BinarySequence& z, const BinarySequence& y) {
    if (!is_valid_matching(mt, z, y)) throw std::invalid_argument("matching is not valid for these sequences");
    std::vector<MatchRecord> records;
    if (mt.size() < 2) return records;
    records.reserve(mt.size() - 1);
    for (std::size_t i = 0; i + 1 < mt.size(); ++i) {
        MatchRecord r;
        r.pi_i = mt.pi[i];
        r.pi_next = mt.pi[i + 1];
        r.eta_i = mt.eta[i];
        r.eta_next = mt.eta[i + 1];
        r.free_bits = r.eta_next - r.eta_i - 1;
        r.is_empty = r.free_bits == 0;
        // free letters are Y_j for eta_i < j < eta_next, i.e. 0-based eta_i .. eta_next-2
        for (std::size_t j = r.eta_i; j + 1 < r.eta_next; ++j) {
            if (y[j]) {
                r.contains_one = true;
            } else {
                r.contains_zero = true;
            }
        }
        records.push_back(r);
    }
    return records;
}

MatchSummary summarize(std::span<const MatchRecord> records) {
    MatchSummary s;
    s.matches = records.size();
    for (const auto& r : records) {
        s.nonempty += r.is_empty ? 0 : 1;
        s.free_bits += r.free_bits;
    }
    return s;
}

bool check_single_color(std::span<const MatchRecord> records) {
    return std::none_of(records.begin(), records.end(),
                        [](const MatchRecord& r) { return r.contains_zero && r.contains_one; });
}

std::pair<std::string, std::string> render_alignment(const Matching& mt, const BinarySequence& z,
                                                     const BinarySequence& y) {
    if (!is_valid_matching(mt, z, y)) throw std::invalid_argument("matching is not valid for these sequences");
    std::string top;
    std::string bottom;
    auto ch = [](Bit b) { return b ? '1' : '0'; };
    std::size_t zi = 0;
    std::size_t yj = 0;
    auto flush = [&](std::size_t z_end, std::size_t y_end) {
        for (; zi < z_end; ++zi) {
            top.push_back(ch(z[zi]));
            bottom.push_back('_');
        }
        for (; yj < y_end; ++yj) {
            top.push_back('_');
            bottom.push_back(ch(y[yj]));
        }
    };
    for (std::size_t i = 0; i < mt.size(); ++i) {
        flush(mt.pi[i] - 1, mt.eta[i] - 1);
        top.push_back(ch(z[zi++]));
        bottom.push_back(ch(y[yj++]));
    }
    flush(z.size(), y.size());
    return {top, bottom};
}

void write_matching_csv(std::ostream& out, const Matching& mt) {
    out << "i,pi,eta\r\n";
    for (std::size_t i = 0; i < mt.size(); ++i) out << i + 1 << ',' << mt.pi[i] << ',' << mt.eta[i] << "\r\n";
}

std::vector<Block> blocks(const BinarySequence& y) {
    std::vector<Block> out;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= y.size(); ++i) {
        if (i == y.size() || y[i] != y[start]) {
            out.push_back({start + 1, i, y[start]});
            start = i;
        }
    }
    return out;
}

BlockCounts count_nd(const BinarySequence& y, std::size_t d) {
    if (d < 1) throw std::invalid_argument("block length cutoff D must be at least 1");
    BlockCounts c;
    for (const auto& b : blocks(y)) {
        const std::size_t len = b.length();
        if (len >= d) c.n_d += len;
        if (len > d) c.ntilde_d += len - d;
    }
    return c;
}

std::vector<std::size_t> RenewalEmbedding::interarrivals() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < nu.size(); ++i) out.push_back(nu[i] - nu[i - 1]);
    return out;
}

RenewalEmbedding renewal_embed(const BinarySequence& z, const BinarySequence& y) {
    RenewalEmbedding e;
    std::size_t j = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        while (j < y.size() && y[j] != z[i]) ++j;
        if (j == y.size()) return e;
        e.nu.push_back(++j);
    }
    e.complete = true;
    return e;
}

ContainmentProbability containment_prob_exact(std::size_t l, std::size_t k) {
    if (l < 1) throw std::invalid_argument("containment probability needs l >= 1");
    if (k < l) throw std::invalid_argument("containment probability needs k >= l");
    ContainmentProbability out;
    out.denominator_log2 = k;
    if (l + k <= 64) {
        unsigned __int128 binom = 1;  // C(j-1, l-1), starting at j = l
        unsigned __int128 num = 0;
        for (std::size_t j = l; j <= k; ++j) {
            num += binom << (k - j);
            binom = binom * j / (j - l + 1);
        }
        out.numerator = static_cast<std::uint64_t>(num);
        out.value = std::ldexp(static_cast<long double>(*out.numerator), -static_cast<int>(k));
        return out;
    }
    const long double ln2 = std::log(2.0L);
    std::vector<long double> logs;
    logs.reserve(k - l + 1);
    for (std::size_t j = l; j <= k; ++j) {
        logs.push_back(std::lgamma(static_cast<long double>(j)) - std::lgamma(static_cast<long double>(l)) -
                       std::lgamma(static_cast<long double>(j - l + 1)) - static_cast<long double>(j) * ln2);
    }
    const long double top = *std::max_element(logs.begin(), logs.end());
    long double acc = 0.0L;
    for (auto v : logs) acc += std::exp(v - top);
    out.value = std::min(1.0L, std::exp(top) * acc);
    return out;
}

}  // namespace lcsf
