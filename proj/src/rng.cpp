#include "lcsf/rng.hpp"

namespace lcsf {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t sub) {
    auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
    auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
    std::seed_seq seq{lo(seed), hi(seed), lo(stream), hi(stream), lo(sub), hi(sub), 0x6c637366u};
    return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index, std::uint64_t substream)
    : seed_(seed), stream_(stream_index), sub_(substream), engine_(make_engine(seed, stream_index, substream)) {}

RngStream RngStream::substream(std::uint64_t which) const {
    // Children of substream s are numbered s*2^20 + which + 1 to stay disjoint from siblings.
    return RngStream(seed_, stream_, (sub_ << 20) + which + 1);
}

int RngStream::fair_bit() {
    if (bits_left_ == 0) {
        bit_cache_ = engine_();
        bits_left_ = 64;
    }
    int b = static_cast<int>(bit_cache_ & 1u);
    bit_cache_ >>= 1;
    --bits_left_;
    return b;
}

std::uint64_t RngStream::uniform_below(std::uint64_t bound) {
    std::uint64_t x = engine_();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            x = engine_();
            m = static_cast<unsigned __int128>(x) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t RngStream::binomial(std::uint64_t n, double p) {
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < n; ++i) count += bernoulli(p) ? 1 : 0;
    return count;
}

}  // namespace lcsf
