#pragma once

#include <cstdint>
#include <random>

namespace lcsf {

// Seedable random stream. (seed, stream_index, substream) fully determines
// every draw, so replication r of an experiment always uses stream r no
// matter how replications are scheduled across workers.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_index, std::uint64_t substream = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_index() const { return stream_; }
    std::uint64_t substream_index() const { return sub_; }

    // Independent child stream of the same replication.
    RngStream substream(std::uint64_t which) const;

    std::uint64_t next_u64() { return engine_(); }
    int fair_bit();
    // Uniform on [0, bound), bound > 0. Unbiased (Lemire rejection).
    std::uint64_t uniform_below(std::uint64_t bound);
    // Uniform on [lo, hi], inclusive.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        return lo + uniform_below(hi - lo + 1);
    }
    // Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform01() < p; }
    // Sum of n Bernoulli(p) draws; exact law, portable across standard libraries.
    std::uint64_t binomial(std::uint64_t n, double p);

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t sub_;
    std::mt19937_64 engine_;
    std::uint64_t bit_cache_ = 0;
    int bits_left_ = 0;
};

}  // namespace lcsf
