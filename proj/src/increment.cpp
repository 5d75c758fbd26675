#include "lcsf/increment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lcsf/lcs.hpp"
#include "lcsf/parallel.hpp"

namespace lcsf {

namespace {

std::pair<std::size_t, std::size_t> slot_range(std::size_t k, InsertionMode mode) {
    if (k < 2) throw std::invalid_argument("frozen state needs |Z| >= 2");
    return mode == InsertionMode::PaperInterior ? std::pair<std::size_t, std::size_t>{2, k}
                                                : std::pair<std::size_t, std::size_t>{1, k + 1};
}

bool raises(const BinarySequence& z, const BinarySequence& y, std::size_t base, std::size_t slot, Bit bit) {
    BinarySequence grown = z;
    grown.insert(slot - 1, bit);
    return lcs_bitparallel(grown, y) == base + 1;
}

}  // namespace

IncrementExact enumerate_increment(const BinarySequence& z, const BinarySequence& y, InsertionMode mode) {
    return enumerate_increment(z, y, mode, minimal_matching(z, y));
}

IncrementExact enumerate_increment(const BinarySequence& z, const BinarySequence& y, InsertionMode mode,
                                   const Matching& mt) {
    if (!is_valid_matching(mt, z, y)) throw std::invalid_argument("matching is not valid for (Z, Y)");
    const std::size_t base = lcs_bitparallel(z, y);
    if (mt.size() != base) throw std::invalid_argument("matching is not of maximal length");
    const auto [lo, hi] = slot_range(z.size(), mode);
    IncrementExact out;
    out.k = z.size();
    out.slots = hi - lo + 1;
    out.nonempty = summarize(classify_matches(mt, z, y)).nonempty;
    for (std::size_t s = lo; s <= hi; ++s) {
        for (Bit b : {Bit{0}, Bit{1}}) {
            ++out.outcomes;
            if (raises(z, y, base, s, b)) ++out.hits;
        }
    }
    out.probability = static_cast<double>(out.hits) / static_cast<double>(out.outcomes);
    out.bound_k = 0.5 * static_cast<double>(out.nonempty) / static_cast<double>(out.k);
    out.bound_k_minus_1 = 0.5 * static_cast<double>(out.nonempty) / static_cast<double>(out.k - 1);
    return out;
}

IncrementReplay replay_increment(const BinarySequence& z, const BinarySequence& y, InsertionMode mode,
                                 std::uint64_t draws, RngStream rng, double bound_k) {
    if (draws == 0) throw std::invalid_argument("replay needs at least one draw");
    const auto [lo, hi] = slot_range(z.size(), mode);
    const std::size_t base = lcs_bitparallel(z, y);
    IncrementReplay out;
    out.draws = draws;
    for (std::uint64_t d = 0; d < draws; ++d) {
        const std::size_t slot = lo + rng.uniform_below(hi - lo + 1);
        const auto bit = static_cast<Bit>(rng.fair_bit());
        if (raises(z, y, base, slot, bit)) ++out.hits;
    }
    out.estimate = static_cast<double>(out.hits) / static_cast<double>(draws);
    const double b = std::clamp(std::max(out.estimate, bound_k), 0.0, 1.0);
    out.sigma = std::sqrt(b * (1.0 - b) / static_cast<double>(draws));
    return out;
}

std::vector<IncrementRow> increment_probability_check(const ExperimentConfig& cfg, std::uint64_t draws) {
    cfg.validate();
    const std::vector<std::size_t> grid = cfg.k_grid();
    if (grid.empty()) throw std::invalid_argument("--n too small: the k grid over [low*n, n] is empty");
    std::vector<IncrementRow> rows(cfg.reps);
    parallel_for(cfg.reps, cfg.threads, [&](std::size_t r) {
        const RngStream base(cfg.seed, r);
        RngStream y_rng = base.substream(streams::kY);
        RngStream drop_rng = base.substream(streams::kDrop);
        const BinarySequence y = BinarySequence::random(cfg.n, y_rng);
        const std::size_t k = std::max<std::size_t>(2, grid[r % grid.size()]);
        const BinarySequence z = grow_drop_string(k, drop_rng, cfg.mode);
        IncrementRow row;
        row.rep = r;
        row.exact = enumerate_increment(z, y, cfg.mode);
        row.replay = replay_increment(z, y, cfg.mode, draws, base.substream(3), row.exact.bound_k);
        const double three_sigma = 3.0 * row.replay.sigma;
        row.violates_k = row.replay.estimate < row.exact.bound_k - three_sigma - 1e-12;
        row.violates_k_minus_1 = row.replay.estimate < row.exact.bound_k_minus_1 - three_sigma - 1e-12;
        row.exact_below_k = row.exact.probability < row.exact.bound_k - 1e-12;
        row.exact_below_k_minus_1 = row.exact.probability < row.exact.bound_k_minus_1 - 1e-12;
        rows[r] = row;
    });
    return rows;
}

WorkedState worked_increment_state() {
    WorkedState w{BinarySequence::from_string("101011"), BinarySequence::from_string("111000111"), {}};
    w.matching.pi = {1, 3, 4, 5, 6};
    w.matching.eta = {1, 2, 4, 7, 8};
    return w;
}

}  // namespace lcsf
