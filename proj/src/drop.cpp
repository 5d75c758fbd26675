#include "lcsf/drop.hpp"

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lcsf {

InsertionMode parse_insertion_mode(std::string_view text) {
    if (text == "paper-interior") return InsertionMode::PaperInterior;
    if (text == "full-uniform") return InsertionMode::FullUniform;
    throw std::invalid_argument("unknown insertion mode '" + std::string(text) +
                                "', expected paper-interior or full-uniform");
}

std::string_view to_string(InsertionMode mode) {
    return mode == InsertionMode::PaperInterior ? "paper-interior" : "full-uniform";
}

DropState::DropState(Bit v1, Bit v2, InsertionMode mode) : v1_(v1 & 1u), v2_(v2 & 1u), mode_(mode) {
    current_.push_back(v1_);
    current_.push_back(v2_);
}

std::size_t DropState::slot_count() const {
    return mode_ == InsertionMode::PaperInterior ? k() - 1 : k() + 1;
}

std::uint32_t DropState::first_slot() const { return mode_ == InsertionMode::PaperInterior ? 2 : 1; }

void DropState::insert(std::uint32_t position, Bit bit) {
    const std::size_t lo = first_slot();
    const std::size_t hi = lo + slot_count() - 1;
    if (position < lo || position > hi) {
        throw std::out_of_range("insertion slot " + std::to_string(position) + " outside [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "] for k = " + std::to_string(k()));
    }
    current_.insert(position - 1, bit & 1u);
    history_.push_back({position, static_cast<Bit>(bit & 1u)});
}

BinarySequence DropState::replay(std::size_t j) const {
    if (j < 2 || j > k()) throw std::out_of_range("replay index outside [2, k]");
    BinarySequence z;
    z.push_back(v1_);
    z.push_back(v2_);
    for (std::size_t i = 0; i + 2 < j; ++i) z.insert(history_[i].position - 1, history_[i].bit);
    return z;
}

DropState drop_init(RngStream& rng, InsertionMode mode) {
    const Bit v1 = static_cast<Bit>(rng.fair_bit());
    const Bit v2 = static_cast<Bit>(rng.fair_bit());
    return DropState(v1, v2, mode);
}

DropEvent draw_drop(const DropState& state, RngStream& rng) {
    const auto position = static_cast<std::uint32_t>(state.first_slot() + rng.uniform_below(state.slot_count()));
    const auto bit = static_cast<Bit>(rng.fair_bit());
    return {position, bit};
}

DropEvent drop_step(DropState& state, RngStream& rng) {
    const DropEvent ev = draw_drop(state, rng);
    state.insert(ev.position, ev.bit);
    return ev;
}

ScoreCurve lcs_prefix_curve(const DropState& state, const BinarySequence& y, std::size_t l) {
    if (l > y.size()) throw std::out_of_range("prefix length l exceeds |Y|");
    ScoreCurveTracker tracker(y, l);
    tracker.reset(state.replay(2));
    for (const auto& ev : state.history()) tracker.insert(ev.position - 1, ev.bit);
    return tracker.curve();
}

void write_history_csv(std::ostream& out, const DropState& state) {
    out << "j,T,V\r\n";
    out << "1,1," << int(state.v1()) << "\r\n";
    out << "2,2," << int(state.v2()) << "\r\n";
    std::size_t j = 3;
    for (const auto& ev : state.history()) out << j++ << ',' << ev.position << ',' << int(ev.bit) << "\r\n";
}

DropState read_history_csv(std::istream& in, InsertionMode mode) {
    std::string line;
    std::vector<std::array<long long, 3>> rows;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            if (line != "j,T,V") throw std::runtime_error("history CSV must start with header j,T,V");
            continue;
        }
        std::array<long long, 3> row{};
        std::istringstream ss(line);
        char comma1 = 0, comma2 = 0;
        if (!(ss >> row[0] >> comma1 >> row[1] >> comma2 >> row[2]) || comma1 != ',' || comma2 != ',') {
            throw std::runtime_error("malformed history row: " + line);
        }
        rows.push_back(row);
    }
    if (rows.size() < 2) throw std::runtime_error("history CSV needs at least rows j=1 and j=2");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][0] != static_cast<long long>(i + 1)) throw std::runtime_error("history rows out of order");
        if (rows[i][2] != 0 && rows[i][2] != 1) throw std::runtime_error("history bit must be 0 or 1");
    }
    if (rows[0][1] != 1 || rows[1][1] != 2) throw std::runtime_error("rows j=1,2 must have T=1,2");
    DropState state(static_cast<Bit>(rows[0][2]), static_cast<Bit>(rows[1][2]), mode);
    for (std::size_t i = 2; i < rows.size(); ++i) {
        if (rows[i][1] < 1) throw std::runtime_error("history slot must be positive");
        state.insert(static_cast<std::uint32_t>(rows[i][1]), static_cast<Bit>(rows[i][2]));
    }
    return state;
}

BinarySequence grow_drop_string(std::size_t k, RngStream& rng, InsertionMode mode) {
    DropState state = drop_init(rng, mode);
    if (k < 2) return state.current().prefix(k);
    while (state.k() < k) drop_step(state, rng);
    return state.current();
}

CoupledSample simulate_ln_coupled(std::size_t n, double p, const RngStream& rng, InsertionMode mode,
                                  std::optional<std::size_t> forced_a_count) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie strictly between 0 and 1");
    if (n == 0) throw std::invalid_argument("n must be at least 1");
    RngStream na_rng = rng.substream(streams::kNa);
    RngStream y_rng = rng.substream(streams::kY);
    RngStream drop_rng = rng.substream(streams::kDrop);

    CoupledSample out;
    out.a_count = forced_a_count ? *forced_a_count : na_rng.binomial(n, p);
    if (out.a_count > n) throw std::invalid_argument("forced a-count exceeds n");
    const BinarySequence y = BinarySequence::random(n, y_rng);

    ScoreCurveTracker tracker(y, n);
    DropState state = drop_init(drop_rng, mode);
    tracker.reset(state.current().prefix(std::min<std::size_t>(n, 2)));
    while (state.k() < n) {
        const DropEvent ev = drop_step(state, drop_rng);
        tracker.insert(ev.position - 1, ev.bit);
    }
    out.curve = tracker.curve();
    out.index = n - out.a_count;
    out.ln = out.curve[out.index];
    return out;
}

CoupledValue sample_ln_coupled(std::size_t n, double p, const RngStream& rng, InsertionMode mode) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie strictly between 0 and 1");
    if (n == 0) throw std::invalid_argument("n must be at least 1");
    RngStream na_rng = rng.substream(streams::kNa);
    RngStream y_rng = rng.substream(streams::kY);
    RngStream drop_rng = rng.substream(streams::kDrop);
    CoupledValue out;
    out.a_count = na_rng.binomial(n, p);
    const BinarySequence y = BinarySequence::random(n, y_rng);
    const BinarySequence z = grow_drop_string(n - out.a_count, drop_rng, mode);
    out.ln = lcs_bitparallel(z, y);
    return out;
}

}  // namespace lcsf
