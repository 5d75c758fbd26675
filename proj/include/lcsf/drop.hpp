#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "lcsf/lcs.hpp"
#include "lcsf/rng.hpp"
#include "lcsf/sequences.hpp"

namespace lcsf {

// Law of the insertion slot T_{k+1} when growing Z^k (positions are 1-based):
//   PaperInterior  uniform on {2, ..., k}     (k-1 slots; Z_1 and Z_k never move off the ends)
//   FullUniform    uniform on {1, ..., k+1}   (k+1 slots)
enum class InsertionMode { PaperInterior, FullUniform };

InsertionMode parse_insertion_mode(std::string_view text);
std::string_view to_string(InsertionMode mode);

struct DropEvent {
    std::uint32_t position;  // T_j, 1-based slot in Z^j
    Bit bit;                 // V_j
};

// Z^k together with the insertion history that produced it. Z^2 = V_1 V_2 and history
// holds (T_j, V_j) for j = 3..k.
class DropState {
public:
    DropState(Bit v1, Bit v2, InsertionMode mode);

    std::size_t k() const { return current_.size(); }
    InsertionMode mode() const { return mode_; }
    const BinarySequence& current() const { return current_; }
    Bit v1() const { return v1_; }
    Bit v2() const { return v2_; }
    const std::vector<DropEvent>& history() const { return history_; }

    // Number of legal slots for the next insertion and the 1-based first slot.
    std::size_t slot_count() const;
    std::uint32_t first_slot() const;

    // Insert `bit` at 1-based `position`; throws if the slot is illegal under mode().
    void insert(std::uint32_t position, Bit bit);

    // Z^j for 2 <= j <= k, rebuilt from the history.
    BinarySequence replay(std::size_t j) const;

private:
    BinarySequence current_;
    Bit v1_;
    Bit v2_;
    InsertionMode mode_;
    std::vector<DropEvent> history_;
};

DropState drop_init(RngStream& rng, InsertionMode mode = InsertionMode::PaperInterior);
// Draws T_{k+1} under the state's mode and a fair V_{k+1}, then inserts.
DropEvent drop_step(DropState& state, RngStream& rng);
DropEvent draw_drop(const DropState& state, RngStream& rng);

// Curve of L^a_l(k) for k = 0..state.k(), replaying the recorded history incrementally.
ScoreCurve lcs_prefix_curve(const DropState& state, const BinarySequence& y, std::size_t l);

// CSV rows "j,T_j,V_j" for j = 1..k (T_1 = 1, T_2 = 2 describe Z^2 = V_1 V_2).
void write_history_csv(std::ostream& out, const DropState& state);
DropState read_history_csv(std::istream& in, InsertionMode mode);

// Substreams of one coupled replication; shared by every driver so that the same
// (seed, replication) always sees the same Na, Y and drop history.
namespace streams {
inline constexpr std::uint64_t kNa = 0;
inline constexpr std::uint64_t kY = 1;
inline constexpr std::uint64_t kDrop = 2;
}  // namespace streams

struct CoupledSample {
    std::size_t ln = 0;       // L^a(n - Na)
    std::size_t a_count = 0;  // Na ~ Binomial(n, p)
    std::size_t index = 0;    // n - Na, the curve index read off
    ScoreCurve curve;         // values for k = 0..n
};

// Coupled draw of L_n: Na first, then Z grown to length n against an independent Y.
// `forced_a_count` overrides the binomial draw (test hook).
CoupledSample simulate_ln_coupled(std::size_t n, double p, const RngStream& rng,
                                  InsertionMode mode = InsertionMode::PaperInterior,
                                  std::optional<std::size_t> forced_a_count = std::nullopt);

// Same law for L_n without building the curve: grows Z only to n - Na and runs one LCS.
struct CoupledValue {
    std::size_t ln = 0;
    std::size_t a_count = 0;
};
CoupledValue sample_ln_coupled(std::size_t n, double p, const RngStream& rng,
                               InsertionMode mode = InsertionMode::PaperInterior);

// Z^k grown by the drop scheme (k >= 1; Z^1 = V_1).
BinarySequence grow_drop_string(std::size_t k, RngStream& rng, InsertionMode mode);

}  // namespace lcsf
