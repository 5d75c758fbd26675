#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcsf/rng.hpp"

namespace lcsf {

// Letter of the three-letter sequence X. Zero and One embed into binary letters.
enum class Symbol3 : std::uint8_t { Zero = 0, One = 1, A = 2 };

using Bit = std::uint8_t;  // 0 or 1

char to_char(Symbol3 s);
Symbol3 symbol_from_char(char c);

// Binary string packed 64 letters per word; bit i lives in word i/64 at offset i%64.
// Positions are 0-based throughout this class.
class BinarySequence {
public:
    BinarySequence() = default;
    explicit BinarySequence(std::size_t length) : words_((length + 63) / 64, 0), size_(length) {}

    static BinarySequence from_string(std::string_view text);
    static BinarySequence random(std::size_t length, RngStream& rng);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    Bit operator[](std::size_t i) const { return static_cast<Bit>((words_[i >> 6] >> (i & 63)) & 1u); }
    void set(std::size_t i, Bit b);
    void push_back(Bit b);
    // Insert b so that it ends up at position pos (0 <= pos <= size()); later bits move right.
    void insert(std::size_t pos, Bit b);

    BinarySequence prefix(std::size_t length) const;
    std::size_t count_ones() const;
    std::span<const std::uint64_t> words() const { return words_; }
    std::string to_string() const;

    friend bool operator==(const BinarySequence& a, const BinarySequence& b);

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

// Sequence over {0,1,a}, packed 2 bits per letter. Records the a-probability it was drawn with.
class TriSequence {
public:
    TriSequence() = default;
    explicit TriSequence(double p) : p_(p) {}

    static TriSequence from_string(std::string_view text, double p = 0.0);
    static TriSequence from_binary(const BinarySequence& bits);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    double p() const { return p_; }
    Symbol3 operator[](std::size_t i) const {
        return static_cast<Symbol3>((words_[i >> 5] >> ((i & 31) * 2)) & 3u);
    }
    void push_back(Symbol3 s);
    std::string to_string() const;
    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const TriSequence& a, const TriSequence& b);

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
    double p_ = 0.0;
};

struct CaseOnePair {
    TriSequence x;
    BinarySequence y;
};

// X i.i.d. with P(a)=p, P(0)=P(1)=(1-p)/2; Y i.i.d. fair bits. X and Y use independent substreams.
CaseOnePair generate_case1(std::size_t n, double p, const RngStream& rng);

struct StrippedSequence {
    BinarySequence bits;  // X with every 'a' removed, order preserved
    std::size_t a_count = 0;
};

StrippedSequence strip_a(const TriSequence& x);

// Length-prefixed binary format: 4-byte magic, u64 little-endian length, packed payload.
// TriSequence additionally stores p as an IEEE double after the length.
void write_binary(std::ostream& out, const BinarySequence& seq);
void write_binary(std::ostream& out, const TriSequence& seq);
BinarySequence read_binary_sequence(std::istream& in);
TriSequence read_tri_sequence(std::istream& in);

}  // namespace lcsf
