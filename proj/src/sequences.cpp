#include "lcsf/sequences.hpp"

#include <bit>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace lcsf {

char to_char(Symbol3 s) {
    switch (s) {
        case Symbol3::Zero: return '0';
        case Symbol3::One: return '1';
        case Symbol3::A: return 'a';
    }
    return '?';
}

Symbol3 symbol_from_char(char c) {
    switch (c) {
        case '0': return Symbol3::Zero;
        case '1': return Symbol3::One;
        case 'a': return Symbol3::A;
        default: break;
    }
    throw std::invalid_argument(std::string("invalid letter '") + c + "', expected one of 0, 1, a");
}

// ---------------------------------------------------------------------------
// BinarySequence

BinarySequence BinarySequence::from_string(std::string_view text) {
    BinarySequence seq(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            seq.set(i, 1);
        } else if (text[i] != '0') {
            throw std::invalid_argument(std::string("invalid binary letter '") + text[i] + "'");
        }
    }
    return seq;
}

BinarySequence BinarySequence::random(std::size_t length, RngStream& rng) {
    BinarySequence seq(length);
    for (auto& w : seq.words_) w = rng.next_u64();
    if (length & 63) seq.words_.back() &= (std::uint64_t{1} << (length & 63)) - 1;
    return seq;
}

void BinarySequence::set(std::size_t i, Bit b) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (b) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

void BinarySequence::push_back(Bit b) {
    if ((size_ & 63) == 0) words_.push_back(0);
    ++size_;
    set(size_ - 1, b);
}

void BinarySequence::insert(std::size_t pos, Bit b) {
    if (pos > size_) throw std::out_of_range("BinarySequence::insert position past end");
    if ((size_ & 63) == 0) words_.push_back(0);
    const std::size_t w = pos >> 6;
    const unsigned off = pos & 63;
    for (std::size_t i = words_.size() - 1; i > w; --i) {
        words_[i] = (words_[i] << 1) | (words_[i - 1] >> 63);
    }
    const std::uint64_t low_mask = off == 0 ? 0 : (std::uint64_t{1} << off) - 1;
    const std::uint64_t word = words_[w];
    words_[w] = (word & low_mask) | ((word & ~low_mask) << 1) | (std::uint64_t{b & 1u} << off);
    ++size_;
}

BinarySequence BinarySequence::prefix(std::size_t length) const {
    if (length > size_) throw std::out_of_range("prefix longer than sequence");
    BinarySequence out(length);
    std::copy_n(words_.begin(), out.words_.size(), out.words_.begin());
    if (length & 63) out.words_.back() &= (std::uint64_t{1} << (length & 63)) - 1;
    return out;
}

std::size_t BinarySequence::count_ones() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::string BinarySequence::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if ((*this)[i]) s[i] = '1';
    }
    return s;
}

bool operator==(const BinarySequence& a, const BinarySequence& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
}

// ---------------------------------------------------------------------------
// TriSequence

TriSequence TriSequence::from_string(std::string_view text, double p) {
    TriSequence seq(p);
    for (char c : text) seq.push_back(symbol_from_char(c));
    return seq;
}

TriSequence TriSequence::from_binary(const BinarySequence& bits) {
    TriSequence seq;
    for (std::size_t i = 0; i < bits.size(); ++i) seq.push_back(bits[i] ? Symbol3::One : Symbol3::Zero);
    return seq;
}

void TriSequence::push_back(Symbol3 s) {
    if ((size_ & 31) == 0) words_.push_back(0);
    words_[size_ >> 5] |= static_cast<std::uint64_t>(s) << ((size_ & 31) * 2);
    ++size_;
}

std::string TriSequence::to_string() const {
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) s.push_back(to_char((*this)[i]));
    return s;
}

bool operator==(const TriSequence& a, const TriSequence& b) {
    return a.size_ == b.size_ && a.words_ == b.words_ && a.p_ == b.p_;
}

// ---------------------------------------------------------------------------

CaseOnePair generate_case1(std::size_t n, double p, const RngStream& rng) {
    if (n == 0) throw std::invalid_argument("n must be at least 1");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie strictly between 0 and 1");
    RngStream xs = rng.substream(0);
    RngStream ys = rng.substream(1);
    CaseOnePair out{TriSequence(p), BinarySequence::random(n, ys)};
    for (std::size_t i = 0; i < n; ++i) {
        if (xs.bernoulli(p)) {
            out.x.push_back(Symbol3::A);
        } else {
            out.x.push_back(xs.fair_bit() ? Symbol3::One : Symbol3::Zero);
        }
    }
    return out;
}

StrippedSequence strip_a(const TriSequence& x) {
    StrippedSequence out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Symbol3 s = x[i];
        if (s == Symbol3::A) {
            ++out.a_count;
        } else {
            out.bits.push_back(s == Symbol3::One ? 1 : 0);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Binary format

namespace {

constexpr char kBinaryMagic[4] = {'L', 'C', 'B', '1'};
constexpr char kTriMagic[4] = {'L', 'C', 'T', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(buf), 8);
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char buf[8];
    if (!in.read(reinterpret_cast<char*>(buf), 8)) throw std::runtime_error("truncated sequence file");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{buf[i]} << (8 * i);
    return v;
}

void put_payload(std::ostream& out, std::span<const std::uint64_t> words, std::size_t bytes) {
    for (std::size_t i = 0; i < bytes; ++i) {
        out.put(static_cast<char>(words[i / 8] >> (8 * (i % 8))));
    }
}

std::vector<std::uint64_t> get_payload(std::istream& in, std::size_t bytes) {
    std::vector<std::uint64_t> words((bytes + 7) / 8, 0);
    for (std::size_t i = 0; i < bytes; ++i) {
        const int c = in.get();
        if (c == std::char_traits<char>::eof()) throw std::runtime_error("truncated sequence payload");
        words[i / 8] |= std::uint64_t{static_cast<unsigned char>(c)} << (8 * (i % 8));
    }
    return words;
}

void expect_magic(std::istream& in, const char (&magic)[4]) {
    char got[4];
    if (!in.read(got, 4) || std::memcmp(got, magic, 4) != 0) throw std::runtime_error("bad sequence file magic");
}

}  // namespace

void write_binary(std::ostream& out, const BinarySequence& seq) {
    out.write(kBinaryMagic, 4);
    put_u64(out, seq.size());
    put_payload(out, seq.words(), (seq.size() + 7) / 8);
}

void write_binary(std::ostream& out, const TriSequence& seq) {
    out.write(kTriMagic, 4);
    put_u64(out, seq.size());
    put_u64(out, std::bit_cast<std::uint64_t>(seq.p()));
    put_payload(out, seq.words(), (seq.size() * 2 + 7) / 8);
}

BinarySequence read_binary_sequence(std::istream& in) {
    expect_magic(in, kBinaryMagic);
    const std::uint64_t n = get_u64(in);
    auto words = get_payload(in, (n + 7) / 8);
    BinarySequence seq(n);
    for (std::size_t i = 0; i < n; ++i) seq.set(i, static_cast<Bit>((words[i >> 6] >> (i & 63)) & 1u));
    return seq;
}

TriSequence read_tri_sequence(std::istream& in) {
    expect_magic(in, kTriMagic);
    const std::uint64_t n = get_u64(in);
    const double p = std::bit_cast<double>(get_u64(in));
    auto words = get_payload(in, (n * 2 + 7) / 8);
    TriSequence seq(p);
    for (std::size_t i = 0; i < n; ++i) {
        const auto code = (words[i >> 5] >> ((i & 31) * 2)) & 3u;
        if (code > 2) throw std::runtime_error("invalid letter code in sequence file");
        seq.push_back(static_cast<Symbol3>(code));
    }
    return seq;
}

}  // namespace lcsf
