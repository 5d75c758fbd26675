#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "lcsf/lcs.hpp"
#include "lcsf/matchings.hpp"
#include "support.hpp"

using namespace lcsf;
using test::bits;

namespace {

Matching worked_matching() { return {{1, 3, 4, 5, 6}, {1, 2, 4, 7, 8}}; }
Matching nonminimal_matching() { return {{1, 2, 3, 4, 5, 7}, {1, 7, 8, 9, 10, 11}}; }

bool lex_less(const Matching& a, const Matching& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.pi[i] != b.pi[i]) return a.pi[i] < b.pi[i];
        if (a.eta[i] != b.eta[i]) return a.eta[i] < b.eta[i];
    }
    return false;
}

// Returned matching is lex-least and no maximal matching lies strictly below it.
void check_minimal_by_enumeration(const BinarySequence& z, const BinarySequence& y) {
    const Matching got = minimal_matching(z, y);
    const std::size_t m = lcs_length(z, y);
    REQUIRE(got.size() == m);
    REQUIRE(is_valid_matching(got, z, y));
    std::vector<Matching> all;
    Matching cur;
    test::enumerate_matchings(z, y, m, cur, all);
    REQUIRE_FALSE(all.empty());
    for (const auto& other : all) {
        REQUIRE_FALSE(lex_less(other, got));
        if (!(other == got)) REQUIRE_FALSE(precedes_or_equal(other, got));
    }
}

}  // namespace

TEST_CASE("worked matching: four matches, two non-empty, ratio 3/8") {
    const auto z = bits("101011");
    const auto y = bits("111000111");
    const Matching mt = worked_matching();
    REQUIRE(is_valid_matching(mt, z, y));
    const auto rec = classify_matches(mt, z, y);
    REQUIRE(rec.size() == 4);
    CHECK(rec[0].is_empty);
    CHECK(rec[1].contains_one);
    CHECK_FALSE(rec[1].contains_zero);
    CHECK(rec[2].contains_zero);
    CHECK(rec[2].free_bits == 2);
    CHECK(rec[3].is_empty);
    const auto sum = summarize(rec);
    CHECK(sum.nonempty == 2);
    CHECK(sum.free_bits == 3);
    CHECK(static_cast<double>(sum.free_bits) / mt.eta.back() == doctest::Approx(3.0 / 8.0));
    CHECK(check_single_color(rec));
}

TEST_CASE("minimal matching of the worked state") {
    const auto z = bits("101011");
    const auto y = bits("111000111");
    const Matching mt = minimal_matching(z, y);
    CHECK(mt.pi == std::vector<std::uint32_t>{1, 2, 3, 5, 6});
    CHECK(mt.eta == std::vector<std::uint32_t>{1, 4, 7, 8, 9});
    CHECK(summarize(classify_matches(mt, z, y)).nonempty == 2);
}

TEST_CASE("non-minimal example: mixed match, and the minimal one moves eta(2) down") {
    const auto z = bits("0101101");
    const auto y = bits("00110010111");
    const Matching bad = nonminimal_matching();
    REQUIRE(is_valid_matching(bad, z, y));
    REQUIRE(bad.size() == lcs_length(z, y));
    const auto rec = classify_matches(bad, z, y);
    CHECK_FALSE(check_single_color(rec));
    CHECK(summarize(rec).nonempty == 1);
    CHECK(summarize(rec).free_bits == 5);

    const Matching good = minimal_matching(z, y);
    CHECK(good.eta[1] <= 3);
    CHECK(precedes_or_equal(good, bad));
    Matching star = bad;
    star.eta[1] = 3;
    CHECK(is_valid_matching(star, z, y));
    CHECK(precedes_or_equal(star, bad));

    const auto [top, bottom] = render_alignment(bad, z, y);
    CHECK(top == "0_____101101");
    CHECK(bottom == "0011001011_1");
}

TEST_CASE("identity and trivial matchings") {
    const auto s = bits("0110100111");
    const Matching mt = minimal_matching(s, s);
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(mt.pi[i] == i + 1);
        CHECK(mt.eta[i] == i + 1);
    }
    const auto rec = classify_matches(mt, s, s);
    CHECK(summarize(rec).nonempty == 0);
    CHECK(summarize(rec).free_bits == 0);
    CHECK(check_single_color(classify_matches(minimal_matching(bits("1"), bits("0001")), bits("1"), bits("0001"))));
    CHECK(minimal_matching(bits(""), bits("0101")).size() == 0);
}

TEST_CASE("classify rejects invalid matchings") {
    CHECK_THROWS(classify_matches({{1, 2}, {2, 1}}, bits("00"), bits("00")));
    CHECK_THROWS(classify_matches({{1}, {1}}, bits("0"), bits("1")));
}

TEST_CASE("matching CSV rows") {
    std::ostringstream out;
    write_matching_csv(out, worked_matching());
    CHECK(out.str().rfind("i,pi,eta", 0) == 0);
    CHECK(out.str().find("5,6,8") != std::string::npos);
}

TEST_CASE("minimality by exhaustive enumeration on random short pairs") {
    RngStream rng(41, 0);
    for (int t = 0; t < 300; ++t) {
        const auto z = BinarySequence::random(rng.uniform_below(11), rng);
        const auto y = BinarySequence::random(rng.uniform_below(11), rng);
        check_minimal_by_enumeration(z, y);
    }
}

TEST_CASE("single colour and free-bit accounting on random pairs") {
    RngStream rng(42, 0);
    for (int t = 0; t < 2000; ++t) {
        const auto z = BinarySequence::random(rng.uniform_below(120), rng);
        const auto y = BinarySequence::random(rng.uniform_below(120), rng);
        const Matching mt = minimal_matching(z, y);
        REQUIRE(mt.size() == lcs_bitparallel(z, y));
        const auto rec = classify_matches(mt, z, y);
        REQUIRE(check_single_color(rec));
        const std::size_t free = summarize(rec).free_bits;
        // letters before eta(1) count towards eta(m) - m but belong to no match
        if (mt.size()) REQUIRE(free + (mt.eta.front() - 1) == mt.eta.back() - mt.size());
        for (const auto& r : rec) REQUIRE(r.is_empty == (r.free_bits == 0));
    }
}

TEST_CASE("blocks tile Y with alternating colours") {
    const auto b = blocks(bits("111000111"));
    REQUIRE(b.size() == 3);
    CHECK(b[0].start == 1);
    CHECK(b[0].end == 3);
    CHECK(b[1].color == 0);
    CHECK(b[2].end == 9);
    CHECK(count_nd(bits("111000111"), 3).n_d == 9);
    CHECK(count_nd(bits("111000111"), 4).n_d == 0);
    CHECK(blocks(bits("")).empty());
    CHECK_THROWS(count_nd(bits("01"), 0));

    RngStream rng(43, 0);
    for (int t = 0; t < 200; ++t) {
        const auto y = BinarySequence::random(1 + rng.uniform_below(300), rng);
        const auto bl = blocks(y);
        std::size_t next = 1;
        for (std::size_t i = 0; i < bl.size(); ++i) {
            REQUIRE(bl[i].start == next);
            next = bl[i].end + 1;
            if (i) REQUIRE(bl[i].color != bl[i - 1].color);
            for (std::size_t j = bl[i].start; j <= bl[i].end; ++j) REQUIRE(y[j - 1] == bl[i].color);
        }
        REQUIRE(next == y.size() + 1);
    }
}

TEST_CASE("Ntilde counts windows of D+1 equal letters") {
    RngStream rng(44, 0);
    for (int t = 0; t < 200; ++t) {
        const auto y = BinarySequence::random(1 + rng.uniform_below(200), rng);
        const std::size_t d = 1 + rng.uniform_below(6);
        std::size_t brute = 0;
        for (std::size_t s = 0; s + d < y.size(); ++s) {
            bool same = true;
            for (std::size_t j = 1; j <= d; ++j) same = same && y[s + j] == y[s];
            brute += same;
        }
        REQUIRE(count_nd(y, d).ntilde_d == brute);
    }
}

TEST_CASE("renewal embedding") {
    auto e = renewal_embed(bits("001"), bits("10101000111"));
    CHECK(e.nu == std::vector<std::size_t>{2, 4, 5});
    CHECK(e.complete);
    e = renewal_embed(bits("0110"), bits("0110"));
    CHECK(e.nu == std::vector<std::size_t>{1, 2, 3, 4});
    e = renewal_embed(bits("0001"), bits("0100"));
    CHECK_FALSE(e.complete);
    CHECK(e.nu == std::vector<std::size_t>{1, 3, 4});
}

TEST_CASE("renewal interarrivals have mean 2") {
    double sum = 0, sum_sq = 0;
    std::size_t count = 0;
    for (std::size_t r = 0; r < 10000; ++r) {
        RngStream rng(45, r);
        const auto z = BinarySequence::random(10, rng);
        const auto y = BinarySequence::random(200, rng);
        const auto e = renewal_embed(z, y);
        REQUIRE(e.complete);
        for (std::size_t x : e.interarrivals()) {
            sum += static_cast<double>(x);
            sum_sq += static_cast<double>(x) * static_cast<double>(x);
            ++count;
        }
    }
    // geometric(1/2) on {1,2,...}: variance 2
    const double mean = sum / static_cast<double>(count);
    CHECK(std::abs(mean - 2.0) < 3.0 * std::sqrt(2.0 / static_cast<double>(count)));
}

TEST_CASE("containment probability") {
    auto c = containment_prob_exact(1, 1);
    CHECK(c.value == doctest::Approx(0.5));
    REQUIRE(c.numerator);
    CHECK(*c.numerator == 1);
    CHECK(c.denominator_log2 == 1);
    CHECK_THROWS(containment_prob_exact(0, 3));
    CHECK_THROWS(containment_prob_exact(5, 4));

    // l = k <= 4 and a few l < k: enumerate all 2^(l+k) pairs
    for (std::size_t l = 1; l <= 4; ++l) {
        for (std::size_t k = l; k <= 6; ++k) {
            std::uint64_t hits = 0;
            for (std::uint64_t a = 0; a < (1u << l); ++a) {
                for (std::uint64_t b = 0; b < (1u << k); ++b) {
                    hits += test::is_subsequence(test::from_mask(a, l), test::from_mask(b, k));
                }
            }
            const auto p = containment_prob_exact(l, k);
            const double want = static_cast<double>(hits) / std::ldexp(1.0, static_cast<int>(l + k));
            REQUIRE(static_cast<double>(p.value) == doctest::Approx(want).epsilon(1e-15));
        }
    }
    CHECK(static_cast<double>(containment_prob_exact(4, 4).value) == doctest::Approx(1.0 / 16));

    // log-space branch continues the exact branch
    const auto lo = containment_prob_exact(30, 34);
    const auto hi = containment_prob_exact(30, 35);
    REQUIRE(lo.numerator);
    CHECK_FALSE(hi.numerator);
    CHECK(static_cast<double>(hi.value) > static_cast<double>(lo.value));
    CHECK(containment_prob_exact(10000, 10000).value > 0.0L);
}

TEST_CASE("containment probability against Monte Carlo at l = 10, k = 30") {
    const std::size_t trials = 200000;
    std::size_t hits = 0;
    for (std::size_t r = 0; r < trials; ++r) {
        RngStream rng(46, r);
        const auto y = BinarySequence::random(10, rng);
        const auto z = BinarySequence::random(30, rng);
        hits += test::is_subsequence(y, z);
    }
    const double p = static_cast<double>(containment_prob_exact(10, 30).value);
    const double sd = std::sqrt(p * (1 - p) / trials);
    CHECK(std::abs(static_cast<double>(hits) / trials - p) < 3 * sd);
}
