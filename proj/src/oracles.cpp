#include "lcsf/oracles.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcsf/lcs.hpp"
#include "lcsf/matchings.hpp"
#include "lcsf/sequences.hpp"

namespace lcsf {

namespace {

BinarySequence from_mask(std::uint64_t mask, std::size_t length) {
    BinarySequence s(length);
    for (std::size_t i = 0; i < length; ++i) s.set(i, static_cast<Bit>((mask >> i) & 1u));
    return s;
}

std::string exact_decimal(std::uint64_t numerator, unsigned log2_denominator) {
    using boost::multiprecision::cpp_int;
    // numerator / 2^e = numerator * 5^e / 10^e
    cpp_int scaled = numerator;
    for (unsigned i = 0; i < log2_denominator; ++i) scaled *= 5;
    std::string digits = scaled.str();
    if (log2_denominator == 0) return digits;
    if (digits.size() <= log2_denominator) digits.insert(0, log2_denominator - digits.size() + 1, '0');
    digits.insert(digits.size() - log2_denominator, 1, '.');
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
    return digits;
}

}  // namespace

ExactExpectation exact_expected_lcs(std::size_t length) {
    if (length > 14) throw std::invalid_argument("exhaustive expectation limited to length <= 14");
    ExactExpectation out;
    out.length = length;
    const std::uint64_t count = std::uint64_t{1} << length;
    out.pairs = count * count;
    std::vector<BinarySequence> all;
    all.reserve(count);
    for (std::uint64_t m = 0; m < count; ++m) all.push_back(from_mask(m, length));
    for (const auto& y : all) {
        const BitParallelLcs kernel(y);
        for (const auto& x : all) out.total += kernel.run(x);
    }
    const unsigned log2_den = static_cast<unsigned>(2 * length);
    const std::uint64_t g = std::gcd(out.total, out.pairs);
    out.numerator = out.total / g;
    out.denominator = out.pairs / g;
    out.value = static_cast<double>(out.total) / static_cast<double>(out.pairs);
    out.decimal = exact_decimal(out.total, log2_den);
    return out;
}

std::vector<double> exact_ln_law(std::size_t n, double p) {
    if (n == 0 || n > 10) throw std::invalid_argument("exact law enumeration supports 1 <= n <= 10");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie strictly between 0 and 1");
    std::vector<double> law(n + 1, 0.0);
    const double q = (1.0 - p) / 2.0;
    const std::uint64_t ys = std::uint64_t{1} << n;
    const double y_weight = 1.0 / static_cast<double>(ys);
    std::vector<BinarySequence> y_all;
    for (std::uint64_t m = 0; m < ys; ++m) y_all.push_back(from_mask(m, n));

    std::uint64_t xs = 1;
    for (std::size_t i = 0; i < n; ++i) xs *= 3;
    for (std::uint64_t code = 0; code < xs; ++code) {
        TriSequence x(p);
        std::size_t a_count = 0;
        std::uint64_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 3) {
            const auto s = static_cast<Symbol3>(c % 3);
            a_count += s == Symbol3::A ? 1 : 0;
            x.push_back(s);
        }
        const double x_weight =
            std::pow(p, static_cast<double>(a_count)) * std::pow(q, static_cast<double>(n - a_count));
        for (const auto& y : y_all) law[lcs_length(x, y)] += x_weight * y_weight;
    }
    return law;
}

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log(x) - (1.0 - x) * std::log(1.0 - x);
}

std::vector<ContainmentRatePoint> containment_rate_table(std::size_t l, const std::vector<double>& deltas) {
    std::vector<ContainmentRatePoint> rows;
    for (double d : deltas) {
        if (!(d > 0.0 && d < 0.5)) throw std::invalid_argument("containment rate needs 0 < delta < 0.5");
        ContainmentRatePoint r;
        r.delta = d;
        r.l = l;
        r.k = static_cast<std::size_t>(std::floor(2.0 * (1.0 - d) * static_cast<double>(l)));
        r.probability = containment_prob_exact(l, r.k).value;
        r.rate = static_cast<double>(-std::log(r.probability) / (static_cast<long double>(d) * d * l));
        rows.push_back(r);
    }
    return rows;
}

double fitted_containment_rate() {
    static const double rate = [] {
        double best = INFINITY;
        for (const auto& r : containment_rate_table(2000, {0.05, 0.10, 0.15, 0.20, 0.25, 0.30})) {
            best = std::min(best, r.rate);
        }
        return best;
    }();
    return rate;
}

double delta_of_epsilon(double epsilon, double c_hat) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (!(c_hat > 0.0)) throw std::invalid_argument("rate constant must be positive");
    return epsilon + std::sqrt((2.0 / c_hat) * (epsilon * std::log(2.0) + binary_entropy(epsilon)));
}

}  // namespace lcsf
