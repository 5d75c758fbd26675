#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lcsf {

// E[LCS] of two independent uniform binary strings of a fixed length, by enumerating
// every pair. Exact: value = numerator / denominator in lowest terms.
struct ExactExpectation {
    std::size_t length = 0;
    std::uint64_t total = 0;  // sum of LCS over all 4^length pairs
    std::uint64_t pairs = 0;
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;
    double value = 0.0;
    std::string decimal;  // full decimal expansion (finite, denominator is a power of two)
};

ExactExpectation exact_expected_lcs(std::size_t length);
inline ExactExpectation exact_E_L10() { return exact_expected_lcs(10); }

// Exact law of L_n in the three-letter/binary model, summing over all 3^n * 2^n weighted
// pairs (X, Y). Entry l holds P(L_n = l). Feasible for n <= 9 or so.
std::vector<double> exact_ln_law(std::size_t n, double p);

// Natural-log binary entropy.
double binary_entropy(double x);

// Rate fit for the containment bound P(Y^l subsequence of Z^{2(1-d)l}) <= e^{-c d^2 l}:
// for each d, -ln P / (d^2 l) from the exact containment probability.
struct ContainmentRatePoint {
    double delta = 0.0;
    std::size_t l = 0;
    std::size_t k = 0;
    long double probability = 0.0L;
    double rate = 0.0;
};

std::vector<ContainmentRatePoint> containment_rate_table(std::size_t l, const std::vector<double>& deltas);
// Smallest rate over the default table (l = 2000, d = 0.05 .. 0.30).
double fitted_containment_rate();

// delta(eps) = eps + sqrt((2/c) (eps ln 2 + H(eps))).
double delta_of_epsilon(double epsilon, double c_hat);

}  // namespace lcsf
