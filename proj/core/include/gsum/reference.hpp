#pragma once

// Independent oracles and competing methods for the two benchmark sums
//
//     H(x) = sum_{k>=1} sin(x/k)/k            (Hardy-Littlewood)
//     G(a) = sum_{k in Z} 1/(a^2 + k^2) = (pi/a) coth(pi a)
//
// plus Richardson extrapolation of partial sums and their Euler-Maclaurin
// expansion.

#include <cstddef>
#include <span>
#include <vector>

namespace gsum {

/// (pi/a) coth(pi a); DomainError for a <= 0.
double coth_closed_form(double a);

/// H(x) by direct compensated summation to K = max(1e6, ceil(1000 x)) terms
/// plus a three-term Taylor/Euler-Maclaurin tail. Requires 0 < x <= 200 and
/// tol >= 1e-13 (DomainError otherwise); asserts the tail truncation bound
/// x^7 / (5040 * 6 K^6) <= tol/10.
double hl_oracle(double x, double tol = 1e-13);

/// Partial sums of a sequence, keyed by index.
struct PartialSumSequence {
    double parameter = 0.0;
    std::size_t terms_evaluated = 0;
    std::vector<std::size_t> indices;  // ascending
    std::vector<double> values;

    /// Value at index n; ArgumentError if absent.
    double at(std::size_t n) const;
    bool contains(std::size_t n) const;
};

/// G_n(a) = 1/a^2 + 2 sum_{k=1}^{n} 1/(a^2+k^2) for each n in n_list
/// (ascending), accumulated in one compensated pass.
PartialSumSequence partial_sums_G(double a, std::span<const std::size_t> n_list);

/// N-th Richardson extrapolation at n:
///   sum_{k=0}^{N} (-1)^{k+N} (n+k)^N / (k! (N-k)!) A_{n+k}.
/// ArgumentError if seq lacks any of A_n .. A_{n+N}.
double richardson(const PartialSumSequence& seq, unsigned N, std::size_t n);

enum class EmCoefficients {
    rederived,   // 1/n^5 coefficient -(6a^4 - 10a^2 - 1)/15
    as_printed,  // 1/n^5 coefficient -(6a^4 - 10a^2 + 1)/15
};

/// Asymptotic expansion of G_n(a):
///   (pi/a) coth(pi a) - 2/n + 1/n^2 + (2a^2-1)/(3n^3) - a^2/n^4 + c_5/n^5,
/// truncated after the 1/n^order term (0 <= order <= 5).
double partial_sum_expansion_G(double a, std::size_t n, int order,
                               EmCoefficients variant = EmCoefficients::rederived);

/// The same expansion without the limit term, i.e. the predicted G_n - G.
double partial_sum_correction_G(double a, std::size_t n, int order,
                                EmCoefficients variant = EmCoefficients::rederived);

} // namespace gsum
