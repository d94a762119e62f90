#pragma once

// Zeros of the Pade denominators S_{2n-1}(x), obtained from rule nodes via
// x = pi / sqrt(z), and their asymptotic distribution.

#include "gsum/rule_core.hpp"

#include <cstddef>
#include <vector>

namespace gsum {

struct ZeroSet {
    std::size_t n = 0;
    double nu = 0.0;          // 2n + 5/2
    std::vector<double> x;    // ascending positive zeros x_1 < ... < x_n
    std::vector<double> tau;  // x_j / nu
    std::vector<double> sigma;  // j / nu
};

/// ArgumentError if any node is not positive.
ZeroSet zero_set(const SummationRule& rule);

/// Limiting zero law: pi sigma = tau for tau <= 1 and
/// pi sigma = tau - sqrt(tau^2 - 1) + arccos(1/tau) beyond the cusp.
double asymptotic_sigma(double tau);

struct DensityPoint {
    double sigma;       // j / nu, range (0, 1/2)
    double sigma_full;  // 2 j / nu, range (0, 1)
    double density;     // 1 / (x_{j+1} - x_j)
};

/// One point per consecutive pair of zeros, j = 1 .. n-1.
std::vector<DensityPoint> density_data(const ZeroSet& zset);

/// max_j |x_j pi (nu - j) / nu^2 - 1| over the largest ceil(n/10) zeros.
/// ArgumentError for n < 16.
double tail_law_check(const ZeroSet& zset);

} // namespace gsum
