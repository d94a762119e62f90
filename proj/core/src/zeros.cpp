#include "gsum/zeros.hpp"

#include "gsum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace gsum {

ZeroSet zero_set(const SummationRule& rule)
{
    ZeroSet zs;
    zs.n = rule.size();
    zs.nu = 2.0 * static_cast<double>(zs.n) + 2.5;
    zs.x.reserve(zs.n);
    for (auto it = rule.nodes.rbegin(); it != rule.nodes.rend(); ++it) {
        if (!(*it > 0.0))
            throw ArgumentError("zero_set: node " + std::to_string(*it) + " is not positive");
        zs.x.push_back(std::numbers::pi / std::sqrt(*it));
    }
    std::sort(zs.x.begin(), zs.x.end());
    for (std::size_t j = 0; j < zs.n; ++j) {
        zs.tau.push_back(zs.x[j] / zs.nu);
        zs.sigma.push_back(static_cast<double>(j + 1) / zs.nu);
    }
    return zs;
}

double asymptotic_sigma(double tau)
{
    if (!(tau > 0.0))
        throw DomainError("asymptotic_sigma: tau must be positive");
    if (tau <= 1.0)
        return tau / std::numbers::pi;
    return (tau - std::sqrt(tau * tau - 1.0) + std::acos(1.0 / tau)) / std::numbers::pi;
}

std::vector<DensityPoint> density_data(const ZeroSet& zset)
{
    if (zset.x.size() < 2)
        throw ArgumentError("density_data: need at least two zeros");
    std::vector<DensityPoint> out;
    out.reserve(zset.x.size() - 1);
    for (std::size_t j = 0; j + 1 < zset.x.size(); ++j) {
        const double s = static_cast<double>(j + 1) / zset.nu;
        out.push_back({s, 2.0 * s, 1.0 / (zset.x[j + 1] - zset.x[j])});
    }
    return out;
}

double tail_law_check(const ZeroSet& zset)
{
    if (zset.n < 16 || zset.x.size() != zset.n)
        throw ArgumentError("tail_law_check: needs n >= 16, got " + std::to_string(zset.n));
    const std::size_t count = (zset.n + 9) / 10;
    double worst = 0.0;
    for (std::size_t j = zset.n - count + 1; j <= zset.n; ++j) {
        const double xj = zset.x[j - 1];
        const double law = zset.nu * zset.nu / (std::numbers::pi * (zset.nu - static_cast<double>(j)));
        worst = std::max(worst, std::abs(xj / law - 1.0));
    }
    return worst;
}

} // namespace gsum
