#include "gsum/reference.hpp"

#include "gsum/compensated.hpp"
#include "gsum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace gsum {
namespace {

constexpr double kPi = std::numbers::pi;

// sum_{k>K} k^{-s} by Euler-Maclaurin through the f''' term.
double power_tail(double K, double s)
{
    return std::pow(K, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(K, -s) +
           s * std::pow(K, -s - 1.0) / 12.0 -
           s * (s + 1.0) * (s + 2.0) * std::pow(K, -s - 3.0) / 720.0;
}

} // namespace

double coth_closed_form(double a)
{
    if (!(a > 0.0) || !std::isfinite(a))
        throw DomainError("coth_closed_form: a must be positive and finite");
    const double t = kPi * a;
    const double coth = t > 20.0 ? 1.0 + 2.0 * std::exp(-2.0 * t) : 1.0 / std::tanh(t);
    return kPi / a * coth;
}

double hl_oracle(double x, double tol)
{
    if (!(x > 0.0) || x > 200.0)
        throw DomainError("hl_oracle: x must lie in (0, 200]");
    if (!(tol >= 1e-13))
        throw DomainError("hl_oracle: tolerance below 1e-13");

    const auto K = std::max<std::size_t>(1000000, static_cast<std::size_t>(std::ceil(1000.0 * x)));
    const double Kd = static_cast<double>(K);
    const double truncation = std::pow(x, 7) / (5040.0 * 6.0 * std::pow(Kd, 6));
    if (truncation > tol / 10.0)
        throw Error("hl_oracle: tail truncation bound exceeds tol/10");

    CompensatedSum acc;
    for (std::size_t k = K; k >= 1; --k) {
        const double kd = static_cast<double>(k);
        acc += std::sin(x / kd) / kd;
    }
    const double x3 = x * x * x;
    acc += x * power_tail(Kd, 2.0);
    acc += -x3 / 6.0 * power_tail(Kd, 4.0);
    acc += x3 * x * x / 120.0 * power_tail(Kd, 6.0);
    return acc.value();
}

bool PartialSumSequence::contains(std::size_t n) const
{
    return std::binary_search(indices.begin(), indices.end(), n);
}

double PartialSumSequence::at(std::size_t n) const
{
    const auto it = std::lower_bound(indices.begin(), indices.end(), n);
    if (it == indices.end() || *it != n)
        throw ArgumentError("partial sum sequence has no entry for n = " + std::to_string(n));
    return values[static_cast<std::size_t>(it - indices.begin())];
}

PartialSumSequence partial_sums_G(double a, std::span<const std::size_t> n_list)
{
    if (!(a > 0.0) || !std::isfinite(a))
        throw DomainError("partial_sums_G: a must be positive and finite");
    if (!std::is_sorted(n_list.begin(), n_list.end()))
        throw ArgumentError("partial_sums_G: n_list must be ascending");

    PartialSumSequence seq;
    seq.parameter = a;
    const double a2 = a * a;
    CompensatedSum acc;
    acc += 1.0 / a2;
    std::size_t k = 0;
    for (std::size_t n : n_list) {
        for (; k < n; ++k) {
            const double kd = static_cast<double>(k + 1);
            acc += 2.0 / (a2 + kd * kd);
        }
        if (!seq.indices.empty() && seq.indices.back() == n)
            continue;
        seq.indices.push_back(n);
        seq.values.push_back(acc.value());
    }
    seq.terms_evaluated = k;
    return seq;
}

double richardson(const PartialSumSequence& seq, unsigned N, std::size_t n)
{
    for (std::size_t k = 0; k <= N; ++k)
        if (!seq.contains(n + k))
            throw ArgumentError("richardson: sequence lacks A_" + std::to_string(n + k));

    // k! (N-k)!
    std::vector<double> fact(N + 1, 1.0);
    for (unsigned i = 1; i <= N; ++i)
        fact[i] = fact[i - 1] * i;

    CompensatedSum acc;
    for (unsigned k = 0; k <= N; ++k) {
        const double sign = (k + N) % 2 == 0 ? 1.0 : -1.0;
        const double w = sign * std::pow(static_cast<double>(n + k), static_cast<double>(N)) /
                         (fact[k] * fact[N - k]);
        acc += w * seq.at(n + k);
    }
    return acc.value();
}

double partial_sum_correction_G(double a, std::size_t n, int order, EmCoefficients variant)
{
    if (order < 0 || order > 5)
        throw ArgumentError("partial_sum_expansion_G: order must lie in [0, 5]");
    if (n == 0)
        throw ArgumentError("partial_sum_expansion_G: n must be positive");

    const double a2 = a * a;
    const double constant = variant == EmCoefficients::rederived ? -1.0 : 1.0;
    const double coeff[6] = {
        0.0,
        -2.0,
        1.0,
        (2.0 * a2 - 1.0) / 3.0,
        -a2,
        -(6.0 * a2 * a2 - 10.0 * a2 + constant) / 15.0,
    };
    const double inv = 1.0 / static_cast<double>(n);
    double power = std::pow(inv, order);
    double value = 0.0;
    // smallest term first
    for (int j = order; j >= 1; --j) {
        value += coeff[j] * power;
        power *= static_cast<double>(n);
    }
    return value;
}

double partial_sum_expansion_G(double a, std::size_t n, int order, EmCoefficients variant)
{
    return coth_closed_form(a) + partial_sum_correction_G(a, n, order, variant);
}

} // namespace gsum
