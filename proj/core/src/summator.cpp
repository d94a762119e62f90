#include "gsum/summator.hpp"

#include "gsum/compensated.hpp"
#include "gsum/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace gsum {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNoiseFloor = 10.0 * kEps;
constexpr double kRegimeRatio = 2.0;

double nu_of(std::size_t n)
{
    return 2.0 * static_cast<double>(n) + 2.5;
}

RuleCache& default_rule_cache()
{
    static RuleCache cache;
    return cache;
}

} // namespace

const char* to_string(ConvergenceStatus status) noexcept
{
    switch (status) {
    case ConvergenceStatus::converged: return "converged";
    case ConvergenceStatus::hit_n_max: return "hit_n_max";
    case ConvergenceStatus::stagnated_at_machine_eps: return "stagnated_at_machine_eps";
    }
    return "unknown";
}

double gauss_sum(const SummationRule& rule, const Summand& s)
{
    if (!s.g)
        throw ArgumentError("gauss_sum: summand has no evaluation function");

    CompensatedSum acc;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double z = rule.nodes[i];
        const double k = 1.0 / std::sqrt(z);
        const double gk = s.g(k);
        if (!std::isfinite(gk)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "summand";
            if (!s.description.empty())
                msg << " '" << s.description << "'";
            msg << " is not finite at k = " << k;
            throw EvaluationError(msg.str(), k);
        }
        acc += rule.weights[i] * gk / z;
    }
    const double total = acc.value();
    return s.side == Side::positive_half ? 0.5 * total : total;
}

ConvergenceReport adaptive_sum(const Summand& s, double tol, std::size_t n_max, RuleCache& rules)
{
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw ArgumentError("adaptive_sum: tolerance must be positive and finite");
    if (n_max < 2 || n_max > kMaxRuleSize)
        throw ArgumentError("adaptive_sum: n_max must lie in [2, 256]");

    ConvergenceReport report;
    int small = 0;
    int stagnant = 0;
    for (std::size_t n = 2; n <= n_max; ++n) {
        const double v = gauss_sum(*rules.get(n), s);
        report.n.push_back(n);
        report.values.push_back(v);
        if (report.values.size() < 2)
            continue;

        const double delta = v - report.values[report.values.size() - 2];
        report.deltas.push_back(delta);
        const double scale = std::abs(v);

        small = (tol >= kNoiseFloor && std::abs(delta) <= tol * scale) ? small + 1 : 0;
        stagnant = std::abs(delta) < kNoiseFloor * scale ? stagnant + 1 : 0;
        if (small >= 2) {
            report.status = ConvergenceStatus::converged;
            report.n_used = n - 2;
            return report;
        }
        if (stagnant >= 3) {
            report.status = ConvergenceStatus::stagnated_at_machine_eps;
            report.n_used = n - 3;
            return report;
        }
    }
    report.n_used = report.n.back();
    return report;
}

double ConvergenceReport::value() const
{
    for (std::size_t i = 0; i < n.size(); ++i)
        if (n[i] == n_used)
            return values[i];
    throw ArgumentError("convergence report has no value for n_used");
}

ConvergenceReport adaptive_sum(const Summand& s, double tol, std::size_t n_max)
{
    return adaptive_sum(s, tol, n_max, default_rule_cache());
}

ErrorConstant error_constant_Kn(std::size_t n)
{
    if (n > 40)
        throw RangeError("error_constant_Kn: n > 40 overflows double precision");

    const double nd = static_cast<double>(n);
    const double gamma = std::tgamma(2.0 * nd + 2.5);
    const double printed = 0.5 * (4.0 * nd + 3.0) * std::pow(kPi, 4.0 * nd + 3.0) *
                         std::pow(16.0, -(nd + 1.0)) / (gamma * gamma);

    const auto rc = recurrence_coeffs(n + 1);
    double norm = rc.b[0];
    for (std::size_t k = 1; k <= n; ++k)
        norm *= rc.b[k];
    return {printed, norm};
}

ErrorEstimate apriori_error_coth(std::size_t n, double a)
{
    if (!(a > 0.0))
        throw DomainError("apriori_error_coth: a must be positive");
    const double nu = nu_of(n);
    const double ratio = nu * nu / (kPi * a);
    const bool in_regime = ratio >= kRegimeRatio && a / nu >= kRegimeRatio;
    return {8.0 * nu * std::exp(-ratio), !in_regime};
}

ErrorEstimate apriori_error_hl(std::size_t n, double a)
{
    if (!(a > 0.0))
        throw DomainError("apriori_error_hl: a must be positive");
    const double nu = nu_of(n);
    const double log_value = std::log(2.0 * std::sqrt(kPi * nu)) - kPi * a / nu +
                             2.0 * nu * (2.0 + std::log(kPi * a / (4.0 * nu * nu)));
    const bool in_regime = 2.0 * nu * nu / (kPi * a) >= kRegimeRatio;
    return {std::exp(log_value), !in_regime};
}

} // namespace gsum
