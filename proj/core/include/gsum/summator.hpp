#pragma once

#include "gsum/rule_cache.hpp"
#include "gsum/rule_core.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace gsum {

enum class Side {
    positive_half,      // target is sum_{k>=1} g(k); g must extend evenly to k < 0
    two_sided_nonzero,  // target is sum_{k != 0} g(k)
};

/// A term g(k) of an infinite sum with 1/k^2 decay. g is evaluated at the
/// real pseudo-indices k = 1/sqrt(z) of the rule nodes.
struct Summand {
    std::function<double(double)> g;
    Side side = Side::two_sided_nonzero;
    std::string description;
};

/// sum_k w_k g(1/sqrt(z_k)) / z_k, halved for Side::positive_half.
/// Throws EvaluationError carrying k on a non-finite term.
double gauss_sum(const SummationRule& rule, const Summand& s);

enum class ConvergenceStatus { converged, hit_n_max, stagnated_at_machine_eps };

const char* to_string(ConvergenceStatus status) noexcept;

struct ConvergenceReport {
    std::vector<std::size_t> n;     // rule sizes evaluated, ascending from 2
    std::vector<double> values;     // values[i] uses n[i] points
    std::vector<double> deltas;     // deltas[i] = values[i+1] - values[i]
    std::size_t n_used = 0;         // first n of the run of small deltas
    ConvergenceStatus status = ConvergenceStatus::hit_n_max;

    /// Value with n_used points.
    double value() const;
};

/// Evaluates rules n = 2, 3, ... and stops once |delta| <= tol |value| for two
/// consecutive deltas (converged), after three consecutive deltas below
/// 10 eps |value| (stagnated), or at n_max. n_used is the n whose value the
/// small deltas certify; at n_max it is n_max. When tol itself is below the
/// noise floor only the stagnation test applies. Requires 0 < tol and
/// 2 <= n_max <= 256.
ConvergenceReport adaptive_sum(const Summand& s, double tol, std::size_t n_max,
                               RuleCache& rules);
ConvergenceReport adaptive_sum(const Summand& s, double tol, std::size_t n_max);

/// Both forms of the error constant K_n:
/// the closed form 1/2 (4n+3) pi^{4n+3} 16^{-(n+1)} / Gamma(2n+5/2)^2 as
/// printed, and the squared norm mu_0 prod_{k=1..n} b_k of the monic s_n.
/// The printed form is exactly half the norm.
struct ErrorConstant {
    double printed_value;
    double moment_norm;
};

/// RangeError for n > 40.
ErrorConstant error_constant_Kn(std::size_t n);

struct ErrorEstimate {
    double value;
    bool advisory;  // parameters outside the regime the asymptotics assume
};

/// Delta_n ~ 8 nu exp(-nu^2 / (pi a)), nu = 2n + 5/2, for sum 1/(a^2 + k^2).
/// Asymptotic regime: nu^2 >> pi a and a >> nu (ratios >= 2).
ErrorEstimate apriori_error_coth(std::size_t n, double a);

/// Delta_n ~ 2 sqrt(pi nu) e^{-pi a/nu} (e^2 pi a / (4 nu^2))^{2 nu} for the
/// Hardy-Littlewood sum with scale a, evaluated in log space.
/// Asymptotic regime: 2 nu^2 / (pi a) >= 2.
ErrorEstimate apriori_error_hl(std::size_t n, double a);

} // namespace gsum
