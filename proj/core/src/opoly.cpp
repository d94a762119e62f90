#include "gsum/opoly.hpp"

#include "gsum/errors.hpp"
#include "gsum/rule_core.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace gsum {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// S_n near its zeros is a small difference of O(1) terms; both evaluation
// routes run at 50 digits and round once.
using Wide = boost::multiprecision::cpp_bin_float_50;

// Polynomial in u = 1/x, coefficient i multiplies u^i.
using Poly = std::vector<Wide>;

Wide horner(const Poly& p, const Wide& u)
{
    Wide acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * u + *it;
    return acc;
}

// next = (2m+1) u cur - prev
Poly raise_order(const Poly& cur, const Poly& prev, std::size_t m)
{
    Poly next(std::max(cur.size() + 1, prev.size()), Wide(0));
    const Wide f = 2 * m + 1;
    for (std::size_t i = 0; i < cur.size(); ++i)
        next[i + 1] += f * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i)
        next[i] -= prev[i];
    return next;
}

struct WidePade {
    Wide r, s;
};

WidePade eval_rs_wide(std::size_t n, const Wide& x)
{
    const Wide x2 = x * x;
    Wide r_prev = 0, r = x2 / 3;
    Wide s_prev = 1, s = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const Wide t = 2 * (k + 1);
        const Wide f = -x2 / ((t + 1) * (t + 3));
        const Wide r_next = r + f * r_prev;
        const Wide s_next = s + f * s_prev;
        r_prev = r;
        r = r_next;
        s_prev = s;
        s = s_next;
    }
    return {r, s};
}

struct WideBessel {
    Wide j, y;
};

WideBessel half_integer_bessel_wide(std::size_t m, const Wide& x)
{
    // spherical j_0 = sin x / x, j_1 = sin x / x^2 - cos x / x
    Poly p_prev{Wide(0), Wide(1)}, q_prev{Wide(0)};
    Poly p{Wide(0), Wide(0), Wide(1)}, q{Wide(0), Wide(-1)};
    if (m == 0) {
        p = p_prev;
        q = q_prev;
    }
    for (std::size_t k = 1; k < m; ++k) {
        Poly p_next = raise_order(p, p_prev, k);
        Poly q_next = raise_order(q, q_prev, k);
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
    }

    const Wide u = 1 / x;
    const Wide pv = horner(p, u);
    const Wide qv = horner(q, u);
    const Wide sn = sin(x);
    const Wide cs = cos(x);
    const Wide scale = sqrt(2 * x / boost::math::constants::pi<Wide>());
    return {scale * (pv * sn + qv * cs), scale * (qv * sn - pv * cs)};
}

} // namespace

PolyEvalPoint PolyEvalPoint::from_z(double z)
{
    if (!(z > 0.0))
        throw DomainError("PolyEvalPoint: z must be positive");
    return {kPi / std::sqrt(z), z};
}

PolyEvalPoint PolyEvalPoint::from_x(double x)
{
    if (x == 0.0 || !std::isfinite(x))
        throw DomainError("PolyEvalPoint: x must be finite and nonzero");
    return {x, (kPi / x) * (kPi / x)};
}

std::vector<double> cf_coeffs(std::size_t n)
{
    std::vector<double> c(n + 1);
    c[0] = 1.0 / 3.0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double t = 2.0 * static_cast<double>(k);
        c[k] = -1.0 / ((t + 1.0) * (t + 3.0));
    }
    return c;
}

PadeTerms eval_rs(std::size_t n, double x)
{
    const auto t = eval_rs_wide(n, Wide(x));
    return {static_cast<double>(t.r), static_cast<double>(t.s)};
}

double eval_s(std::size_t n, double z)
{
    if (n == 0)
        return 1.0;
    const auto rc = recurrence_coeffs(n);
    double prev = 1.0;
    double cur = z - rc.a[0];
    for (std::size_t k = 1; k < n; ++k) {
        const double next = (z - rc.a[k]) * cur - rc.b[k] * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double weyl(double z)
{
    if (!(z > 0.0) || !std::isfinite(z))
        throw DomainError("weyl: z must be positive and finite");
    const double nu = std::round(1.0 / std::sqrt(z));
    for (double cand : {nu - 1.0, nu, nu + 1.0}) {
        if (cand < 1.0)
            continue;
        if (std::abs(z - 1.0 / (cand * cand)) < 1e-9)
            throw PoleError("weyl: z = " + std::to_string(z) + " is within 1e-9 of the pole 1/" +
                            std::to_string(static_cast<long long>(cand)) + "^2");
    }
    const double x = kPi / std::sqrt(z);
    return 1.0 - x / std::tan(x);
}

double pade_convergent(std::size_t n, double z)
{
    const auto pt = PolyEvalPoint::from_z(z);
    if (n == 0)
        return 0.0;  // R_{-1}/S_{-1}

    const std::size_t idx = 2 * n - 1;
    const auto c = cf_coeffs(idx);
    const double x2 = pt.x * pt.x;
    double r_prev = 0.0, r = c[0] * x2;
    double s_prev = 1.0, s = 1.0;
    // Same recursion on absolute values bounds the rounding error of S.
    double a_prev = 1.0, a = 1.0;
    for (std::size_t k = 0; k < idx; ++k) {
        const double f = c[k + 1] * x2;
        const double r_next = r + f * r_prev;
        const double s_next = s + f * s_prev;
        const double a_next = a + std::abs(f) * a_prev;
        r_prev = r;
        r = r_next;
        s_prev = s;
        s = s_next;
        a_prev = a;
        a = a_next;
    }
    const double noise = 16.0 * kEps * static_cast<double>(idx + 1) * a;
    if (std::abs(s) <= noise)
        throw PoleError("pade_convergent: S_" + std::to_string(idx) + " vanishes at z = " +
                        std::to_string(z));
    return r / s;
}

HalfIntegerBessel half_integer_bessel(std::size_t m, double x)
{
    if (!(x > 0.0))
        throw DomainError("half_integer_bessel: x must be positive");
    const auto b = half_integer_bessel_wide(m, Wide(x));
    return {static_cast<double>(b.j), static_cast<double>(b.y)};
}

double denominator_closed_form(std::size_t n, double x)
{
    if (n < 1 || n > 21 || n % 2 == 0)
        throw DomainError("denominator_closed_form: n = " + std::to_string(n) +
                          " must be odd in [1, 21]");
    if (!(x > 0.0) || x > 50.0)
        throw DomainError("denominator_closed_form: x outside (0, 50]");

    const Wide xw = x;
    const Wide order = Wide(2 * n + 5) / 2;
    const auto bessel = half_integer_bessel_wide(n + 2, xw);
    const Wide bracket = cos(xw) * bessel.j + sin(xw) * bessel.y;
    const Wide prefactor = -boost::math::constants::pi<Wide>() * pow(xw, order - 1) /
                           (boost::math::tgamma(order) * pow(Wide(2), order));
    return static_cast<double>(prefactor * bracket);
}

std::vector<double> orthopoly_roots(std::size_t n)
{
    if (n == 0)
        return {};
    const auto rc = recurrence_coeffs(n);
    const auto s = [&rc](std::size_t k, double z) {
        double prev = 1.0, cur = z - rc.a[0];
        for (std::size_t i = 1; i < k; ++i) {
            const double next = (z - rc.a[i]) * cur - rc.b[i] * prev;
            prev = cur;
            cur = next;
        }
        return cur;
    };

    // Gershgorin bound on the spectrum of the Jacobi matrix
    double upper = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = rc.a[i];
        if (i > 0)
            row += std::sqrt(rc.b[i]);
        if (i + 1 < n)
            row += std::sqrt(rc.b[i + 1]);
        upper = std::max(upper, row);
    }

    std::vector<double> roots;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<double> edges;
        edges.reserve(k + 1);
        edges.push_back(0.0);
        edges.insert(edges.end(), roots.begin(), roots.end());
        edges.push_back(upper);

        std::vector<double> next;
        next.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            // s_k is positive above its largest root and alternates in sign
            // between roots; near-coincident brackets make a sign evaluated at
            // the ends unreliable, so the sign is taken from the root count
            const bool hi_positive = (k - 1 - i) % 2 == 0;
            double lo = edges[i], hi = edges[i + 1];
            for (;;) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi)
                    break;
                if ((s(k, mid) > 0.0) == hi_positive)
                    hi = mid;
                else
                    lo = mid;
            }
            next.push_back(0.5 * (lo + hi));
        }
        roots = std::move(next);
    }
    return roots;
}

} // namespace gsum
