#include <gsum/errors.hpp>
#include <gsum/opoly.hpp>
#include <gsum/rule_core.hpp>

#include "support/oracles.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace {

using namespace gsum;
constexpr double pi = std::numbers::pi;
constexpr double pi2 = pi * pi;

double rel(double got, double want)
{
    return std::abs(got - want) / std::abs(want);
}

TEST(PolyEvalPoint, BothVariables)
{
    const auto p = PolyEvalPoint::from_z(4.0);
    EXPECT_DOUBLE_EQ(p.x, pi / 2);
    const auto q = PolyEvalPoint::from_x(pi / 3);
    EXPECT_NEAR(q.z, 9.0, 1e-14);
}

TEST(ContinuedFraction, Coefficients)
{
    const auto c = cf_coeffs(30);
    ASSERT_EQ(c.size(), 31u);
    EXPECT_DOUBLE_EQ(c[0], 1.0 / 3);
    EXPECT_DOUBLE_EQ(c[1], -1.0 / 15);
    EXPECT_DOUBLE_EQ(c[2], -1.0 / 35);
    for (std::size_t k = 1; k < c.size(); ++k) {
        EXPECT_LT(c[k], 0.0);
        if (k > 1)
            EXPECT_LT(std::abs(c[k]), std::abs(c[k - 1]));
    }
    EXPECT_EQ(cf_coeffs(0).size(), 1u);
}

TEST(PadeTerms, InitialConditionsAndLowOrders)
{
    for (double x : {0.3, 1.0, 7.0}) {
        const auto t0 = eval_rs(0, x);
        EXPECT_EQ(t0.denominator, 1.0);
        EXPECT_DOUBLE_EQ(t0.numerator, x * x / 3);
        const auto t1 = eval_rs(1, x);
        EXPECT_DOUBLE_EQ(t1.denominator, 1 - x * x / 15);
    }
    EXPECT_NEAR(eval_rs(1, std::sqrt(15.0)).denominator, 0.0, 1e-15);
    const double s3 = 1 - pi2 / 9 + pi2 * pi2 / 945;
    EXPECT_LE(rel(eval_rs(3, pi).denominator, s3), 1e-12);
    EXPECT_NEAR(eval_rs(3, pi).denominator, 0.00645569, 5e-8);
}

TEST(PadeTerms, ConvergentsApproachOneMinusXCotX)
{
    for (double x : {0.5, 1.0, 2.0}) {
        const double want = 1 - x / std::tan(x);
        double prev_err = 1.0;
        for (std::size_t n = 2; n <= 12; n += 2) {
            const auto t = eval_rs(n, x);
            const double err = std::abs(t.numerator / t.denominator - want);
            EXPECT_LT(err, prev_err + 1e-16);
            prev_err = err;
        }
        EXPECT_LT(prev_err, 1e-14);
    }
}

TEST(MonicPolynomials, LowOrders)
{
    EXPECT_NEAR(eval_s(0, 0.4), 1.0, 0.0);
    EXPECT_NEAR(eval_s(1, pi2 / 15), 0.0, 1e-16);
    for (double z : {0.0, 1.0, 0.37}) {
        const double want = z * z - pi2 / 9 * z + pi2 * pi2 / 945;
        EXPECT_NEAR(eval_s(2, z), want, 1e-15);
    }
}

TEST(MonicPolynomials, MatchPadeDenominators)
{
    // s_n(z) = z^n S_{2n-1}(pi / sqrt z)
    for (std::size_t n = 1; n <= 10; ++n) {
        for (double z : {0.05, 0.3, 0.8, 1.7, 3.0}) {
            const double S = eval_rs(2 * n - 1, pi / std::sqrt(z)).denominator;
            const double want = std::pow(z, static_cast<double>(n)) * S;
            EXPECT_LE(std::abs(eval_s(n, z) - want), 1e-11 * std::abs(want) + 1e-18)
                << "n = " << n << " z = " << z;
        }
    }
}

TEST(MonicPolynomials, VanishAtRuleNodes)
{
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto rule = build_rule(n);
        for (double z : rule.nodes) {
            const double below = eval_s(n, z * (1 - 1e-9));
            const double above = eval_s(n, z * (1 + 1e-9));
            EXPECT_LT(below * above, 0.0) << n << ' ' << z;
        }
    }
}

TEST(MonicPolynomials, RootsByBisectionMatchEigenvalues)
{
    for (std::size_t n = 1; n <= 30; ++n) {
        const auto roots = orthopoly_roots(n);
        const auto rule = build_rule(n);
        ASSERT_EQ(roots.size(), n);
        for (std::size_t k = 0; k < n; ++k)
            EXPECT_LE(rel(roots[k], rule.nodes[k]), 1e-12) << n << ' ' << k;
    }
}

// 2 sum_{k>=1} 1/(z k^2 - 1) with an integral tail bound.
double weyl_series(double z)
{
    oracle::LongSum acc;
    constexpr long K = 2000000;
    for (long k = K; k >= 1; --k) {
        const long double kk = static_cast<long double>(k);
        acc.add(2.0L / (z * kk * kk - 1));
    }
    acc.add(2.0L / (z * K));  // sum_{k>K} 2/(z k^2)
    return static_cast<double>(acc.sum);
}

TEST(Weyl, MatchesSeries)
{
    EXPECT_NEAR(weyl(2.0), weyl_series(2.0), 1e-12);
    EXPECT_NEAR(weyl(2.0), 2.691012063310326, 1e-12);
    for (double z : {0.3, 0.7, 1.5, 5.0, 40.0})
        EXPECT_NEAR(weyl(z), weyl_series(z), 1e-11) << z;
}

TEST(Weyl, DomainAndPoles)
{
    EXPECT_THROW(weyl(0.0), DomainError);
    EXPECT_THROW(weyl(-1.0), DomainError);
    EXPECT_THROW(weyl(1.0), PoleError);
    EXPECT_THROW(weyl(0.25), PoleError);
    EXPECT_THROW(weyl(1.0 / 9 + 1e-12), PoleError);
    EXPECT_NO_THROW(weyl(1.0 + 1e-6));
}

TEST(Pade, ConvergesToWeyl)
{
    EXPECT_NEAR(pade_convergent(10, 2.0), weyl(2.0), 1e-12);
    EXPECT_EQ(pade_convergent(0, 2.0), 0.0);
    double prev = 1.0;
    for (std::size_t n = 1; n <= 8; ++n) {
        const double err = std::abs(pade_convergent(n, 2.0) - weyl(2.0));
        EXPECT_LE(err, prev + 4e-16 * weyl(2.0));  // monotone until rounding
        prev = err;
    }
}

TEST(Pade, EqualsStieltjesTransformOfRule)
{
    // R_{2n-1}/S_{2n-1} at x = pi/sqrt z is sum_k w_k / (z - z_k)
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto rule = build_rule(n);
        for (double z : {1.3, 2.0, 6.0, 25.0}) {
            double sum = 0;
            for (std::size_t k = 0; k < n; ++k)
                sum += rule.weights[k] / (z - rule.nodes[k]);
            EXPECT_LE(rel(pade_convergent(n, z), sum), 1e-12) << n << ' ' << z;
        }
    }
}

TEST(Pade, PoleAtRuleNode)
{
    const auto rule = build_rule(1);
    EXPECT_THROW(pade_convergent(1, rule.nodes[0]), PoleError);
}

TEST(HalfIntegerBessel, MatchesBoost)
{
    for (std::size_t m = 0; m <= 12; ++m) {
        for (double x : {0.7, 2.0, pi, 10.0, 30.0}) {
            const double nu = static_cast<double>(m) + 0.5;
            const auto b = half_integer_bessel(m, x);
            const double y = boost::math::cyl_neumann(nu, x);
            EXPECT_LE(rel(b.y, y), 1e-12) << m << ' ' << x;
            // J suffers cancellation in the trigonometric form once it is far below Y
            const double j = boost::math::cyl_bessel_j(nu, x);
            EXPECT_LE(std::abs(b.j - j), 1e-14 * std::abs(y) + 1e-13 * std::abs(j)) << m << ' ' << x;
        }
    }
}

TEST(HalfIntegerBessel, OrderZeroClosedForms)
{
    const double x = 1.3;
    const auto b = half_integer_bessel(0, x);
    const double s = std::sqrt(2 / (pi * x));
    EXPECT_NEAR(b.j, s * std::sin(x), 1e-15);
    EXPECT_NEAR(b.y, -s * std::cos(x), 1e-15);
}

TEST(ClosedForm, AgreesWithRecursion)
{
    for (std::size_t n = 1; n <= 21; n += 2)
        for (double x : {1.0, 2.0, pi, 10.0, 0.25, 25.0})
            EXPECT_LE(rel(denominator_closed_form(n, x), eval_rs(n, x).denominator), 1e-9)
                << n << ' ' << x;
}

TEST(ClosedForm, NearRootAtPi)
{
    // S_n(x) tends to a multiple of sin x; at the double nearest pi it is
    // tiny and must still come out with full relative accuracy
    for (std::size_t n = 13; n <= 21; n += 2) {
        const double s = eval_rs(n, pi).denominator;
        EXPECT_GT(s, 0.0);
        EXPECT_LT(s, 1e-16);
        EXPECT_LE(rel(denominator_closed_form(n, pi), s), 1e-13) << n;
    }
}

TEST(ClosedForm, Domain)
{
    EXPECT_THROW(denominator_closed_form(2, 1.0), DomainError);
    EXPECT_THROW(denominator_closed_form(23, 1.0), DomainError);
    EXPECT_THROW(denominator_closed_form(3, 0.0), DomainError);
    EXPECT_THROW(denominator_closed_form(3, 51.0), DomainError);
}

} // namespace
