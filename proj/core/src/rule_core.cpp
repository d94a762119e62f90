#include "gsum/rule_core.hpp"

#include "gsum/errors.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

namespace gsum {
namespace {

namespace mp = boost::multiprecision;
using Float50 = mp::cpp_bin_float_50;

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
constexpr int kMaxIterations = 50;

// B_0 .. B_{2*kMaxZetaIndex}, exact, from
//   sum_{k=0}^{m} C(m+1, k) B_k = 0.
std::vector<mp::cpp_rational> bernoulli_numbers(int max_index)
{
    std::vector<mp::cpp_rational> B(static_cast<std::size_t>(max_index) + 1);
    B[0] = 1;
    for (int m = 1; m <= max_index; ++m) {
        if (m >= 3 && m % 2 == 1) {
            B[m] = 0;
            continue;
        }
        mp::cpp_int binom = 1;  // C(m+1, k)
        mp::cpp_rational acc = 0;
        for (int k = 0; k < m; ++k) {
            if (k == 1 || k % 2 == 0)
                acc += mp::cpp_rational(binom) * B[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        B[m] = -acc / (m + 1);
    }
    return B;
}

// zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!), evaluated with 50
// decimal digits and rounded once to double.
std::array<double, kMaxZetaIndex + 1> build_zeta_table()
{
    const auto B = bernoulli_numbers(2 * kMaxZetaIndex);
    const Float50 two_pi = 2 * boost::math::constants::pi<Float50>();

    std::array<double, kMaxZetaIndex + 1> table{};
    Float50 power = 1;      // (2 pi)^{2m}
    Float50 factorial = 1;  // (2m)!
    for (int m = 1; m <= kMaxZetaIndex; ++m) {
        power *= two_pi * two_pi;
        factorial *= Float50(2 * m - 1) * Float50(2 * m);
        const Float50 bern = Float50(mp::numerator(B[2 * m])) / Float50(mp::denominator(B[2 * m]));
        const Float50 value = mp::abs(bern) * power / (2 * factorial);
        table[m] = static_cast<double>(value);
    }
    return table;
}

const std::array<double, kMaxZetaIndex + 1>& zeta_table()
{
    static const auto table = build_zeta_table();
    return table;
}

} // namespace

double zeta_even(int m)
{
    if (m < 1 || m > kMaxZetaIndex)
        throw DomainError("zeta_even: m = " + std::to_string(m) + " outside [1, 128]");
    return zeta_table()[m];
}

double moment(int m)
{
    if (m < 0)
        throw DomainError("moment: negative order " + std::to_string(m));
    return 2.0 * zeta_even(m + 1);
}

RecurrenceCoefficients recurrence_coeffs(std::size_t n)
{
    if (n == 0)
        throw ArgumentError("recurrence_coeffs: n must be positive");

    RecurrenceCoefficients rc;
    rc.a.resize(n);
    rc.b.resize(n);
    rc.a[0] = kPi2 / 15.0;
    rc.b[0] = kPi2 / 3.0;
    for (std::size_t k = 1; k < n; ++k) {
        const double q = 4.0 * static_cast<double>(k);
        rc.a[k] = 2.0 * kPi2 / ((q + 1.0) * (q + 5.0));
        rc.b[k] = kPi2 * kPi2 / ((q - 1.0) * (q + 1.0) * (q + 1.0) * (q + 3.0));
    }
    return rc;
}

JacobiMatrix jacobi_matrix(const RecurrenceCoefficients& coeffs, std::size_t n)
{
    if (n == 0)
        throw ArgumentError("jacobi_matrix: n must be positive");
    if (coeffs.a.size() < n || coeffs.b.size() < n)
        throw ArgumentError("jacobi_matrix: need " + std::to_string(n) +
                            " coefficients, have " + std::to_string(coeffs.size()));

    JacobiMatrix J;
    J.diag.assign(coeffs.a.begin(), coeffs.a.begin() + static_cast<std::ptrdiff_t>(n));
    J.offdiag.resize(n - 1);
    for (std::size_t k = 1; k < n; ++k)
        J.offdiag[k - 1] = std::sqrt(coeffs.b[k]);
    return J;
}

namespace {

// Implicit-shift QL on (d, e), e[i] coupling i and i+1, tracking one row of
// the accumulated rotations in z. Returns eigenvalues ascending with the
// matching entries of z.
template <class Real>
std::pair<std::vector<Real>, std::vector<Real>>
ql_implicit(std::vector<Real> d, std::vector<Real> e, std::vector<Real> z, Real tol)
{
    using std::abs;
    const std::size_t n = d.size();
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m = l;
        do {
            for (m = l; m + 1 < n; ++m) {
                const Real dd = abs(d[m]) + abs(d[m + 1]);
                if (abs(e[m]) <= tol * dd)
                    break;
            }
            if (m == l)
                break;
            if (iter++ == kMaxIterations)
                throw NumericalFailure("eig_tridiag: no convergence for eigenvalue " +
                                           std::to_string(l),
                                       l);

            Real g = (d[l + 1] - d[l]) / (2 * e[l]);
            Real r = std::hypot(g, Real(1));
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            Real s = 1, c = 1, p = 0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                const Real f = s * e[i];
                const Real b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0) {
                    d[i + 1] -= p;
                    e[m] = 0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;

                const Real zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if (underflow)
                continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0;
        } while (m != l);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });
    std::vector<Real> values, row;
    values.reserve(n);
    row.reserve(n);
    for (std::size_t i : order) {
        values.push_back(d[i]);
        row.push_back(z[i]);
    }
    return {std::move(values), std::move(row)};
}

// The Jacobi matrix is graded with its large entries in the top-left corner.
// QL is accurate when the large entries sit bottom-right, so the iteration
// runs on the index-reversed matrix; the original first row becomes row n-1.
template <class Real>
std::pair<std::vector<Real>, std::vector<Real>>
eig_first_row(const std::vector<Real>& diag, const std::vector<Real>& offdiag, Real tol)
{
    const std::size_t n = diag.size();
    std::vector<Real> d(diag.rbegin(), diag.rend());
    std::vector<Real> e(n, Real(0));
    for (std::size_t i = 0; i + 1 < n; ++i)
        e[i] = offdiag[n - 2 - i];
    std::vector<Real> z(n, Real(0));
    z[n - 1] = 1;
    return ql_implicit(std::move(d), std::move(e), std::move(z), tol);
}

} // namespace

TridiagEigen eig_tridiag(const JacobiMatrix& J, double tol)
{
    const std::size_t n = J.size();
    if (n == 0)
        throw ArgumentError("eig_tridiag: empty matrix");
    if (J.offdiag.size() + 1 != n)
        throw ArgumentError("eig_tridiag: off-diagonal length must be n-1");
    if (!(tol >= std::numeric_limits<double>::epsilon()))
        throw ArgumentError("eig_tridiag: tolerance below machine epsilon");

    auto [values, row] = eig_first_row(J.diag, J.offdiag, tol);
    return {std::move(values), std::move(row)};
}

SummationRule build_rule(std::size_t n)
{
    if (n < 1 || n > kMaxRuleSize)
        throw ArgumentError("build_rule: n = " + std::to_string(n) + " outside [1, 256]");

    // Same matrix as jacobi_matrix(recurrence_coeffs(n), n), formed and
    // diagonalized in extended precision so that the small nodes and their
    // weights come out with (nearly) full double relative accuracy.
    using Wide = long double;
    const Wide pi2 = std::numbers::pi_v<Wide> * std::numbers::pi_v<Wide>;
    std::vector<Wide> diag(n), offdiag(n - 1);
    diag[0] = pi2 / 15;
    for (std::size_t k = 1; k < n; ++k) {
        const Wide q = 4 * static_cast<Wide>(k);
        diag[k] = 2 * pi2 / ((q + 1) * (q + 5));
        offdiag[k - 1] = pi2 / ((q + 1) * std::sqrt((q - 1) * (q + 3)));
    }
    const auto [values, row] =
        eig_first_row(diag, offdiag, std::numeric_limits<Wide>::epsilon());

    SummationRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const Wide mu0 = pi2 / 3;
    for (std::size_t k = 0; k < n; ++k) {
        rule.nodes[k] = static_cast<double>(values[k]);
        rule.weights[k] = static_cast<double>(mu0 * row[k] * row[k]);
    }
    return rule;
}

void validate_rule(const SummationRule& rule)
{
    const std::size_t n = rule.size();
    if (n == 0 || n > kMaxRuleSize)
        throw ArgumentError("rule size " + std::to_string(n) + " outside [1, 256]");
    if (rule.weights.size() != n)
        throw ArgumentError("rule has " + std::to_string(n) + " nodes but " +
                            std::to_string(rule.weights.size()) + " weights");
    for (std::size_t k = 0; k < n; ++k) {
        if (!std::isfinite(rule.nodes[k]) || !(rule.nodes[k] > 0.0))
            throw ArgumentError("node " + std::to_string(k) + " is not positive");
        if (k > 0 && !(rule.nodes[k] > rule.nodes[k - 1]))
            throw ArgumentError("nodes not strictly increasing at " + std::to_string(k));
        if (!std::isfinite(rule.weights[k]) || !(rule.weights[k] > 0.0))
            throw ArgumentError("weight " + std::to_string(k) + " is not positive");
    }
    const double mu0 = kPi2 / 3.0;
    const double total = std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0);
    if (std::abs(total - mu0) > 1e-12 * mu0)
        throw ArgumentError("weights do not sum to pi^2/3");
}

} // namespace gsum
