#pragma once

// Gaussian summation rules for the discrete functional
//
//     L[f] = sum_{nu != 0} (1/nu^2) f(1/nu^2)
//
// The monic orthogonal polynomials of this functional obey a three-term
// recurrence with closed-form coefficients; the n-point rule is obtained
// from the eigen-decomposition of the corresponding Jacobi matrix
// (Golub-Welsch).

#include <cstddef>
#include <limits>
#include <vector>

namespace gsum {

inline constexpr std::size_t kMaxRuleSize = 256;
inline constexpr int kMaxZetaIndex = 128;

/// zeta(2m) for 1 <= m <= 128, from exact Bernoulli numbers.
/// Throws DomainError outside that range.
double zeta_even(int m);

/// m-th moment of the functional, mu_m = 2 zeta(2m+2).
double moment(int m);

/// Coefficients of s_{k+1}(z) = (z - a_k) s_k(z) - b_k s_{k-1}(z).
/// b[0] holds the zeroth moment mu_0 = pi^2/3.
struct RecurrenceCoefficients {
    std::vector<double> a;
    std::vector<double> b;

    std::size_t size() const noexcept { return a.size(); }
};

RecurrenceCoefficients recurrence_coeffs(std::size_t n);

/// Symmetric tridiagonal matrix. offdiag[i] couples rows i and i+1.
struct JacobiMatrix {
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t size() const noexcept { return diag.size(); }
};

/// Leading n x n Jacobi matrix. Throws ArgumentError if coeffs is too short.
JacobiMatrix jacobi_matrix(const RecurrenceCoefficients& coeffs, std::size_t n);

struct TridiagEigen {
    std::vector<double> eigenvalues;       // ascending
    std::vector<double> first_components;  // first entry of each unit eigenvector
};

/// Implicit-shift QL on a symmetric tridiagonal matrix, tracking only the
/// first row of the eigenvector matrix. An off-diagonal entry is deflated once
/// |e_i| <= tol * (|d_i| + |d_{i+1}|). At most 50 sweeps per eigenvalue;
/// NumericalFailure carries the index that did not converge.
TridiagEigen eig_tridiag(const JacobiMatrix& J,
                         double tol = std::numeric_limits<double>::epsilon());

/// n-point Gaussian summation rule: nodes strictly ascending in (0, 1),
/// weights positive, exact for polynomials of degree <= 2n-1.
struct SummationRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return nodes.size(); }
};

/// Builds the rule for 1 <= n <= 256.
SummationRule build_rule(std::size_t n);

/// Throws ArgumentError naming the first violated invariant (sizes,
/// ordering, positivity, weight sum).
void validate_rule(const SummationRule& rule);

} // namespace gsum
