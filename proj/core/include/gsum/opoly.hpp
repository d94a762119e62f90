#pragma once

// Rational and special-function representations behind the rule:
// the continued fraction of 1 - x cot x, its convergents R_n/S_n, the monic
// orthogonal polynomials s_n(z) = z^n S_{2n-1}(pi/sqrt z), the Weyl
// (Stieltjes) function of the measure, and the half-integer Bessel closed
// form of S_n. Used to cross-validate rule_core.

#include <cstddef>
#include <vector>

namespace gsum {

/// A point given in both variables, z = (pi/x)^2.
struct PolyEvalPoint {
    double x;
    double z;

    static PolyEvalPoint from_z(double z);
    static PolyEvalPoint from_x(double x);
};

/// c_0 = 1/3, c_k = -1/((2k+1)(2k+3)) for k = 1..n.
std::vector<double> cf_coeffs(std::size_t n);

struct PadeTerms {
    double numerator;    // R_n(x)
    double denominator;  // S_n(x)
};

/// R_n(x), S_n(x) by the forward recursion
/// R_{k+1} = R_k + c_{k+1} x^2 R_{k-1} (same for S), with R_{-1} = 0,
/// R_0 = x^2/3, S_{-1} = S_0 = 1. Evaluated at 50 digits and rounded once.
PadeTerms eval_rs(std::size_t n, double x);

/// Monic s_n(z) from the three-term recurrence with rule_core coefficients.
double eval_s(std::size_t n, double z);

/// Phi(z) = 1 - (pi/sqrt z) cot(pi/sqrt z). Throws DomainError for z <= 0 and
/// PoleError within 1e-9 of a support point 1/nu^2.
double weyl(double z);

/// [2n-1] convergent R_{2n-1}/S_{2n-1} at x = pi/sqrt z. Throws PoleError
/// when S_{2n-1} vanishes to within its rounding error.
double pade_convergent(std::size_t n, double z);

/// S_n(x) from the half-integer Bessel representation
///   -pi x^{n+3/2} / (Gamma(n+5/2) 2^{n+5/2}) [cos x J_{n+5/2}(x) + sin x Y_{n+5/2}(x)],
/// with J and Y built from their finite trigonometric forms, at 50 digits.
/// Valid for odd n in [1, 21] and 0 < x <= 50; DomainError otherwise.
double denominator_closed_form(std::size_t n, double x);

/// J_{m+1/2}(x) and Y_{m+1/2}(x) for x > 0 from the closed forms
///   J = sqrt(2x/pi) (p_m(1/x) sin x + q_m(1/x) cos x),
///   Y = sqrt(2x/pi) (q_m(1/x) sin x - p_m(1/x) cos x).
struct HalfIntegerBessel {
    double j;
    double y;
};
HalfIntegerBessel half_integer_bessel(std::size_t m, double x);

/// Roots of s_n by bisection, bracketed by the interlacing roots of
/// s_{n-1} and bisected to adjacent doubles; independent of the eigensolver.
std::vector<double> orthopoly_roots(std::size_t n);

} // namespace gsum
