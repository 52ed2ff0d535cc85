#pragma once

#include <complex>

namespace csecs {

using cplx = std::complex<double>;

// Orthogonal polynomials evaluated by forward three-term recurrence. Explicit
// coefficient sums cancel badly beyond order ~20, the recurrences do not.

/// Physicists' Hermite polynomial H_n(z).
cplx hermite(int n, cplx z);

/// Laguerre polynomial L_n(x).
double laguerre(int n, double x);

/// Associated Laguerre polynomial L_n^k(x), k >= 0.
double assoc_laguerre(int n, int k, double x);

/// ln(n!), exact table up to 170 and lgamma beyond.
double ln_factorial(int n);

/// n! as a double; overflows to +inf past 170.
double factorial(int n);

/// Two-variable Hermite polynomial divided by n!:
///
///     hermite2_scaled(n, x, y) = sum_{j <= n/2} x^{n-2j} y^j / ((n-2j)! j!)
///
/// which is the s^n coefficient of exp(x s + y s²). Polynomial in both
/// arguments with no division, so it stays exact as y -> 0.
cplx hermite2_scaled(int n, cplx x, cplx y);

}  // namespace csecs
