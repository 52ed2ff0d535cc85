#pragma once

#include "csecs/special_functions.hpp"

namespace csecs {

/// Below this value of t·r the Hermite arguments (which carry 1/sqrt(2tr))
/// lose too much precision and the closed forms switch to their
/// division-free branches.
inline constexpr double kBranchSwitch = 1e-6;

/// Mixed derivative
///
///     d^order/dtau^order d^order/ds^order exp[a s + b tau + c tau s + d (tau² + s²)]
///
/// evaluated at tau = s = 0. For |d| >= kBranchSwitch² this is the Hermite sum
///
///     sum_l (order!)² / (l! ((order-l)!)²) c^l (-d)^(order-l)
///           H_{order-l}(a / (2i sqrt d)) H_{order-l}(b / (2i sqrt d)),
///
/// otherwise the tau^order s^order coefficient is read off the power series
/// directly, which has no 1/sqrt(d).
cplx bilinear_derivative(cplx a_lin, cplx b_lin, cplx c_cross, cplx d_quad, int order);

/// Hermite-sum branch only. Exposed so tests can compare both branches.
cplx bilinear_derivative_hermite(cplx a_lin, cplx b_lin, cplx c_cross, cplx d_quad, int order);

/// Power-series branch only; valid for every d including zero.
cplx bilinear_derivative_series(cplx a_lin, cplx b_lin, cplx c_cross, cplx d_quad, int order);

}  // namespace csecs
