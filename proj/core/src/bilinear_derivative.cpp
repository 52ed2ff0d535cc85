#include "csecs/bilinear_derivative.hpp"

#include <cmath>
#include <stdexcept>

namespace csecs {

cplx bilinear_derivative_hermite(cplx a_lin, cplx b_lin, cplx c_cross, cplx d_quad, int order) {
    if (order < 0) throw std::invalid_argument("bilinear_derivative: negative order");
    if (order == 0) return {1.0, 0.0};
    const cplx root_d = std::sqrt(d_quad);
    const cplx two_i_root_d = cplx(0.0, 2.0) * root_d;
    const cplx x = a_lin / two_i_root_d;
    const cplx y = b_lin / two_i_root_d;
    const double ln_m_fact = ln_factorial(order);

    cplx sum(0.0, 0.0);
    for (int l = 0; l <= order; ++l) {
        const int k = order - l;
        const double weight =
            std::exp(2.0 * ln_m_fact - ln_factorial(l) - 2.0 * ln_factorial(k));
        // std::pow(0, 0) is 1, which is what the l = 0 / k = 0 terms need.
        const cplx term = std::pow(c_cross, l) * std::pow(-d_quad, k) * hermite(k, x) * hermite(k, y);
        sum += weight * term;
    }
    return sum;
}

cplx bilinear_derivative_series(cplx a_lin, cplx b_lin, cplx c_cross, cplx d_quad, int order) {
    if (order < 0) throw std::invalid_argument("bilinear_derivative: negative order");
    // (order!)² [s^order tau^order] of exp(c tau s) exp(a s + d s²) exp(b tau + d tau²).
    const double ln_m_fact = ln_factorial(order);
    cplx sum(0.0, 0.0);
    for (int l = 0; l <= order; ++l) {
        const int k = order - l;
        const double weight = std::exp(2.0 * ln_m_fact - ln_factorial(l));
        sum += weight * std::pow(c_cross, l) * hermite2_scaled(k, a_lin, d_quad) *
               hermite2_scaled(k, b_lin, d_quad);
    }
    return sum;
}

cplx bilinear_derivative(cplx a_lin, cplx b_lin, cplx c_cross, cplx d_quad, int order) {
    if (std::abs(d_quad) >= kBranchSwitch * kBranchSwitch) {
        return bilinear_derivative_hermite(a_lin, b_lin, c_cross, d_quad, order);
    }
    return bilinear_derivative_series(a_lin, b_lin, c_cross, d_quad, order);
}

}  // namespace csecs
