#include "csecs/teleportation.hpp"

#include "csecs/errors.hpp"
#include "csecs/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace csecs {

namespace {

std::vector<cplx> hermite_table(int max_order, cplx z) {
    std::vector<cplx> h(static_cast<std::size_t>(max_order) + 1);
    h[0] = 1.0;
    if (max_order >= 1) h[1] = 2.0 * z;
    for (int k = 1; k < max_order; ++k) h[k + 1] = 2.0 * z * h[k] - 2.0 * static_cast<double>(k) * h[k - 1];
    return h;
}

// The four (β, α) pairs in component order.
std::array<std::pair<cplx, cplx>, 4> component_pairs(cplx alpha) {
    return {{{alpha, alpha}, {-alpha, -alpha}, {alpha, -alpha}, {-alpha, alpha}}};
}

double assemble(const std::array<cplx, 4>& comp, cplx alpha, Parity parity, double inv_square,
                const char* what) {
    const double cross_weight = parity_sign(parity) * std::exp(-4.0 * std::norm(alpha));
    const cplx total = (comp[0] + comp[1] + cross_weight * (comp[2] + comp[3])) / inv_square;
    if (std::abs(total.imag()) > 1e-8 * std::max(1.0, std::abs(total.real()))) {
        std::ostringstream os;
        os.precision(17);
        os << what << ": imaginary residue " << total.imag();
        throw Error(os.str());
    }
    return total.real();
}

}  // namespace

cplx cf_component(cplx beta, cplx alpha, double t, double r, int order, cplx eta) {
    const cplx cb = std::conj(beta);
    const cplx prefactor = std::exp(-0.5 * std::norm(eta) + eta * cb - std::conj(eta) * alpha);
    const cplx s_coeff = alpha * t - std::conj(eta) * r + r * cb;
    const cplx tau_coeff = eta * r + r * alpha + cb * t;
    return prefactor * bilinear_derivative(s_coeff, tau_coeff, r * r, 0.5 * t * r, order);
}

cplx cf_closed(const CsEcsParams& params, cplx eta, cplx gamma) {
    const NormalizationResult norm = normalization(params);
    const cplx a = params.alpha;
    std::array<cplx, 4> terms{};
    const auto pairs = component_pairs(a);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [beta, alpha] = pairs[i];
        terms[i] = cf_component(beta, alpha, params.t_a, params.r_a, params.m, eta) *
                   cf_component(beta, alpha, params.t_b, params.r_b, params.n, gamma);
    }
    const double cross_weight = parity_sign(params.parity) * std::exp(-4.0 * std::norm(a));
    return (terms[0] + terms[1] + cross_weight * (terms[2] + terms[3])) / norm.inv_square;
}

FidelityTermArgs fidelity_term_args(const CsEcsParams& params, cplx beta, cplx alpha) {
    const cplx cb = std::conj(beta);
    const cplx mean = 0.5 * (cb + alpha);
    const cplx i_root_a(0.0, std::sqrt(2.0 * params.t_a * params.r_a));
    const cplx i_root_b(0.0, std::sqrt(2.0 * params.t_b * params.r_b));
    FidelityTermArgs args;
    args.n1 = (cb * params.t_a + params.r_a * mean) / (-i_root_a);
    args.n2 = (alpha * params.t_a + params.r_a * mean) / i_root_a;
    args.m1 = (cb * params.t_b + params.r_b * mean) / (-i_root_b);
    args.m2 = (alpha * params.t_b + params.r_b * mean) / i_root_b;
    return args;
}

cplx fidelity_term(const CsEcsParams& params, cplx beta, cplx alpha) {
    const int m = params.m;
    const int n = params.n;
    const double t_a = params.t_a, r_a = params.r_a;
    const double t_b = params.t_b, r_b = params.r_b;
    if (t_a * r_a < kBranchSwitch || t_b * r_b < kBranchSwitch) {
        throw InvalidParams("fidelity_term: Hermite sum needs t*r >= 1e-6 on both modes");
    }
    const FidelityTermArgs args = fidelity_term_args(params, beta, alpha);
    const std::vector<cplx> h_n1 = hermite_table(m, args.n1);
    const std::vector<cplx> h_n2 = hermite_table(m, args.n2);
    const std::vector<cplx> h_m1 = hermite_table(n, args.m1);
    const std::vector<cplx> h_m2 = hermite_table(n, args.m2);

    const double ln_t_a = std::log(t_a), ln_r_a = std::log(r_a);
    const double ln_t_b = std::log(t_b), ln_r_b = std::log(r_b);
    // (r_a r_b)^{k+j} (t_a r_a t_b r_b)^{-(k+j)/2} per unit of k + j
    const double ln_pair = ln_r_a + ln_r_b - 0.5 * (ln_t_a + ln_r_a + ln_t_b + ln_r_b);
    const double ln_head = 2.0 * ln_factorial(m) + 2.0 * ln_factorial(n) - (m + n) * std::numbers::ln2;

    cplx sum(0.0, 0.0);
    for (int l = 0; l <= m; ++l) {
        for (int f = 0; f <= n; ++f) {
            const int top = std::min(n - f, m - l);
            const double ln_lf = ln_head - ln_factorial(l) - ln_factorial(f) + (m - l) * ln_t_a +
                                 (n - f) * ln_t_b + (m + l) * ln_r_a + (n + f) * ln_r_b;
            for (int k = 0; k <= top; ++k) {
                for (int j = 0; j <= top; ++j) {
                    const double ln_w = ln_lf - ln_factorial(k) - ln_factorial(j) -
                                        ln_factorial(m - l - k) - ln_factorial(m - l - j) -
                                        ln_factorial(n - f - k) - ln_factorial(n - f - j) +
                                        (k + j) * ln_pair;
                    const double sign = ((k + j) % 2 == 0) ? 1.0 : -1.0;
                    sum += sign * std::exp(ln_w) * h_n2[m - l - k] * h_n1[m - l - j] *
                           h_m2[n - f - k] * h_m1[n - f - j];
                }
            }
        }
    }
    const cplx diff = std::conj(beta) - alpha;
    return 0.5 * std::exp(0.5 * diff * diff) * sum;
}

namespace {

cplx quadrature_term_at(const CsEcsParams& params, cplx beta, cplx alpha, int order) {
    const GaussHermiteRule& rule = gauss_hermite(order);
    cplx sum(0.0, 0.0);
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
            const cplx z(rule.nodes[i], rule.nodes[j]);
            const cplx value =
                cf_component(beta, alpha, params.t_a, params.r_a, params.m, -std::conj(z)) *
                cf_component(beta, alpha, params.t_b, params.r_b, params.n, -z);
            sum += rule.weights[i] * rule.weights[j] * value;
        }
    }
    return sum / std::numbers::pi;
}

}  // namespace

cplx fidelity_term_quadrature(const CsEcsParams& params, cplx beta, cplx alpha, int quad_order) {
    if (quad_order < 20) throw InvalidParams("fidelity_term_quadrature: quad_order must be >= 20");
    const cplx coarse = quadrature_term_at(params, beta, alpha, quad_order);
    const cplx fine = quadrature_term_at(params, beta, alpha, 2 * quad_order);
    if (std::abs(fine - coarse) > 1e-6 * std::max(1.0, std::abs(fine))) {
        throw ConvergenceError("fidelity component quadrature did not converge");
    }
    return fine;
}

FidelityReport fidelity_closed(const CsEcsParams& params) {
    const NormalizationResult norm = normalization(params);
    const bool hermite_ok =
        params.t_a * params.r_a >= kBranchSwitch && params.t_b * params.r_b >= kBranchSwitch;
    FidelityReport rep;
    rep.branch = hermite_ok ? FidelityBranch::HermiteSum : FidelityBranch::CfQuadrature;
    const auto pairs = component_pairs(params.alpha);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [beta, alpha] = pairs[i];
        rep.components[i] = hermite_ok ? fidelity_term(params, beta, alpha)
                                       : fidelity_term_quadrature(params, beta, alpha);
    }
    rep.f = assemble(rep.components, params.alpha, params.parity, norm.inv_square, "fidelity_closed");
    rep.above_classical = rep.f > 0.5;
    return rep;
}

double fidelity_eecs(cplx alpha) {
    const cplx ca = std::conj(alpha);
    const double decay = std::exp(-4.0 * std::norm(alpha));
    const cplx minus = ca - alpha;
    const cplx plus = ca + alpha;
    const cplx value = (std::exp(0.5 * minus * minus) + decay * std::exp(0.5 * plus * plus)) /
                       (2.0 * (1.0 + decay));
    if (std::abs(value.imag()) > 1e-12 * std::max(1.0, std::abs(value.real()))) {
        throw Error("fidelity_eecs: imaginary residue");
    }
    return value.real();
}

}  // namespace csecs
