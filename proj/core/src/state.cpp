#include "csecs/state.hpp"

#include "csecs/bilinear_derivative.hpp"
#include "csecs/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace csecs {

std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity parse_parity(std::string_view text) {
    if (text == "even" || text == "Even" || text == "+") return Parity::Even;
    if (text == "odd" || text == "Odd" || text == "-") return Parity::Odd;
    throw InvalidParams("unknown parity '" + std::string(text) + "' (expected even|odd)");
}

namespace {

double t_from_r(double r) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw InvalidParams("superposition coefficient r must lie in [0,1], got " + std::to_string(r));
    }
    return std::sqrt(std::max(0.0, 1.0 - r * r));
}

void check_mode(const char* name, double t, double r) {
    const bool in_range = t >= 0.0 && t <= 1.0 && r >= 0.0 && r <= 1.0;
    if (!in_range || std::abs(t * t + r * r - 1.0) > 1e-12) {
        std::ostringstream os;
        os.precision(17);
        os << "mode " << name << ": need t, r in [0,1] with t^2 + r^2 = 1, got t=" << t
           << " r=" << r;
        throw InvalidParams(os.str());
    }
}

// (r a† + t a)^order |α⟩ overlaps from the Hermite sum; requires t r > 0.
ModeOverlap hermite_sum_overlap(cplx alpha, double t, double r, int order) {
    const double x = std::norm(alpha);
    const double root = std::sqrt(2.0 * t * r);
    const cplx i_root(0.0, root);
    ModeOverlap out;
    out.branch = OverlapBranch::HermiteSum;
    out.scaled_arg = (t * alpha + r * std::conj(alpha)) / i_root;
    out.scaled_arg_cross = (r * alpha - t * std::conj(alpha)) / i_root;

    const double ln_m_fact = ln_factorial(order);
    const double ln_t = std::log(t);
    const double ln_r = std::log(r);
    double diag = 0.0;
    double cross = 0.0;
    for (int l = 0; l <= order; ++l) {
        const int k = order - l;
        const double weight = std::exp(2.0 * ln_m_fact - ln_factorial(l) - 2.0 * ln_factorial(k) -
                                       k * std::numbers::ln2 + k * ln_t + (order + l) * ln_r);
        diag += weight * std::norm(hermite(k, out.scaled_arg));
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        cross += sign * weight * std::norm(hermite(k, out.scaled_arg_cross));
    }
    out.diag = diag;
    out.cross = std::exp(-2.0 * x) * cross;
    return out;
}

double real_part_checked(cplx value, double scale, const char* what) {
    if (std::abs(value.imag()) > 1e-10 * std::max(scale, std::abs(value.real()))) {
        std::ostringstream os;
        os.precision(17);
        os << what << ": unexpected imaginary residue " << value.imag() << " on " << value.real();
        throw Error(os.str());
    }
    return value.real();
}

}  // namespace

CsEcsParams CsEcsParams::symmetric(cplx alpha, int m, int n, double r, Parity parity) {
    return with_r(alpha, m, n, r, r, parity);
}

CsEcsParams CsEcsParams::with_r(cplx alpha, int m, int n, double r_a, double r_b, Parity parity) {
    CsEcsParams p;
    p.alpha = alpha;
    p.m = m;
    p.n = n;
    p.t_a = t_from_r(r_a);
    p.r_a = r_a;
    p.t_b = t_from_r(r_b);
    p.r_b = r_b;
    p.parity = parity;
    return p;
}

void CsEcsParams::validate() const {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
        throw InvalidParams("alpha must be finite");
    }
    if (m < 0 || n < 0) throw InvalidParams("operation orders m, n must be non-negative");
    check_mode("a", t_a, r_a);
    check_mode("b", t_b, r_b);
}

CsEcsParams CsEcsParams::swapped_modes() const {
    CsEcsParams p = *this;
    std::swap(p.m, p.n);
    std::swap(p.t_a, p.t_b);
    std::swap(p.r_a, p.r_b);
    return p;
}

ModeOverlap mode_overlap(cplx alpha, double t, double r, int order) {
    if (order < 0) throw InvalidParams("operation order must be non-negative");
    const double x = std::norm(alpha);
    const double decay = std::exp(-2.0 * x);

    if (r == 0.0) {
        // a^k |α⟩ = α^k |α⟩
        ModeOverlap out;
        out.branch = OverlapBranch::PureSubtraction;
        out.diag = std::pow(x, order);
        out.cross = (order % 2 == 0 ? 1.0 : -1.0) * out.diag * decay;
        return out;
    }
    if (t == 0.0) {
        ModeOverlap out;
        out.branch = OverlapBranch::PureAddition;
        const double fact = factorial(order);
        out.diag = fact * laguerre(order, -x);
        out.cross = fact * decay * laguerre(order, x);
        return out;
    }
    if (t * r >= kBranchSwitch) return hermite_sum_overlap(alpha, t, r, order);

    // Near the pure limits: exact polynomial in t, r without 1/sqrt(2tr).
    const cplx ca = std::conj(alpha);
    const cplx quad = 0.5 * t * r;
    const cplx diag = bilinear_derivative_series(t * alpha + r * ca, t * ca + r * alpha, r * r, quad, order);
    const cplx cross = bilinear_derivative_series(t * alpha - r * ca, r * alpha - t * ca, r * r, quad, order);
    ModeOverlap out;
    out.branch = OverlapBranch::NearPureSeries;
    out.diag = real_part_checked(diag, 0.0, "mode_overlap diagonal");
    out.cross = decay * real_part_checked(cross, std::abs(diag), "mode_overlap cross");
    return out;
}

OverlapQuartet overlap_quartet(const CsEcsParams& params) {
    params.validate();
    const ModeOverlap a = mode_overlap(params.alpha, params.t_a, params.r_a, params.m);
    const ModeOverlap b = mode_overlap(params.alpha, params.t_b, params.r_b, params.n);
    OverlapQuartet q;
    q.a1 = a.diag;
    q.a2 = a.cross;
    q.b1 = b.diag;
    q.b2 = b.cross;
    q.scaled_arg_a = a.scaled_arg;
    q.scaled_arg_cross_a = a.scaled_arg_cross;
    q.scaled_arg_b = b.scaled_arg;
    q.scaled_arg_cross_b = b.scaled_arg_cross;
    return q;
}

NormalizationResult normalization(const OverlapQuartet& q, Parity parity) {
    const double inv_square = 2.0 * (q.a1 * q.b1 + parity_sign(parity) * q.a2 * q.b2);
    if (!(inv_square > 1e-300)) {
        std::ostringstream os;
        os.precision(17);
        os << "state vanishes: N^-2 = " << inv_square << " (" << to_string(parity) << " parity)";
        throw DegenerateState(os.str());
    }
    return {1.0 / std::sqrt(inv_square), inv_square};
}

NormalizationResult normalization(const CsEcsParams& params) {
    return normalization(overlap_quartet(params), params.parity);
}

double excited_normalization(cplx alpha, int m, int n) {
    if (m < 0 || n < 0) throw InvalidParams("operation orders m, n must be non-negative");
    const double x = std::norm(alpha);
    return 2.0 * factorial(m) * factorial(n) *
           (laguerre(m, -x) * laguerre(n, -x) + std::exp(-4.0 * x) * laguerre(m, x) * laguerre(n, x));
}

}  // namespace csecs
