#include "csecs/entanglement.hpp"

#include "csecs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace csecs {

SvMoments sv_moments(const CsEcsParams& params) {
    const cplx a = params.alpha;
    const cplx ca = std::conj(a);
    const double x = std::norm(a);
    const double decay = std::exp(-2.0 * x);
    const double re_sq = (ca * ca + a * a).real();  // α*² + α²

    auto o1 = [&](double t, double r) {
        return x * x + r * r * (1.0 + 3.0 * x) + t * r * re_sq * (1.0 + x);
    };
    auto o2 = [&](double t, double r) {
        return decay * (x * x + r * r * (1.0 - 3.0 * x) + t * r * re_sq * (1.0 - x));
    };
    auto r1 = [&](double t, double r) {
        return x * a + t * r * (a * a * a + x * ca + ca) + 2.0 * r * r * a;
    };
    auto r2 = [&](double t, double r) {
        return decay * (-x * a + t * r * (a * a * a + x * ca - ca) + 2.0 * r * r * a);
    };

    SvMoments mom;
    mom.o1_a = o1(params.t_a, params.r_a);
    mom.o2_a = o2(params.t_a, params.r_a);
    mom.o1_b = o1(params.t_b, params.r_b);
    mom.o2_b = o2(params.t_b, params.r_b);
    mom.r1_a = r1(params.t_a, params.r_a);
    mom.r2_a = r2(params.t_a, params.r_a);
    mom.r1_b = r1(params.t_b, params.r_b);
    mom.r2_b = r2(params.t_b, params.r_b);
    return mom;
}

namespace {

SvReport make_report(double n_a, double n_b, cplx ab) {
    SvReport rep;
    rep.n_a = n_a;
    rep.n_b = n_b;
    rep.ab = ab;
    // ⟨a†b†⟩ = conj⟨ab⟩
    rep.s_plus = (n_a - 0.5) * (n_b - 0.5) - std::norm(ab);
    rep.entangled_flag = rep.s_plus < 0.0;
    return rep;
}

}  // namespace

SvReport sv_statistic_closed(const CsEcsParams& params) {
    params.validate();
    if (params.m != 1 || params.n != 1 || params.parity != Parity::Even) {
        std::ostringstream os;
        os << "closed-form S+ covers only m = n = 1 with even parity (got m=" << params.m
           << ", n=" << params.n << ", " << to_string(params.parity) << ")";
        throw UnsupportedOrder(os.str());
    }
    const cplx a = params.alpha;
    const cplx ca = std::conj(a);
    const double decay = std::exp(-2.0 * std::norm(a));
    const double t_a = params.t_a, r_a = params.r_a;
    const double t_b = params.t_b, r_b = params.r_b;

    const double a1 = std::norm(t_a * a + r_a * ca) + r_a * r_a;
    const double b1 = std::norm(t_b * a + r_b * ca) + r_b * r_b;
    const double a2 = (r_a * r_a - std::norm(r_a * a - ca * t_a)) * decay;
    const double b2 = (r_b * r_b - std::norm(r_b * a - ca * t_b)) * decay;
    const double denom = a1 * b1 + a2 * b2;
    if (!(denom > 1e-300)) throw DegenerateState("S+ closed form: state vanishes");

    const SvMoments mom = sv_moments(params);
    const double n_a = (mom.o1_a * b1 + mom.o2_a * b2) / denom;
    const double n_b = (mom.o1_b * a1 + mom.o2_b * a2) / denom;
    const cplx ab = (mom.r1_a * mom.r1_b + mom.r2_a * mom.r2_b) / denom;
    return make_report(n_a, n_b, ab);
}

SvReport sv_statistic_oracle(const CsEcsParams& params, const TruncationConfig& cfg) {
    const TwoModeFockState s = build_cs_eecs(params, cfg);
    const ModeMoments mom = mode_moments(s);
    return make_report(mom.n_a, mom.n_b, mom.ab);
}

SvReport sv_statistic(const CsEcsParams& params) {
    if (params.m == 1 && params.n == 1 && params.parity == Parity::Even) {
        return sv_statistic_closed(params);
    }
    return sv_statistic_oracle(params, TruncationConfig::for_amplitude(params.alpha));
}

double eecs_sv(cplx alpha) {
    const double x = std::norm(alpha);
    const double shifted = x * std::tanh(2.0 * x) - 0.5;
    return shifted * shifted - x * x;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                   double max_hi) {
    if (!(lo < hi)) throw InvalidParams("bisect_root: need lo < hi");
    double f_lo = f(lo);
    double f_hi = f(hi);
    while ((f_lo > 0.0) == (f_hi > 0.0)) {
        if (f_lo == 0.0) return lo;
        const double width = hi - lo;
        if (hi >= max_hi) throw ConvergenceError("bisect_root: no sign change in bracket");
        lo = hi;
        f_lo = f_hi;
        hi = std::min(max_hi, hi + 2.0 * width);
        f_hi = f(hi);
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double sv_threshold() {
    const auto condition = [](double x) { return 2.0 * x * (std::tanh(2.0 * x) + 1.0) - 1.0; };
    // Bisect in x = |α|² tightly enough that sqrt(x) is good to well under 1e-9.
    const double x = bisect_root(condition, 0.01, 1.0, 1e-13);
    return std::sqrt(x);
}

double sv_crossing(double t, double tol) {
    const double r = std::sqrt(std::max(0.0, 1.0 - t * t));
    const auto s_plus = [&](double alpha) {
        CsEcsParams p;
        p.alpha = alpha;
        p.m = p.n = 1;
        p.t_a = p.t_b = t;
        p.r_a = p.r_b = r;
        return sv_statistic_closed(p).s_plus;
    };
    constexpr double kStep = 0.01;
    double lo = kStep;
    double f_lo = s_plus(lo);
    for (double hi = lo + kStep; hi <= 10.0; hi += kStep) {
        const double f_hi = s_plus(hi);
        if ((f_lo > 0.0) != (f_hi > 0.0)) return bisect_root(s_plus, lo, hi, tol);
        lo = hi;
        f_lo = f_hi;
    }
    throw ConvergenceError("sv_crossing: S+ never changes sign for alpha <= 10");
}

ConcurrenceReport concurrence_from_quartet(const OverlapQuartet& q, Parity parity) {
    const double denom = q.a1 * q.b1 + parity_sign(parity) * q.a2 * q.b2;
    if (!(std::abs(denom) >= 1e-300) || !(q.a1 > 0.0) || !(q.b1 > 0.0)) {
        throw DegenerateState("concurrence: state vanishes");
    }
    const double numer = std::sqrt(std::max(0.0, (q.a1 - q.a2) * (q.a1 + q.a2)) *
                                   std::max(0.0, (q.b1 - q.b2) * (q.b1 + q.b2)));
    ConcurrenceReport rep;
    rep.c = std::clamp(numer / denom, 0.0, 1.0);
    rep.p1 = q.a2 / q.a1;
    rep.p2 = q.b2 / q.b1;
    return rep;
}

ConcurrenceReport concurrence_closed(const CsEcsParams& params) {
    return concurrence_from_quartet(overlap_quartet(params), params.parity);
}

double concurrence_excited(cplx alpha, int m, int n) {
    if (m < 0 || n < 0) throw InvalidParams("operation orders m, n must be non-negative");
    const double x = std::norm(alpha);
    const double decay = std::exp(-4.0 * x);
    const double lm_neg = laguerre(m, -x);
    const double ln_neg = laguerre(n, -x);
    const double lm_pos = laguerre(m, x);
    const double ln_pos = laguerre(n, x);
    const double root_m = std::sqrt(std::max(0.0, lm_neg * lm_neg - decay * lm_pos * lm_pos));
    const double root_n = std::sqrt(std::max(0.0, ln_neg * ln_neg - decay * ln_pos * ln_pos));
    return root_m * root_n / (lm_neg * ln_neg + decay * (lm_pos * ln_pos));
}

}  // namespace csecs
