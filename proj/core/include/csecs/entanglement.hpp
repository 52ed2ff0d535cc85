#pragma once

#include "csecs/fock_oracle.hpp"
#include "csecs/state.hpp"

#include <functional>

namespace csecs {

/// Coefficients of the m = n = 1 moment closed form. For real α, t, r every
/// entry is real.
struct SvMoments {
    double o1_a = 0.0, o2_a = 0.0, o1_b = 0.0, o2_b = 0.0;
    cplx r1_a{}, r2_a{}, r1_b{}, r2_b{};
};

/// S₊ = ⟨a†a − ½⟩⟨b†b − ½⟩ − ⟨a†b†⟩⟨ab⟩; S₊ < 0 certifies inseparability.
struct SvReport {
    double s_plus = 0.0;
    double n_a = 0.0;
    double n_b = 0.0;
    cplx ab{};
    bool entangled_flag = false;
};

struct ConcurrenceReport {
    double c = 0.0;
    double p1 = 0.0;  // a2 / a1
    double p2 = 0.0;  // b2 / b1
};

SvMoments sv_moments(const CsEcsParams& params);

/// Closed form for m = n = 1, Even parity. Throws UnsupportedOrder otherwise.
SvReport sv_statistic_closed(const CsEcsParams& params);

/// Any (m, n) and parity, from Fock-space moments.
SvReport sv_statistic_oracle(const CsEcsParams& params, const TruncationConfig& cfg);

/// Closed form when available, oracle otherwise.
SvReport sv_statistic(const CsEcsParams& params);

/// S₊ of the bare even entangled coherent state.
double eecs_sv(cplx alpha);

/// Amplitude above which the bare EECS satisfies S₊ < 0: the root of
/// 2x(tanh 2x + 1) = 1 with x = |α|², returned as sqrt(x).
double sv_threshold();

/// Root of f in [lo, hi] by bisection to absolute tolerance `tol`. If f(lo)
/// and f(hi) share a sign, hi is pushed outward (doubling the width) up to
/// `max_hi` before giving up with ConvergenceError.
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-9,
                   double max_hi = 64.0);

/// Smallest real α where S₊ of the symmetric m = n = 1 state with t_a = t_b = t
/// turns negative. The search walks up from α = 0.01 in steps of 0.01 to find
/// the first sign change, then bisects.
double sv_crossing(double t, double tol = 1e-9);

/// Two-term concurrence from the overlap quartet.
ConcurrenceReport concurrence_closed(const CsEcsParams& params);
ConcurrenceReport concurrence_from_quartet(const OverlapQuartet& q, Parity parity);

/// Concurrence of a†^m b†^n (|α,α⟩ + |−α,−α⟩) straight from Laguerre polynomials.
double concurrence_excited(cplx alpha, int m, int n);

}  // namespace csecs
