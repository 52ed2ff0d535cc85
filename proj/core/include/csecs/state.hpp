#pragma once

#include "csecs/special_functions.hpp"

#include <string_view>

namespace csecs {

/// Sign of the two-component superposition: |α,α⟩ + |−α,−α⟩ (Even) or
/// |α,α⟩ − |−α,−α⟩ (Odd).
enum class Parity { Even, Odd };

inline constexpr double parity_sign(Parity p) { return p == Parity::Even ? 1.0 : -1.0; }
std::string_view to_string(Parity p);
Parity parse_parity(std::string_view text);

/// Parameters of the state  N (r_a a† + t_a a)^m (r_b b† + t_b b)^n (|α,α⟩ ± |−α,−α⟩).
///
/// t and r are real, in [0,1], with t² + r² = 1 for each mode. t = 1 is pure
/// photon subtraction, r = 1 pure photon addition.
struct CsEcsParams {
    cplx alpha{0.0, 0.0};
    int m = 0;
    int n = 0;
    double t_a = 1.0;
    double r_a = 0.0;
    double t_b = 1.0;
    double r_b = 0.0;
    Parity parity = Parity::Even;

    /// Both modes with the same r, t = sqrt(1 - r²).
    static CsEcsParams symmetric(cplx alpha, int m, int n, double r, Parity parity = Parity::Even);
    /// Per-mode r values.
    static CsEcsParams with_r(cplx alpha, int m, int n, double r_a, double r_b,
                              Parity parity = Parity::Even);

    /// Throws InvalidParams when an invariant is violated.
    void validate() const;
    /// Same state with the two modes exchanged.
    CsEcsParams swapped_modes() const;
};

/// Per-mode overlaps of the operated coherent states:
///
///     a1 = ⟨α|X_a† X_a|α⟩,  a2 = ⟨−α|X_a† X_a|α⟩    with X_a = (r_a a† + t_a a)^m
///
/// and b1, b2 likewise for mode b. The scaled_arg_* members hold the Hermite
/// arguments of the closed forms (zero when the near-pure branch was used).
struct OverlapQuartet {
    double a1 = 1.0;
    double a2 = 0.0;
    double b1 = 1.0;
    double b2 = 0.0;
    cplx scaled_arg_a{};
    cplx scaled_arg_cross_a{};
    cplx scaled_arg_b{};
    cplx scaled_arg_cross_b{};
};

struct NormalizationResult {
    double n_factor = 1.0;
    double inv_square = 1.0;
};

/// Which closed form produced a single-mode overlap pair.
enum class OverlapBranch { HermiteSum, NearPureSeries, PureAddition, PureSubtraction };

struct ModeOverlap {
    double diag = 1.0;   // ⟨α|X†X|α⟩
    double cross = 0.0;  // ⟨−α|X†X|α⟩
    cplx scaled_arg{};
    cplx scaled_arg_cross{};
    OverlapBranch branch = OverlapBranch::HermiteSum;
};

/// Single-mode overlap pair for (r a† + t a)^order acting on |±α⟩.
ModeOverlap mode_overlap(cplx alpha, double t, double r, int order);

OverlapQuartet overlap_quartet(const CsEcsParams& params);

/// N^{-2} = 2(a1 b1 ± a2 b2). Throws DegenerateState when it is ≤ 1e-300.
NormalizationResult normalization(const CsEcsParams& params);
NormalizationResult normalization(const OverlapQuartet& q, Parity parity);

/// N^{-2} of the pure photon-added state a†^m b†^n (|α,α⟩ + |−α,−α⟩),
/// evaluated straight from Laguerre polynomials.
double excited_normalization(cplx alpha, int m, int n);

}  // namespace csecs
