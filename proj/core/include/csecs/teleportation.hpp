#pragma once

#include "csecs/bilinear_derivative.hpp"
#include "csecs/state.hpp"

#include <array>

namespace csecs {

/// Hermite arguments of one fidelity component F^{β,α}.
struct FidelityTermArgs {
    cplx n1{}, n2{}, m1{}, m2{};
};

/// How fidelity_closed evaluated its four components.
enum class FidelityBranch { HermiteSum, CfQuadrature };

/// Braunstein–Kimble fidelity of teleporting a coherent state through the
/// CS-EECS channel. components = {F^{α,α}, F^{−α,−α}, F^{α,−α}, F^{−α,α}}.
struct FidelityReport {
    double f = 0.0;
    std::array<cplx, 4> components{};
    bool above_classical = false;
    FidelityBranch branch = FidelityBranch::HermiteSum;
};

/// One-mode factor of the characteristic function,
///
///     CF^{β,α}(η) = e^{−|η|²/2 + ηβ* − η*α} ∂^k_τ ∂^k_s
///                   exp[½(τ² + s²) t r + (ηr + rα + β*t) τ + (αt − η*r + rβ*) s + τ s r²]
///
/// at τ = s = 0, with k the operation order of that mode. For |β| = |α|,
/// ⟨β|X† D(η) X|α⟩ = e^{β*α − |α|²} CF^{β,α}(η); cf_closed folds the
/// e^{−4|α|²} of the two cross terms back in.
cplx cf_component(cplx beta, cplx alpha, double t, double r, int order, cplx eta);

/// χ(η, γ) = Tr[D_a(η) D_b(γ) ρ] of the normalised state.
cplx cf_closed(const CsEcsParams& params, cplx eta, cplx gamma);

FidelityTermArgs fidelity_term_args(const CsEcsParams& params, cplx beta, cplx alpha);

/// Quadruple Hermite sum for F^{β,α}. Requires t·r >= kBranchSwitch on both modes.
cplx fidelity_term(const CsEcsParams& params, cplx beta, cplx alpha);

/// F^{β,α} = ∫ d²z/π e^{−|z|²} CF_A^{β,α}(−z*) CF_B^{β,α}(−z) by Gauss–Hermite
/// quadrature at quad_order and 2·quad_order; valid at every t, r.
cplx fidelity_term_quadrature(const CsEcsParams& params, cplx beta, cplx alpha, int quad_order = 40);

/// F = N² [F^{α,α} + F^{−α,−α} ± e^{−4|α|²}(F^{α,−α} + F^{−α,α})].
/// Uses the Hermite sum when both t·r >= kBranchSwitch, quadrature of the
/// closed characteristic function otherwise.
FidelityReport fidelity_closed(const CsEcsParams& params);

/// Fidelity through the bare EECS (m = n = 0); depends on Re α and Im α.
double fidelity_eecs(cplx alpha);

}  // namespace csecs
