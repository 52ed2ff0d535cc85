#pragma once

// Brute-force engine over truncated Fock spaces. States are built by literally
// applying (r a† + t a) to coherent-state expansions; every figure of merit is
// then computed from the coefficient matrix with no closed-form input. The
// closed forms elsewhere in the library are tested against this module.

#include "csecs/special_functions.hpp"
#include "csecs/state.hpp"

#include <Eigen/Dense>

namespace csecs {

struct TruncationConfig {
    int n_max = 40;
    /// Largest allowed Poisson tail mass beyond n_max for |±α⟩.
    double tail_tol = 1e-10;

    void validate() const;

    /// ceil(|α|² + 8|α| + 20), never below the default 40. The CSECS_NMAX
    /// environment variable overrides the heuristic when set.
    static TruncationConfig for_amplitude(cplx alpha);
};

/// Coefficients c_k of |k⟩, k = 0..size-1.
struct FockVector {
    Eigen::VectorXcd coeffs;

    int cutoff() const { return static_cast<int>(coeffs.size()) - 1; }
    double norm_squared() const { return coeffs.squaredNorm(); }
    /// |c_last|² / norm², the truncation diagnostic.
    double tail_fraction() const;
};

/// c(j, k) is the coefficient of |j⟩_a |k⟩_b.
struct TwoModeFockState {
    Eigen::MatrixXcd coeffs;
    /// Squared norm before normalisation; for a CS-EECS this is 2(a1 b1 ± a2 b2).
    double pre_norm_squared = 1.0;

    double norm_squared() const { return coeffs.squaredNorm(); }
    /// Mass in the last row and column relative to the total.
    double tail_fraction() const;
};

/// Truncated |α⟩ padded with `headroom` zero entries above n_max.
/// Throws TruncationError when the Poisson tail beyond n_max exceeds tail_tol.
FockVector coherent_vector(cplx alpha, const TruncationConfig& cfg, int headroom = 0);

/// Applies (r a† + t a) `order` times. Unnormalised. Throws HeadroomError if a
/// creation step would push non-zero amplitude past the last entry.
FockVector apply_superposition_op(const FockVector& v, double t, double r, int order);

/// Normalised (r_a a† + t_a a)^m (r_b b† + t_b b)^n (|α,α⟩ ± |−α,−α⟩).
TwoModeFockState build_cs_eecs(const CsEcsParams& params, const TruncationConfig& cfg);

/// Overlaps ⟨±α|X†X|α⟩ per mode from explicit inner products.
OverlapQuartet oracle_overlaps(const CsEcsParams& params, const TruncationConfig& cfg);

struct ModeMoments {
    double n_a = 0.0;  // ⟨a†a⟩
    double n_b = 0.0;  // ⟨b†b⟩
    cplx ab{};         // ⟨ab⟩
    cplx adbd{};       // ⟨a†b†⟩
};

ModeMoments mode_moments(const TwoModeFockState& s);

/// ab applied to the coefficient matrix (not renormalised).
Eigen::MatrixXcd pair_annihilate(const TwoModeFockState& s);

/// ρ_A = Tr_B |ψ⟩⟨ψ|.
Eigen::MatrixXcd reduced_density_a(const TwoModeFockState& s);

/// sqrt(2 (1 - Tr ρ_A²)).
double concurrence_oracle(const TwoModeFockState& s);

/// ⟨row| D(η) |col⟩.
cplx displacement_element(int row, int col, cplx eta);

/// dim × dim block of D(η) in the number basis. Each diagonal band is filled by
/// a Laguerre recurrence, so the cost is O(dim²).
Eigen::MatrixXcd displacement_matrix(cplx eta, int dim);

/// χ(η, γ) = ⟨ψ| D_a(η) D_b(γ) |ψ⟩ from two dense matrix products. Throws
/// TruncationError when more than 1e-8 of the displaced state's mass leaves
/// the truncated space.
cplx char_function(const TwoModeFockState& s, cplx eta, cplx gamma);

/// Teleportation fidelity for a coherent input,
///
///     F = ∫ d²z/π exp(-|z|²) χ(-z*, -z),
///
/// by quad_order × quad_order Gauss–Hermite quadrature, repeated at twice the
/// order. Returns the finer estimate; throws ConvergenceError if the two differ
/// by more than 1e-6. The state is factorised by SVD first, so each node costs
/// O(dim² · rank) rather than two dense products.
double fidelity_by_quadrature(const TwoModeFockState& s, int quad_order = 40);

}  // namespace csecs
