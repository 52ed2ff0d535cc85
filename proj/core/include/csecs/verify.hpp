#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace csecs {

/// One closed-form-vs-oracle comparison aggregated over the standard grid.
struct VerifyCheck {
    std::string name;
    std::size_t points = 0;
    /// Grid points where both routes agree the state is degenerate.
    std::size_t skipped = 0;
    std::size_t failures = 0;
    /// Largest |closed − oracle| / max(1, |oracle|).
    double max_error = 0.0;
    std::string worst_point;
    /// First exception text, if any comparison threw.
    std::string first_exception;
    /// Per-point errors in grid order (infinite where a comparison threw).
    std::vector<double> errors;

    bool passed() const { return failures == 0; }
};

struct VerifyReport {
    double tolerance = 0.0;
    std::vector<VerifyCheck> checks;
    double seconds = 0.0;

    bool passed() const;
    /// Same comparisons judged at another tolerance.
    VerifyReport regraded(double new_tolerance) const;
    /// One line per check.
    std::string summary() const;
};

/// Runs every closed form against the Fock-space oracle on the grid
/// α ∈ {0.3, 1, 1.7} × arg α ∈ {0, π/4}, m, n ≤ 2, t ∈ {0, 0.3, 1/√2, 0.9, 1},
/// both parities. Throws InvalidSpec unless tolerance > 0.
VerifyReport verify(double tolerance);

}  // namespace csecs
