#pragma once

#include <vector>

namespace csecs {

/// Nodes and weights of the n-point Gauss–Hermite rule for weight exp(-x²).
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Golub–Welsch construction followed by Newton polishing of each node.
/// Results are memoised per order; the returned reference stays valid.
const GaussHermiteRule& gauss_hermite(int n);

}  // namespace csecs
