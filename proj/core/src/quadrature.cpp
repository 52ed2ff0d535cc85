#include "csecs/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace csecs {

namespace {

// Orthonormal Hermite recurrence: returns p_n(x) and p_{n-1}(x) where
// p_k = H_k / sqrt(2^k k! sqrt(pi)).
std::pair<double, double> orthonormal_hermite(int n, double x) {
    double p_prev = 0.0;
    double p = std::pow(std::numbers::pi, -0.25);
    for (int k = 1; k <= n; ++k) {
        const double next = x * std::sqrt(2.0 / k) * p - std::sqrt((k - 1.0) / k) * p_prev;
        p_prev = p;
        p = next;
    }
    return {p, p_prev};
}

GaussHermiteRule build_rule(int n) {
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double off = std::sqrt(k / 2.0);
        jacobi(k, k - 1) = off;
        jacobi(k - 1, k) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    GaussHermiteRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = solver.eigenvalues()(i);
        for (int it = 0; it < 3; ++it) {
            auto [p, p_prev] = orthonormal_hermite(n, x);
            const double dp = std::sqrt(2.0 * n) * p_prev;
            x -= p / dp;
        }
        auto [p, p_prev] = orthonormal_hermite(n, x);
        (void)p;
        rule.nodes[i] = x;
        rule.weights[i] = 1.0 / (n * p_prev * p_prev);
    }
    return rule;
}

}  // namespace

const GaussHermiteRule& gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: order must be positive");
    static std::mutex mutex;
    static std::map<int, GaussHermiteRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

}  // namespace csecs
