#include <csecs/bilinear_derivative.hpp>
#include <csecs/errors.hpp>
#include <csecs/fock_oracle.hpp>
#include <csecs/teleportation.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace csecs;

namespace {

TruncationConfig cutoff(int n_max) {
    TruncationConfig cfg;
    cfg.n_max = n_max;
    return cfg;
}

}  // namespace

TEST_CASE("bare state fidelity") {
    CHECK(std::abs(fidelity_eecs(0.0) - 0.5) < 1e-12);
    CHECK(fidelity_eecs(1.0) == doctest::Approx(0.55745745222747).epsilon(1e-12));
    CHECK(fidelity_eecs(cplx{0.0, 1.0}) == doctest::Approx(0.07544366218957).epsilon(1e-12));
    CHECK(fidelity_eecs(0.1) == doctest::Approx(0.50494934).epsilon(1e-8));
    // Real amplitudes always beat the classical limit.
    for (double a = 0.05; a < 3.0; a += 0.05) CHECK(fidelity_eecs(a) > 0.5);
}

TEST_CASE("general fidelity reduces to the bare formula") {
    for (cplx alpha : {cplx{1.0, 0.0}, cplx{0.0, 1.0}, cplx{0.6, -0.9}}) {
        const auto report = fidelity_closed(CsEcsParams{alpha});
        CHECK(report.f == doctest::Approx(fidelity_eecs(alpha)).epsilon(1e-12));
    }
}

TEST_CASE("small-r fidelity anchor") {
    const auto report = fidelity_closed(CsEcsParams::symmetric(0.1, 1, 1, 0.05));
    CHECK(report.branch == FidelityBranch::HermiteSum);
    CHECK(report.f == doctest::Approx(0.6275877266924627).epsilon(1e-10));
    CHECK(report.f > fidelity_eecs(0.1));
    CHECK(report.above_classical);
}

TEST_CASE("hermite sum and quadrature give the same components") {
    const auto p = CsEcsParams::with_r({0.8, 0.3}, 2, 1, 0.45, 0.7);
    const cplx a = p.alpha;
    for (auto [beta, alpha] : {std::pair{a, a}, std::pair{-a, -a}, std::pair{a, -a}, std::pair{-a, a}}) {
        const cplx sum = fidelity_term(p, beta, alpha);
        const cplx quad = fidelity_term_quadrature(p, beta, alpha);
        CHECK(std::abs(sum - quad) < 1e-10 * std::max(1.0, std::abs(quad)));
    }
}

TEST_CASE("closed fidelity against the oracle") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> mag(0.05, 1.5), unit(0.0, 1.0);
    for (int trial = 0; trial < 12; ++trial) {
        const auto p = CsEcsParams::with_r(mag(rng), trial % 3, (trial / 3) % 3, unit(rng), unit(rng),
                                           trial % 2 ? Parity::Odd : Parity::Even);
        const double closed = fidelity_closed(p).f;
        CHECK(closed == doctest::Approx(fidelity_by_quadrature(build_cs_eecs(p, cutoff(50)))).epsilon(1e-9));
    }
}

TEST_CASE("pure operations use the quadrature fallback") {
    for (double r : {0.0, 1.0}) {
        const auto p = CsEcsParams::symmetric(0.7, 1, 1, r);
        const auto report = fidelity_closed(p);
        CHECK(report.branch == FidelityBranch::CfQuadrature);
        CHECK(report.f == doctest::Approx(fidelity_by_quadrature(build_cs_eecs(p, cutoff(40)))).epsilon(1e-9));
    }
    // Two-mode subtraction leaves the bare state unchanged.
    CHECK(fidelity_closed(CsEcsParams::symmetric(0.7, 1, 1, 0.0)).f == doctest::Approx(fidelity_eecs(0.7)));
}

TEST_CASE("fidelity is continuous across the branch switch") {
    const double r_switch = kBranchSwitch;
    const auto above = fidelity_closed(CsEcsParams::symmetric(0.6, 1, 1, r_switch * 1.01));
    const auto below = fidelity_closed(CsEcsParams::symmetric(0.6, 1, 1, r_switch * 0.99));
    CHECK(above.branch == FidelityBranch::HermiteSum);
    CHECK(below.branch == FidelityBranch::CfQuadrature);
    CHECK(std::abs(above.f - below.f) < 1e-8);
}

TEST_CASE("characteristic function closed form") {
    const auto p = CsEcsParams::with_r({0.5, -0.7}, 1, 2, 0.6, 0.35, Parity::Odd);
    CHECK(std::abs(cf_closed(p, 0.0, 0.0) - 1.0) < 1e-13);
    const auto s = build_cs_eecs(p, cutoff(60));
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (int k = 0; k < 10; ++k) {
        const cplx eta{u(rng), u(rng)}, gamma{u(rng), u(rng)};
        const cplx closed = cf_closed(p, eta, gamma);
        CHECK(std::abs(closed - char_function(s, eta, gamma)) < 1e-11);
        // χ(−η, −γ) = χ(η, γ)*
        CHECK(std::abs(cf_closed(p, -eta, -gamma) - std::conj(closed)) < 1e-12);
    }
}

TEST_CASE("odd states stay below the classical limit") {
    for (double a : {0.2, 0.8, 1.6, 2.4})
        for (double r : {0.0, 0.3, 0.9})
            for (int k : {0, 1}) {
                auto p = CsEcsParams::symmetric(a, k, k, r);
                p.parity = Parity::Odd;
                const auto report = fidelity_closed(p);
                CHECK(report.f < 0.5);
                CHECK_FALSE(report.above_classical);
            }
}

TEST_CASE("higher symmetric orders help only at small amplitude") {
    const double r = 0.195;
    CHECK(fidelity_closed(CsEcsParams::symmetric(0.05, 2, 2, r)).f >
          fidelity_closed(CsEcsParams::symmetric(0.05, 1, 1, r)).f);
    CHECK(fidelity_closed(CsEcsParams::symmetric(0.2, 2, 2, r)).f <
          fidelity_closed(CsEcsParams::symmetric(0.2, 1, 1, r)).f);
    CHECK(fidelity_closed(CsEcsParams::symmetric(0.2, 1, 2, r)).f <
          fidelity_closed(CsEcsParams::symmetric(0.2, 1, 1, r)).f);
}

TEST_CASE("fidelity is symmetric under mode exchange") {
    const auto p = CsEcsParams::with_r(0.9, 2, 1, 0.4, 0.7);
    CHECK(fidelity_closed(p).f == doctest::Approx(fidelity_closed(p.swapped_modes()).f).epsilon(1e-12));
}
