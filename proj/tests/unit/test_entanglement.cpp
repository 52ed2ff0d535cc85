#include <csecs/entanglement.hpp>
#include <csecs/errors.hpp>
#include <csecs/fock_oracle.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace csecs;

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

TruncationConfig cutoff(int n_max) {
    TruncationConfig cfg;
    cfg.n_max = n_max;
    return cfg;
}

}  // namespace

TEST_CASE("bare state SV statistic") {
    CHECK(eecs_sv(1.0) == doctest::Approx(-0.78467840492898).epsilon(1e-12));
    CHECK(eecs_sv(cplx{0.0, 1.0}) == doctest::Approx(-0.78467840492898).epsilon(1e-12));
    CHECK(eecs_sv(0.0) == doctest::Approx(0.25));
    const auto oracle = sv_statistic_oracle(CsEcsParams{1.0}, cutoff(40));
    CHECK(oracle.s_plus == doctest::Approx(eecs_sv(1.0)).epsilon(1e-12));
    CHECK(oracle.entangled_flag);
}

TEST_CASE("SV threshold") {
    const double a = sv_threshold();
    CHECK(a == doctest::Approx(0.5653460318).epsilon(1e-9));
    const double x = a * a;
    CHECK(std::abs(2.0 * x * (std::tanh(2.0 * x) + 1.0) - 1.0) < 1e-8);
    CHECK(eecs_sv(a - 1e-4) > 0.0);
    CHECK(eecs_sv(a + 1e-4) < 0.0);
}

TEST_CASE("SV closed form against the oracle") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> mag(0.05, 1.6), unit(0.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const auto p = CsEcsParams::with_r(mag(rng), 1, 1, unit(rng), unit(rng));
        const auto closed = sv_statistic_closed(p);
        const auto oracle = sv_statistic_oracle(p, cutoff(50));
        CHECK(closed.s_plus == doctest::Approx(oracle.s_plus).epsilon(1e-10));
        CHECK(closed.n_a == doctest::Approx(oracle.n_a).epsilon(1e-10));
        CHECK(closed.n_b == doctest::Approx(oracle.n_b).epsilon(1e-10));
        CHECK(std::abs(closed.ab - oracle.ab) < 1e-10 * std::max(1.0, std::abs(oracle.ab)));
        CHECK(closed.entangled_flag == (closed.s_plus < 0.0));
    }
}

TEST_CASE("SV closed form scope") {
    CHECK_THROWS_AS(sv_statistic_closed(CsEcsParams::symmetric(1.0, 2, 1, 0.5)), UnsupportedOrder);
    auto odd = CsEcsParams::symmetric(1.0, 1, 1, 0.5);
    odd.parity = Parity::Odd;
    CHECK_THROWS_AS(sv_statistic_closed(odd), UnsupportedOrder);
    // The dispatcher falls back to the oracle.
    CHECK(sv_statistic(odd).s_plus == doctest::Approx(sv_statistic_oracle(odd, cutoff(40)).s_plus));
}

TEST_CASE("SV of the doubly excited vacuum limit") {
    // α → 0 with pure addition gives |1,1⟩: S₊ = (1 − ½)² = ¼.
    const auto sv = sv_statistic(CsEcsParams::symmetric(1e-5, 1, 1, 1.0));
    CHECK(sv.s_plus == doctest::Approx(0.25).epsilon(1e-8));
    CHECK(sv.n_a == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(sv.ab) < 1e-8);
    CHECK_FALSE(sv.entangled_flag);
}

TEST_CASE("bisection root finder") {
    CHECK(bisect_root([](double x) { return x * x - 2.0; }, 0.0, 1.0, 1e-12) ==
          doctest::Approx(std::numbers::sqrt2).epsilon(1e-11));
    CHECK_THROWS_AS(bisect_root([](double x) { return x * x + 1.0; }, 0.0, 1.0), ConvergenceError);
}

TEST_CASE("SV crossings move below the bare threshold") {
    const double bare = sv_threshold();
    double previous = bare;
    for (double t : {0.0, 0.2, 0.6, 0.9}) {
        const double c = sv_crossing(t);
        CHECK(c < bare);
        CHECK(c < previous);
        previous = c;
        const auto p = CsEcsParams::symmetric(c, 1, 1, std::sqrt(1.0 - t * t));
        CHECK(std::abs(sv_statistic(p).s_plus) < 1e-8);
    }
}

TEST_CASE("concurrence reference values") {
    const auto c = concurrence_closed(CsEcsParams::symmetric(1.0, 1, 1, kInvSqrt2));
    CHECK(c.c == doctest::Approx(0.99853582158343).epsilon(1e-12));
    CHECK(c.p1 == doctest::Approx(c.p2));
    CHECK(concurrence_closed(CsEcsParams{1.0}).c == doctest::Approx(std::tanh(2.0)).epsilon(1e-14));
    CsEcsParams odd{1.0};
    odd.parity = Parity::Odd;
    CHECK(concurrence_closed(odd).c == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("photon subtraction keeps or flips the concurrence by total parity") {
    for (double a : {0.5, 1.0, 1.5}) {
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) {
                const double c = concurrence_closed(CsEcsParams::symmetric(a, m, n, 0.0)).c;
                const double expected = (m + n) % 2 == 0 ? std::tanh(2.0 * a * a) : 1.0;
                CHECK(std::abs(c - expected) < 1e-9);
            }
    }
}

TEST_CASE("excited-state concurrence agrees with the general form") {
    for (double a : {0.3, 1.0, 1.7})
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n)
                CHECK(concurrence_excited(a, m, n) ==
                      doctest::Approx(concurrence_closed(CsEcsParams::symmetric(a, m, n, 1.0)).c).epsilon(1e-12));
    CHECK(concurrence_excited(0.8, 1, 2) == doctest::Approx(concurrence_excited(0.8, 2, 1)).epsilon(1e-15));
}

TEST_CASE("concurrence against the oracle and mode exchange") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> mag(0.1, 1.7), phase(0.0, 6.0), unit(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = CsEcsParams::with_r(std::polar(mag(rng), phase(rng)), trial % 3, (trial + 1) % 3, unit(rng),
                                           unit(rng), trial % 2 ? Parity::Odd : Parity::Even);
        const double closed = concurrence_closed(p).c;
        CHECK(closed == doctest::Approx(concurrence_oracle(build_cs_eecs(p, cutoff(50)))).epsilon(1e-10));
        CHECK(closed == doctest::Approx(concurrence_closed(p.swapped_modes()).c).epsilon(1e-13));
        CHECK(closed >= 0.0);
        CHECK(closed <= 1.0);
    }
}

TEST_CASE("small-amplitude improvements") {
    const double a = 0.3;
    const double cs_single = concurrence_closed(CsEcsParams::with_r(a, 1, 0, kInvSqrt2, 0.0)).c;
    const double add_single = concurrence_closed(CsEcsParams::with_r(a, 1, 0, 1.0, 0.0)).c;
    const double cs_two = concurrence_closed(CsEcsParams::symmetric(a, 1, 1, kInvSqrt2)).c;
    const double add_two = concurrence_closed(CsEcsParams::symmetric(a, 1, 1, 1.0)).c;
    CHECK(cs_single > add_single);
    CHECK(cs_two > add_two);
    CHECK(cs_two > cs_single);
}
