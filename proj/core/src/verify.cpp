#include "csecs/verify.hpp"

#include "csecs/entanglement.hpp"
#include "csecs/errors.hpp"
#include "csecs/fock_oracle.hpp"
#include "csecs/result_table.hpp"
#include "csecs/teleportation.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <limits>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

namespace csecs {

namespace {

enum CheckId { kQuartet, kNormalization, kSv, kConcurrence, kCf, kFidelity, kExcited, kCheckCount };

constexpr const char* kCheckNames[kCheckCount] = {
    "overlap_quartet", "normalization", "sv_statistic", "concurrence",
    "characteristic_function", "fidelity", "excited_specialisation"};

constexpr int kCfSamples = 10;
constexpr double kCfRadius = 1.5;

struct Outcome {
    bool evaluated = false;
    bool skipped = false;
    double error = 0.0;
    std::string exception;
};

using PointOutcome = std::array<Outcome, kCheckCount>;

double rel_error(cplx closed, cplx oracle) { return std::abs(closed - oracle) / std::max(1.0, std::abs(oracle)); }

std::string describe(const CsEcsParams& p) {
    std::ostringstream os;
    os << "alpha=" << format_double(p.alpha.real()) << (p.alpha.imag() < 0 ? "" : "+")
       << format_double(p.alpha.imag()) << "i m=" << p.m << " n=" << p.n << " t=" << format_double(p.t_a)
       << " " << to_string(p.parity);
    return os.str();
}

template <typename F>
void run_check(Outcome& out, F&& body) {
    out.evaluated = true;
    try {
        out.error = body();
    } catch (const Error& e) {
        out.error = std::numeric_limits<double>::infinity();
        out.exception = std::string(e.kind()) + ": " + e.what();
    } catch (const std::exception& e) {
        out.error = std::numeric_limits<double>::infinity();
        out.exception = e.what();
    }
}

PointOutcome check_point(const CsEcsParams& p, std::size_t index) {
    PointOutcome out;
    const auto cfg = TruncationConfig::for_amplitude(p.alpha);

    run_check(out[kQuartet], [&] {
        const auto closed = overlap_quartet(p);
        const auto oracle = oracle_overlaps(p, cfg);
        return std::max({rel_error(closed.a1, oracle.a1), rel_error(closed.a2, oracle.a2),
                         rel_error(closed.b1, oracle.b1), rel_error(closed.b2, oracle.b2)});
    });

    // Degeneracy has to be agreed on by both routes; a one-sided throw is a failure.
    std::optional<TwoModeFockState> state;
    bool closed_degenerate = false;
    bool oracle_degenerate = false;
    try {
        normalization(p);
    } catch (const DegenerateState&) {
        closed_degenerate = true;
    }
    try {
        state = build_cs_eecs(p, cfg);
    } catch (const DegenerateState&) {
        oracle_degenerate = true;
    } catch (const Error&) {
    }
    if (closed_degenerate && oracle_degenerate) {
        for (int c = kNormalization; c < kCheckCount; ++c) out[c].evaluated = out[c].skipped = true;
        return out;
    }

    auto need_state = [&]() -> const TwoModeFockState& {
        if (!state) state = build_cs_eecs(p, cfg);
        return *state;
    };

    run_check(out[kNormalization],
              [&] { return rel_error(normalization(p).inv_square, need_state().pre_norm_squared); });

    if (p.m == 1 && p.n == 1 && p.parity == Parity::Even) {
        run_check(out[kSv], [&] {
            const auto closed = sv_statistic_closed(p);
            const auto oracle = sv_statistic_oracle(p, cfg);
            return std::max({rel_error(closed.s_plus, oracle.s_plus), rel_error(closed.n_a, oracle.n_a),
                             rel_error(closed.n_b, oracle.n_b), rel_error(closed.ab, oracle.ab)});
        });
    }

    run_check(out[kConcurrence],
              [&] { return rel_error(concurrence_closed(p).c, concurrence_oracle(need_state())); });

    run_check(out[kCf], [&] {
        // The displaced state needs a cutoff sized for |α| + |η| rather than |α|.
        const double reach = std::abs(p.alpha) + kCfRadius * std::numbers::sqrt2;
        const auto wide = build_cs_eecs(p, TruncationConfig::for_amplitude(reach));
        std::mt19937_64 rng(0x5eedULL + index);
        std::uniform_real_distribution<double> coord(-kCfRadius, kCfRadius);
        double worst = 0.0;
        for (int k = 0; k < kCfSamples; ++k) {
            const cplx eta{coord(rng), coord(rng)};
            const cplx gamma{coord(rng), coord(rng)};
            worst = std::max(worst, rel_error(cf_closed(p, eta, gamma), char_function(wide, eta, gamma)));
        }
        return worst;
    });

    // Fidelity needs the two-dimensional quadrature of the oracle, the slowest
    // piece; real amplitudes cover every operation order, t and parity.
    if (p.alpha.imag() == 0.0) {
        run_check(out[kFidelity],
                  [&] { return rel_error(fidelity_closed(p).f, fidelity_by_quadrature(need_state())); });
    }

    if (p.t_a == 0.0 && p.t_b == 0.0 && p.parity == Parity::Even) {
        run_check(out[kExcited], [&] {
            return std::max(rel_error(excited_normalization(p.alpha, p.m, p.n), normalization(p).inv_square),
                            rel_error(concurrence_excited(p.alpha, p.m, p.n), concurrence_oracle(need_state())));
        });
    }
    return out;
}

std::vector<CsEcsParams> standard_grid() {
    std::vector<CsEcsParams> grid;
    const double ts[] = {0.0, 0.3, std::numbers::sqrt2 / 2.0, 0.9, 1.0};
    for (double mag : {0.3, 1.0, 1.7})
        for (double phase : {0.0, std::numbers::pi / 4.0})
            for (int m = 0; m <= 2; ++m)
                for (int n = 0; n <= 2; ++n)
                    for (double t : ts)
                        for (Parity parity : {Parity::Even, Parity::Odd}) {
                            CsEcsParams p;
                            p.alpha = std::polar(mag, phase);
                            p.m = m;
                            p.n = n;
                            p.t_a = p.t_b = t;
                            p.r_a = p.r_b = t == 1.0 ? 0.0 : std::sqrt(1.0 - t * t);
                            p.parity = parity;
                            grid.push_back(p);
                        }
    return grid;
}

}  // namespace

bool VerifyReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed()) return false;
    return !checks.empty();
}

VerifyReport VerifyReport::regraded(double new_tolerance) const {
    if (!(new_tolerance > 0.0)) throw InvalidSpec("tolerance must be positive");
    VerifyReport out = *this;
    out.tolerance = new_tolerance;
    for (auto& c : out.checks)
        c.failures = static_cast<std::size_t>(
            std::count_if(c.errors.begin(), c.errors.end(), [&](double e) { return !(e <= new_tolerance); }));
    return out;
}

std::string VerifyReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed() ? "PASS " : "FAIL ") << c.name << " points=" << c.points << " skipped=" << c.skipped
           << " failures=" << c.failures << " max_error=" << format_double(c.max_error);
        if (!c.worst_point.empty()) os << " worst=[" << c.worst_point << "]";
        if (!c.first_exception.empty()) os << " exception=\"" << c.first_exception << "\"";
        os << '\n';
    }
    return os.str();
}

VerifyReport verify(double tolerance) {
    if (!(tolerance > 0.0) || !std::isfinite(tolerance)) throw InvalidSpec("tolerance must be positive");
    const auto start = std::chrono::steady_clock::now();

    const auto grid = standard_grid();
    std::vector<PointOutcome> outcomes(grid.size());
    detail::parallel_for(grid.size(), [&](std::size_t i) { outcomes[i] = check_point(grid[i], i); });

    VerifyReport report;
    report.tolerance = tolerance;
    for (int c = 0; c < kCheckCount; ++c) {
        VerifyCheck check;
        check.name = kCheckNames[c];
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto& o = outcomes[i][c];
            if (!o.evaluated) continue;
            ++check.points;
            if (o.skipped) {
                ++check.skipped;
                continue;
            }
            check.errors.push_back(o.error);
            if (!(o.error <= tolerance)) ++check.failures;
            if (!(o.error <= check.max_error)) {
                check.max_error = o.error;
                check.worst_point = describe(grid[i]);
            }
            if (!o.exception.empty() && check.first_exception.empty())
                check.first_exception = describe(grid[i]) + ": " + o.exception;
        }
        report.checks.push_back(std::move(check));
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace csecs
