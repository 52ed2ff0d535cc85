// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <csecs/entanglement.hpp>
#include <csecs/fock_oracle.hpp>
#include <csecs/result_table.hpp>
#include <csecs/teleportation.hpp>
#include <csecs/verify.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace csecs;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;  // <= 0: no runtime limit
    std::function<Outcome()> body;
};

std::string fmt(double v) { return format_double(v); }

struct Capture {
    int exit_code = -1;
    std::string out;
};

Capture run_cli(const std::string& args) {
    const std::string cmd = std::string(CSECS_CLI_PATH) + " " + args;
    Capture c;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return c;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), got);
    const int status = pclose(pipe);
    c.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return c;
}

TruncationConfig cutoff(int n_max) {
    TruncationConfig cfg;
    cfg.n_max = n_max;
    return cfg;
}

Outcome sv_threshold_check() {
    const auto r = run_cli("threshold");
    if (r.exit_code != 0) return {false, "threshold exited with " + std::to_string(r.exit_code)};
    // Second line: EECS,,<alpha_star>,<residual>
    std::istringstream in(r.out);
    std::string header, line;
    std::getline(in, header);
    std::getline(in, line);
    if (line.rfind("EECS,,", 0) != 0) return {false, "unexpected output: " + line};
    const auto rest = line.substr(6);
    const auto comma = rest.find(',');
    const double alpha = std::stod(rest.substr(0, comma));
    const double residual = std::stod(rest.substr(comma + 1));
    const bool ok = alpha >= 0.562 && alpha <= 0.572 && std::abs(residual) < 1e-8;
    return {ok, "alpha*=" + fmt(alpha) + " residual=" + fmt(residual)};
}

Outcome eecs_fidelity_check() {
    const double f0 = fidelity_eecs(0.0);
    const double f1 = fidelity_eecs(1.0);
    const double fi = fidelity_eecs(cplx{0.0, 1.0});
    // References from the Fock-space quadrature, independent of the closed form.
    const double ref1 = fidelity_by_quadrature(build_cs_eecs(CsEcsParams{1.0}, cutoff(40)));
    const double refi = fidelity_by_quadrature(build_cs_eecs(CsEcsParams{cplx{0.0, 1.0}}, cutoff(40)));
    const bool ok = std::abs(f0 - 0.5) < 1e-12 && std::abs(f1 - ref1) < 1e-6 && std::abs(fi - refi) < 1e-6;
    return {ok, "F(0)=" + fmt(f0) + " F(1)=" + fmt(f1) + " (oracle " + fmt(ref1) + ") F(i)=" + fmt(fi) +
                    " (oracle " + fmt(refi) + ")"};
}

Outcome fidelity_anchor_check() {
    const double f = fidelity_closed(CsEcsParams::symmetric(0.1, 1, 1, 0.05)).f;
    const double base = fidelity_eecs(0.1);
    const bool ok = std::abs(f - 0.65) <= 0.03 && f > base;
    return {ok, "F11=" + fmt(f) + " F00=" + fmt(base)};
}

Outcome equivalence_grid_check() {
    const auto report = verify(1e-6);
    std::string worst;
    double max_error = 0.0;
    for (const auto& c : report.checks)
        if (c.max_error >= max_error) {
            max_error = c.max_error;
            worst = c.name;
        }
    std::string detail = std::to_string(report.checks.size()) + " checks, max error " + fmt(max_error) + " (" + worst + ")";
    if (!report.passed()) detail += "\n" + report.summary();
    return {report.passed(), detail};
}

Outcome subtraction_parity_check() {
    double worst = 0.0;
    for (double a : {0.5, 1.0, 1.5})
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) {
                const double c = concurrence_closed(CsEcsParams::symmetric(a, m, n, 0.0)).c;
                const double expected = (m + n) % 2 == 0 ? std::tanh(2.0 * a * a) : 1.0;
                worst = std::max(worst, std::abs(c - expected));
            }
    return {worst < 1e-9, "max deviation " + fmt(worst) + " over m,n <= 3"};
}

Outcome eigenstate_check() {
    const auto s = build_cs_eecs(CsEcsParams{1.0}, cutoff(40));
    const double residual = (pair_annihilate(s) - s.coeffs).norm();
    return {residual < 1e-9, "residual " + fmt(residual)};
}

Outcome improvement_check() {
    const double r = std::numbers::sqrt2 / 2.0;
    const double cs1 = concurrence_closed(CsEcsParams::with_r(0.3, 1, 0, r, 0.0)).c;
    const double add1 = concurrence_closed(CsEcsParams::with_r(0.3, 1, 0, 1.0, 0.0)).c;
    const double cs2 = concurrence_closed(CsEcsParams::symmetric(0.3, 1, 1, r)).c;
    const double add2 = concurrence_closed(CsEcsParams::symmetric(0.3, 1, 1, 1.0)).c;
    bool ok = cs1 > add1 && cs2 > add2;
    std::string detail = "C(1,0) " + fmt(cs1) + " > " + fmt(add1) + ", C(1,1) " + fmt(cs2) + " > " + fmt(add2) + ";";
    const double bare = sv_threshold();
    for (double t : {0.2, 0.6, 0.9}) {
        const double c = sv_crossing(t);
        ok = ok && c < bare;
        detail += " t=" + fmt(t) + ":" + fmt(c);
    }
    detail += " < EECS " + fmt(bare);
    return {ok, detail};
}

Outcome odd_fidelity_check() {
    double best = -1.0;
    std::string where;
    for (int i = 1; i <= 20; ++i)
        for (int j = 0; j < 10; ++j)
            for (int k : {0, 1}) {
                const double alpha = 2.5 * i / 20.0;
                const double r = 0.1 * j;
                auto p = CsEcsParams::symmetric(alpha, k, k, r);
                p.parity = Parity::Odd;
                const double f = fidelity_closed(p).f;
                if (f > best) {
                    best = f;
                    where = "alpha=" + fmt(alpha) + " r=" + fmt(r) + " m=n=" + std::to_string(k);
                }
            }
    return {best < 0.5, "max F=" + fmt(best) + " at " + where};
}

Outcome determinism_check() {
    const auto a = run_cli("figure Fig6");
    const auto b = run_cli("figure Fig6");
    const bool ok = a.exit_code == 0 && b.exit_code == 0 && !a.out.empty() && a.out == b.out;
    return {ok, std::to_string(a.out.size()) + " bytes, " + (a.out == b.out ? "identical" : "different")};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "SV threshold", 1.0, sv_threshold_check},
        {2, "EECS fidelity curve", 1.0, eecs_fidelity_check},
        {3, "small-r fidelity anchor", 1.0, fidelity_anchor_check},
        {4, "closed-form/oracle equivalence grid", 180.0, equivalence_grid_check},
        {5, "subtraction parity rule", 1.0, subtraction_parity_check},
        {6, "pair-annihilation eigenstate", 1.0, eigenstate_check},
        {7, "improvement claims", 5.0, improvement_check},
        {8, "odd-parity fidelity below 1/2", 30.0, odd_fidelity_check},
        {9, "Fig6 determinism", 0.0, determinism_check},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.body();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.budget_seconds <= 0.0 || seconds < c.budget_seconds;
        const bool ok = out.ok && in_time;
        all = all && ok;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.3fs", seconds);
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " | " << out.detail
                  << " | " << timing;
        if (!in_time) std::cout << " exceeds " << c.budget_seconds << "s budget";
        std::cout << std::endl;
    }
    return all ? 0 : 1;
}
