// csecs: figures of merit for coherent-superposition-operated entangled
// coherent states, from closed forms or a truncated Fock-space oracle.

#include <csecs/entanglement.hpp>
#include <csecs/errors.hpp>
#include <csecs/sweep.hpp>
#include <csecs/verify.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kFailure = 1, kInvalid = 2, kVerifyFailed = 3, kDegenerate = 4 };

struct StateFlags {
    double alpha_re = 1.0;
    double alpha_im = 0.0;
    int m = 1;
    int n = 1;
    double r_a = 0.0;
    std::optional<double> r_b;
    std::string parity = "even";
    bool oracle_check = false;
    std::optional<int> n_max;

    void attach(CLI::App* app) {
        app->add_option("--alpha-re", alpha_re, "Real part of alpha")->capture_default_str();
        app->add_option("--alpha-im", alpha_im, "Imaginary part of alpha")->capture_default_str();
        app->add_option("--m", m, "Operation order on mode a")->check(CLI::NonNegativeNumber)->capture_default_str();
        app->add_option("--n", n, "Operation order on mode b")->check(CLI::NonNegativeNumber)->capture_default_str();
        app->add_option("--r-a", r_a, "Creation weight r on mode a (t = sqrt(1 - r^2))")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        app->add_option("--r-b", r_b, "Creation weight r on mode b (defaults to --r-a)")->check(CLI::Range(0.0, 1.0));
        app->add_option("--parity", parity, "even or odd")->check(CLI::IsMember({"even", "odd"}))->capture_default_str();
        app->add_flag("--oracle-check", oracle_check, "Compare against the Fock-space oracle");
        app->add_option("--n-max", n_max, "Fock cutoff for the oracle")->check(CLI::Range(4, 100000));
    }

    csecs::CsEcsParams params() const {
        return csecs::CsEcsParams::with_r({alpha_re, alpha_im}, m, n, r_a, r_b.value_or(r_a),
                                          csecs::parse_parity(parity));
    }
};

struct OutputFlags {
    std::string out;
    std::string format = "csv";

    void attach(CLI::App* app) {
        app->add_option("--out", out, "Write to this file instead of stdout");
        app->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    }

    void write(const std::string& text) const {
        if (out.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream file(out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open " + out + " for writing");
        file << text;
        if (!file) throw std::runtime_error("failed writing " + out);
    }

    void write(const csecs::ResultTable& table) const {
        write(format == "json" ? table.to_json() + "\n" : table.to_csv());
    }
};

csecs::SweepSpec build_spec(const StateFlags& state, const OutputFlags& out, const std::string& quantity,
                            const std::vector<std::string>& grids) {
    csecs::SweepSpec spec;
    spec.quantity = csecs::parse_quantity(quantity);
    spec.base = state.params();
    spec.oracle_check = state.oracle_check;
    spec.n_max = state.n_max;
    spec.output_path = out.out;
    for (const auto& g : grids) {
        const auto eq = g.find('=');
        if (eq == std::string::npos) throw csecs::InvalidSpec("grid must be name=start:stop:count, got '" + g + "'");
        const auto name = g.substr(0, eq);
        const auto axis = csecs::GridAxis::parse(std::string_view(g).substr(eq + 1));
        if (name == "alpha_re" || name == "alpha-re") spec.alpha_re = axis;
        else if (name == "alpha_im" || name == "alpha-im") spec.alpha_im = axis;
        else if (name == "r") spec.r = axis;
        else if (name == "t") spec.t = axis;
        else throw csecs::InvalidSpec("unknown grid axis '" + name + "'");
    }
    return spec;
}

csecs::ResultTable threshold_table() {
    csecs::ResultTable table;
    table.header = {"curve", "t", "alpha_star", "residual"};
    const double a = csecs::sv_threshold();
    const double x = a * a;
    table.rows.push_back({std::string("EECS"), std::monostate{}, a, 2.0 * x * (std::tanh(2.0 * x) + 1.0) - 1.0});
    for (double t : {0.0, 0.2, 0.6, 0.9}) {
        const double c = csecs::sv_crossing(t);
        const auto p = csecs::CsEcsParams::symmetric(c, 1, 1, std::sqrt(1.0 - t * t));
        table.rows.push_back({std::string("m=n=1"), t, c, csecs::sv_statistic(p).s_plus});
    }
    table.validate();
    return table;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement and teleportation figures of merit for CS-operated entangled coherent states"};
    app.require_subcommand(1);

    StateFlags point_state;
    OutputFlags point_out;
    auto* point = app.add_subcommand("point", "All figures of merit at one parameter point");
    point_state.attach(point);
    point_out.attach(point);

    StateFlags sweep_state;
    OutputFlags sweep_out;
    std::string quantity = "concurrence";
    std::vector<std::string> grids;
    auto* sweep = app.add_subcommand("sweep", "One quantity over a Cartesian parameter grid");
    sweep_state.attach(sweep);
    sweep_out.attach(sweep);
    sweep->add_option("--quantity", quantity, "sv, concurrence, fidelity or normalization")->capture_default_str();
    sweep->add_option("--grid", grids, "Swept axis as name=start:stop:count (alpha_re, alpha_im, r, t)");

    std::string figure_name;
    OutputFlags figure_out;
    auto* figure = app.add_subcommand("figure", "Pre-configured table for Fig1..Fig7");
    figure->add_option("figure", figure_name, "Fig1..Fig7")->required();
    figure_out.attach(figure);

    OutputFlags threshold_out;
    auto* threshold = app.add_subcommand("threshold", "Amplitudes where S+ first turns negative");
    threshold_out.attach(threshold);

    double tolerance = 1e-6;
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "Closed forms against the Fock-space oracle on the standard grid");
    verify->add_option("--tolerance", tolerance, "Relative tolerance")->capture_default_str();
    verify->add_option("--out", verify_out, "Also write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*point) {
            point_out.write(csecs::run_point(point_state.params(), point_state.oracle_check, point_state.n_max));
        } else if (*sweep) {
            const auto spec = build_spec(sweep_state, sweep_out, quantity, grids);
            const auto table = csecs::run_sweep(spec);
            OutputFlags{spec.output_path, sweep_out.format}.write(table);
        } else if (*figure) {
            figure_out.write(csecs::run_figure(csecs::parse_figure(figure_name)));
        } else if (*threshold) {
            threshold_out.write(threshold_table());
        } else if (*verify) {
            const auto report = csecs::verify(tolerance);
            std::ostringstream text;
            text << report.summary() << (report.passed() ? "verify: PASS" : "verify: FAIL")
                 << " tolerance=" << tolerance << " seconds=" << report.seconds << '\n';
            std::cout << text.str();
            if (!verify_out.empty()) OutputFlags{verify_out, "csv"}.write(text.str());
            return report.passed() ? kOk : kVerifyFailed;
        }
    } catch (const csecs::InvalidParams& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const csecs::InvalidSpec& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const csecs::DegenerateState& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kOk;
}
