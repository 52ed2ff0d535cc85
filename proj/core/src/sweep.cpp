#include "csecs/sweep.hpp"

#include "csecs/entanglement.hpp"
#include "csecs/errors.hpp"
#include "csecs/fock_oracle.hpp"
#include "csecs/teleportation.hpp"
#include "parallel.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

namespace csecs {

namespace {

double parse_number(std::string_view text) {
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value))
        throw InvalidSpec("not a number: '" + std::string(text) + "'");
    return value;
}

int parse_count(std::string_view text) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw InvalidSpec("not an integer: '" + std::string(text) + "'");
    return value;
}

std::string error_text(const std::exception& e) {
    if (const auto* err = dynamic_cast<const Error*>(&e)) return std::string(err->kind()) + ": " + e.what();
    return e.what();
}

TruncationConfig oracle_config(cplx alpha, std::optional<int> n_max) {
    if (!n_max) return TruncationConfig::for_amplitude(alpha);
    TruncationConfig cfg;
    cfg.n_max = *n_max;
    cfg.validate();
    return cfg;
}

std::vector<std::string> input_header() {
    return {"alpha_re", "alpha_im", "m", "n", "t_a", "r_a", "t_b", "r_b", "parity"};
}

void push_inputs(std::vector<Cell>& row, const CsEcsParams& p) {
    row.emplace_back(p.alpha.real());
    row.emplace_back(p.alpha.imag());
    row.emplace_back(static_cast<long long>(p.m));
    row.emplace_back(static_cast<long long>(p.n));
    row.emplace_back(p.t_a);
    row.emplace_back(p.r_a);
    row.emplace_back(p.t_b);
    row.emplace_back(p.r_b);
    row.emplace_back(std::string(to_string(p.parity)));
}

std::vector<std::string> quantity_header(Quantity q) {
    switch (q) {
        case Quantity::SvStatistic: return {"s_plus", "n_a", "n_b", "ab_re", "ab_im"};
        case Quantity::Concurrence: return {"c", "p1", "p2"};
        case Quantity::Fidelity: return {"f"};
        case Quantity::Normalization: return {"inv_square", "n_factor"};
    }
    return {};
}

// Closed-form cells and the scalar that the oracle check compares against.
struct Evaluated {
    std::vector<Cell> cells;
    double headline = 0.0;
};

Evaluated evaluate(Quantity q, const CsEcsParams& p) {
    switch (q) {
        case Quantity::SvStatistic: {
            const auto sv = sv_statistic(p);
            return {{sv.s_plus, sv.n_a, sv.n_b, sv.ab.real(), sv.ab.imag()}, sv.s_plus};
        }
        case Quantity::Concurrence: {
            const auto c = concurrence_closed(p);
            return {{c.c, c.p1, c.p2}, c.c};
        }
        case Quantity::Fidelity: {
            const auto f = fidelity_closed(p);
            return {{f.f}, f.f};
        }
        case Quantity::Normalization: {
            const auto nr = normalization(p);
            return {{nr.inv_square, nr.n_factor}, nr.inv_square};
        }
    }
    return {};
}

double evaluate_oracle(Quantity q, const CsEcsParams& p, const TruncationConfig& cfg) {
    switch (q) {
        case Quantity::SvStatistic: return sv_statistic_oracle(p, cfg).s_plus;
        case Quantity::Concurrence: return concurrence_oracle(build_cs_eecs(p, cfg));
        case Quantity::Fidelity: return fidelity_by_quadrature(build_cs_eecs(p, cfg));
        case Quantity::Normalization: return build_cs_eecs(p, cfg).pre_norm_squared;
    }
    return 0.0;
}

CsEcsParams with_t(CsEcsParams p, double t) {
    const double r = std::sqrt(std::max(0.0, 1.0 - t * t));
    p.t_a = p.t_b = t;
    p.r_a = p.r_b = r;
    return p;
}

CsEcsParams with_r(CsEcsParams p, double r) {
    const double t = std::sqrt(std::max(0.0, 1.0 - r * r));
    p.t_a = p.t_b = t;
    p.r_a = p.r_b = r;
    return p;
}

std::vector<double> linspace(double start, double stop, int count) {
    return GridAxis{start, stop, count}.values();
}

// Fills rows[i] = make(i) for every i, in grid order.
ResultTable tabulate(std::vector<std::string> header, std::size_t count,
                     const std::function<std::vector<Cell>(std::size_t)>& make) {
    ResultTable table;
    table.header = std::move(header);
    table.rows.resize(count);
    detail::parallel_for(count, [&](std::size_t i) { table.rows[i] = make(i); });
    table.validate();
    return table;
}

struct Curve {
    std::string label;
    CsEcsParams params;
};

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

ResultTable curves_vs_alpha(const std::vector<Curve>& curves, const std::vector<double>& alphas,
                            const std::string& value_name,
                            const std::function<double(const CsEcsParams&)>& value) {
    const std::size_t per = alphas.size();
    return tabulate({"curve", "alpha", "m", "n", "r_a", "r_b", value_name}, curves.size() * per,
                    [&](std::size_t i) {
                        const auto& curve = curves[i / per];
                        CsEcsParams p = curve.params;
                        p.alpha = alphas[i % per];
                        return std::vector<Cell>{curve.label,
                                                 alphas[i % per],
                                                 static_cast<long long>(p.m),
                                                 static_cast<long long>(p.n),
                                                 p.r_a,
                                                 p.r_b,
                                                 value(p)};
                    });
}

double concurrence_of(const CsEcsParams& p) { return concurrence_closed(p).c; }
double fidelity_of(const CsEcsParams& p) { return fidelity_closed(p).f; }

ResultTable figure1() {
    const auto alphas = linspace(0.01, 1.5, 150);
    std::vector<Curve> curves{{"EECS", CsEcsParams{}}};
    for (double t : {0.0, 0.2, 0.6, 0.9}) {
        std::ostringstream label;
        label << "t=" << t;
        CsEcsParams p;
        p.m = p.n = 1;
        curves.push_back({label.str(), with_t(p, t)});
    }
    return curves_vs_alpha(curves, alphas, "s_plus", [](const CsEcsParams& p) {
        if (p.m == 0 && p.n == 0) return eecs_sv(p.alpha);
        return sv_statistic(p).s_plus;
    });
}

ResultTable figure2() {
    const auto alphas = linspace(0.05, 2.0, 40);
    const auto rs = linspace(0.0, 1.0, 21);
    const std::vector<int> orders{1, 2};
    const std::size_t plane = alphas.size() * rs.size();
    return tabulate({"m", "n", "alpha", "r", "c"}, orders.size() * plane, [&](std::size_t i) {
        const int k = orders[i / plane];
        const double alpha = alphas[(i % plane) / rs.size()];
        const double r = rs[i % rs.size()];
        const auto p = CsEcsParams::symmetric(alpha, k, k, r);
        return std::vector<Cell>{static_cast<long long>(k), static_cast<long long>(k), alpha, r,
                                 concurrence_of(p)};
    });
}

ResultTable figure3() {
    const auto alphas = linspace(0.01, 2.0, 200);
    std::vector<Curve> curves;
    const std::vector<std::pair<int, int>> orders{{1, 1}, {2, 2}, {3, 3}, {1, 2}, {1, 3}, {1, 4}};
    for (auto [m, n] : orders) {
        std::ostringstream label;
        label << (m == n ? "symmetric" : "asymmetric") << " m=" << m << " n=" << n;
        curves.push_back({label.str(), CsEcsParams::symmetric(0.0, m, n, kInvSqrt2)});
    }
    return curves_vs_alpha(curves, alphas, "c", concurrence_of);
}

ResultTable figure4() {
    const auto alphas = linspace(0.01, 2.0, 200);
    const std::vector<Curve> curves{
        {"ECSs |Psi+(alpha,0,0)>", CsEcsParams{}},
        {"single-photon excited ECSs a+|Psi+(alpha,0,0)>", CsEcsParams::with_r(0.0, 1, 0, 1.0, 0.0)},
        {"single-mode CS-ECSs |Psi+(alpha,1,0)> r=1/sqrt(2)",
         CsEcsParams::with_r(0.0, 1, 0, kInvSqrt2, 0.0)},
        {"single-mode CS-ECSs |Psi+(alpha,1,0)> r=0.6", CsEcsParams::with_r(0.0, 1, 0, 0.6, 0.0)},
        {"two-mode excited CESs a+b+|Psi+(alpha,0,0)>", CsEcsParams::symmetric(0.0, 1, 1, 1.0)},
        {"two-mode CS-CESs |Psi+(alpha,1,1)> r=1/sqrt(2)", CsEcsParams::symmetric(0.0, 1, 1, kInvSqrt2)},
        {"two-mode CS-CESs |Psi+(alpha,1,1)> r=0.4", CsEcsParams::symmetric(0.0, 1, 1, 0.4)},
    };
    return curves_vs_alpha(curves, alphas, "c", concurrence_of);
}

ResultTable figure5() {
    const auto axis = linspace(-2.5, 2.5, 51);
    const std::size_t side = axis.size();
    return tabulate({"q", "p", "f00"}, side * side, [&](std::size_t i) {
        const double q = axis[i / side];
        const double p = axis[i % side];
        return std::vector<Cell>{q, p, fidelity_eecs({q, p})};
    });
}

ResultTable figure6() {
    const auto alphas = linspace(0.1, 2.5, 25);
    const auto rs = linspace(0.0, 0.9, 19);
    return tabulate({"alpha", "r", "f11", "f00", "diff"}, alphas.size() * rs.size(), [&](std::size_t i) {
        const double alpha = alphas[i / rs.size()];
        const double r = rs[i % rs.size()];
        const double f11 = fidelity_of(CsEcsParams::symmetric(alpha, 1, 1, r));
        const double f00 = fidelity_eecs(alpha);
        return std::vector<Cell>{alpha, r, f11, f00, f11 - f00};
    });
}

ResultTable figure7() {
    const auto alphas = linspace(0.01, 2.0, 200);
    std::vector<Curve> curves;
    const std::vector<std::pair<int, int>> orders{{1, 1}, {2, 2}, {3, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (auto [m, n] : orders) {
        std::ostringstream label;
        label << (m == n ? "symmetric" : "asymmetric") << " m=" << m << " n=" << n;
        curves.push_back({label.str(), CsEcsParams::symmetric(0.0, m, n, 0.195)});
    }
    return curves_vs_alpha(curves, alphas, "f", fidelity_of);
}

}  // namespace

Quantity parse_quantity(std::string_view text) {
    if (text == "sv" || text == "SvStatistic") return Quantity::SvStatistic;
    if (text == "concurrence" || text == "Concurrence") return Quantity::Concurrence;
    if (text == "fidelity" || text == "Fidelity") return Quantity::Fidelity;
    if (text == "normalization" || text == "Normalization") return Quantity::Normalization;
    throw InvalidSpec("unknown quantity '" + std::string(text) + "'");
}

std::string_view to_string(Quantity q) {
    switch (q) {
        case Quantity::SvStatistic: return "SvStatistic";
        case Quantity::Concurrence: return "Concurrence";
        case Quantity::Fidelity: return "Fidelity";
        case Quantity::Normalization: return "Normalization";
    }
    return "";
}

std::vector<double> GridAxis::values() const {
    std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)));
    if (count == 1) {
        out[0] = start;
        return out;
    }
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) out[i] = start + step * i;
    if (count > 1) out.back() = stop;
    return out;
}

GridAxis GridAxis::parse(std::string_view text) {
    const auto first = text.find(':');
    if (first == std::string_view::npos) {
        const double v = parse_number(text);
        return {v, v, 1};
    }
    const auto second = text.find(':', first + 1);
    if (second == std::string_view::npos)
        throw InvalidSpec("grid axis must be start:stop:count, got '" + std::string(text) + "'");
    return {parse_number(text.substr(0, first)), parse_number(text.substr(first + 1, second - first - 1)),
            parse_count(text.substr(second + 1))};
}

void SweepSpec::validate() const {
    auto check_axis = [](const std::optional<GridAxis>& axis, const char* name, double lo, double hi) {
        if (!axis) return;
        const std::string label(name);
        if (axis->count < 1) throw InvalidSpec(label + " grid count must be at least 1");
        if (!std::isfinite(axis->start) || !std::isfinite(axis->stop))
            throw InvalidSpec(label + " grid bounds must be finite");
        if (axis->start > axis->stop) throw InvalidSpec(label + " grid needs start <= stop");
        if (axis->start < lo || axis->stop > hi)
            throw InvalidSpec(label + " grid must stay inside [" + format_double(lo) + ", " +
                              format_double(hi) + "]");
    };
    const double inf = std::numeric_limits<double>::infinity();
    check_axis(alpha_re, "alpha_re", -inf, inf);
    check_axis(alpha_im, "alpha_im", -inf, inf);
    check_axis(r, "r", 0.0, 1.0);
    check_axis(t, "t", 0.0, 1.0);
    if (r && t) throw InvalidSpec("r and t grids are mutually exclusive");
    if (base.m < 0 || base.n < 0) throw InvalidSpec("operation orders must be non-negative");
    if (n_max && *n_max < 4) throw InvalidSpec("n_max must be at least 4");
    if (!r && !t) {
        try {
            base.validate();
        } catch (const InvalidParams& e) {
            throw InvalidSpec(e.what());
        }
    }
}

std::size_t SweepSpec::row_count() const {
    std::size_t rows = 1;
    for (const auto* axis : {&alpha_re, &alpha_im, &r, &t})
        if (*axis) rows *= static_cast<std::size_t>(std::max((*axis)->count, 0));
    return rows;
}

ResultTable run_sweep(const SweepSpec& spec) {
    spec.validate();
    const auto one = [](const std::optional<GridAxis>& axis, double fallback) {
        return axis ? axis->values() : std::vector<double>{fallback};
    };
    const auto re = one(spec.alpha_re, spec.base.alpha.real());
    const auto im = one(spec.alpha_im, spec.base.alpha.imag());
    const auto& coupling_axis = spec.r ? spec.r : spec.t;
    const auto coupling = one(coupling_axis, 0.0);
    const bool swept_coupling = coupling_axis.has_value();

    auto header = input_header();
    for (auto& name : quantity_header(spec.quantity)) header.push_back(std::move(name));
    if (spec.oracle_check) header.emplace_back("oracle_delta");
    header.emplace_back("error");
    const std::size_t input_cells = input_header().size();
    const std::size_t value_cells = quantity_header(spec.quantity).size() + (spec.oracle_check ? 1 : 0);

    const std::size_t count = re.size() * im.size() * coupling.size();
    return tabulate(std::move(header), count, [&](std::size_t i) {
        CsEcsParams p = spec.base;
        p.alpha = {re[i / (im.size() * coupling.size())], im[(i / coupling.size()) % im.size()]};
        if (swept_coupling) {
            const double v = coupling[i % coupling.size()];
            p = spec.r ? with_r(p, v) : with_t(p, v);
        }
        std::vector<Cell> row;
        push_inputs(row, p);
        try {
            auto result = evaluate(spec.quantity, p);
            for (auto& cell : result.cells) row.push_back(std::move(cell));
            if (spec.oracle_check) {
                const double oracle = evaluate_oracle(spec.quantity, p, oracle_config(p.alpha, spec.n_max));
                row.emplace_back(std::abs(result.headline - oracle));
            }
            row.emplace_back(std::monostate{});
        } catch (const std::exception& e) {
            row.resize(input_cells);
            row.resize(input_cells + value_cells);
            row.emplace_back(error_text(e));
        }
        return row;
    });
}

ResultTable run_point(const CsEcsParams& params, bool oracle_check, std::optional<int> n_max) {
    params.validate();
    ResultTable table;
    table.header = input_header();
    std::vector<Cell> row;
    push_inputs(row, params);
    std::vector<std::string> errors;

    for (Quantity q : {Quantity::Normalization, Quantity::Concurrence, Quantity::SvStatistic, Quantity::Fidelity}) {
        const auto names = quantity_header(q);
        for (const auto& name : names) table.header.push_back(name);
        if (oracle_check) table.header.push_back(names.front() + "_oracle_delta");
        const std::size_t width = names.size() + (oracle_check ? 1 : 0);
        const std::size_t mark = row.size();
        try {
            auto result = evaluate(q, params);
            for (auto& cell : result.cells) row.push_back(std::move(cell));
            if (oracle_check) {
                const double oracle = evaluate_oracle(q, params, oracle_config(params.alpha, n_max));
                row.emplace_back(std::abs(result.headline - oracle));
            }
        } catch (const std::exception& e) {
            // A degenerate state makes every later quantity meaningless as well.
            if (dynamic_cast<const DegenerateState*>(&e)) throw;
            row.resize(mark);
            row.resize(mark + width);
            errors.push_back(std::string(to_string(q)) + " " + error_text(e));
        }
    }
    table.header.emplace_back("error");
    if (errors.empty()) {
        row.emplace_back(std::monostate{});
    } else {
        std::string joined;
        for (const auto& e : errors) joined += (joined.empty() ? "" : "; ") + e;
        row.emplace_back(joined);
    }
    table.rows.push_back(std::move(row));
    table.validate();
    return table;
}

FigureId parse_figure(std::string_view text) {
    static constexpr std::string_view names[] = {"Fig1", "Fig2", "Fig3", "Fig4", "Fig5", "Fig6", "Fig7"};
    for (int i = 0; i < 7; ++i) {
        if (text == names[i]) return static_cast<FigureId>(i);
        // Accept "fig3" and "3" as well.
        if (text.size() == 4 && (text[0] == 'f' || text[0] == 'F') && text.substr(1, 2) == "ig" &&
            text[3] == names[i][3])
            return static_cast<FigureId>(i);
        if (text.size() == 1 && text[0] == names[i][3]) return static_cast<FigureId>(i);
    }
    throw InvalidSpec("unknown figure '" + std::string(text) + "', expected Fig1..Fig7");
}

std::string_view to_string(FigureId id) {
    static constexpr std::string_view names[] = {"Fig1", "Fig2", "Fig3", "Fig4", "Fig5", "Fig6", "Fig7"};
    return names[static_cast<int>(id)];
}

ResultTable run_figure(FigureId id) {
    switch (id) {
        case FigureId::Fig1: return figure1();
        case FigureId::Fig2: return figure2();
        case FigureId::Fig3: return figure3();
        case FigureId::Fig4: return figure4();
        case FigureId::Fig5: return figure5();
        case FigureId::Fig6: return figure6();
        case FigureId::Fig7: return figure7();
    }
    throw InvalidSpec("unknown figure");
}

}  // namespace csecs
