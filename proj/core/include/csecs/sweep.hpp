#pragma once

#include "csecs/result_table.hpp"
#include "csecs/state.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace csecs {

enum class Quantity { SvStatistic, Concurrence, Fidelity, Normalization };

Quantity parse_quantity(std::string_view text);
std::string_view to_string(Quantity q);

/// `count` evenly spaced values from start to stop inclusive.
struct GridAxis {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    std::vector<double> values() const;
    /// Parses "start:stop:count" or a single value.
    static GridAxis parse(std::string_view text);
};

struct SweepSpec {
    Quantity quantity = Quantity::Concurrence;
    /// Values for every parameter that is not swept.
    CsEcsParams base;
    std::optional<GridAxis> alpha_re;
    std::optional<GridAxis> alpha_im;
    /// Swept r applies to both modes; t = sqrt(1 - r²). Exclusive with `t`.
    std::optional<GridAxis> r;
    std::optional<GridAxis> t;
    /// Adds an oracle_delta column, |closed − brute-force|.
    bool oracle_check = false;
    /// Fock cutoff for oracle work; unset means TruncationConfig::for_amplitude.
    std::optional<int> n_max;
    /// Destination used by the command-line tool; empty means stdout.
    std::string output_path;

    /// Throws InvalidSpec.
    void validate() const;
    std::size_t row_count() const;
};

/// Cartesian grid in the order alpha_re (outermost), alpha_im, then r or t.
/// Errors at a grid point are recorded in the `error` column of that row; the
/// row itself is kept.
ResultTable run_sweep(const SweepSpec& spec);

/// Every figure of merit at one parameter point, as a single-row table.
ResultTable run_point(const CsEcsParams& params, bool oracle_check, std::optional<int> n_max = {});

enum class FigureId { Fig1, Fig2, Fig3, Fig4, Fig5, Fig6, Fig7 };

FigureId parse_figure(std::string_view text);
std::string_view to_string(FigureId id);

/// Pre-configured tables for the seven published figures:
///   Fig1  S₊ vs α for t in {0, 0.2, 0.6, 0.9} plus the bare EECS
///   Fig2  concurrence over α × r for m = n in {1, 2}
///   Fig3  concurrence vs α at r = 1/√2, symmetric and asymmetric (m, n)
///   Fig4  concurrence comparison of photon-added and CS-operated states
///   Fig5  F₀,₀ over α = q + ip
///   Fig6  F₁,₁ and F₁,₁ − F₀,₀ over α × r
///   Fig7  F_{m,n} vs α at r = 0.195, symmetric and asymmetric
ResultTable run_figure(FigureId id);

}  // namespace csecs
