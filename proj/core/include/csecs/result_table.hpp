#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace csecs {

/// Empty cells carry std::monostate (blank in CSV, null in JSON).
using Cell = std::variant<std::monostate, double, long long, std::string>;

struct ResultTable {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    /// Index of a named column; throws std::out_of_range when missing.
    std::size_t column(std::string_view name) const;
    /// Numeric value of a cell (double or integer); throws on empty/text cells.
    double number(std::size_t row, std::string_view name) const;
    const std::string& text(std::size_t row, std::string_view name) const;
    bool is_empty(std::size_t row, std::string_view name) const;

    /// Throws InvalidSpec unless every row has header.size() cells and every
    /// numeric cell is finite.
    void validate() const;

    /// Header line plus one line per row, '\n' terminated. Doubles use the
    /// shortest representation that round-trips.
    std::string to_csv() const;
    /// {"header": [...], "rows": [[...], ...]}
    std::string to_json() const;
};

/// Shortest round-trip decimal (at most 17 significant digits).
std::string format_double(double value);

}  // namespace csecs
