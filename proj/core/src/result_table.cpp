#include "csecs/result_table.hpp"

#include "csecs/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace csecs {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    if (res.ec != std::errc{}) throw std::runtime_error("format_double: to_chars failed");
    return std::string(buf, res.ptr);
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

struct CsvCell {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
};

struct JsonCell {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(double v) const { return v; }
    nlohmann::json operator()(long long v) const { return v; }
    nlohmann::json operator()(const std::string& s) const { return s; }
};

}  // namespace

std::size_t ResultTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw std::out_of_range("no column named '" + std::string(name) + "'");
}

double ResultTable::number(std::size_t row, std::string_view name) const {
    const Cell& cell = rows.at(row).at(column(name));
    if (const auto* d = std::get_if<double>(&cell)) return *d;
    if (const auto* i = std::get_if<long long>(&cell)) return static_cast<double>(*i);
    throw std::out_of_range("cell '" + std::string(name) + "' in row " + std::to_string(row) +
                            " is not numeric");
}

const std::string& ResultTable::text(std::size_t row, std::string_view name) const {
    return std::get<std::string>(rows.at(row).at(column(name)));
}

bool ResultTable::is_empty(std::size_t row, std::string_view name) const {
    return std::holds_alternative<std::monostate>(rows.at(row).at(column(name)));
}

void ResultTable::validate() const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != header.size()) {
            throw InvalidSpec("result row " + std::to_string(r) + " has " +
                              std::to_string(rows[r].size()) + " cells, header has " +
                              std::to_string(header.size()));
        }
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (const auto* d = std::get_if<double>(&rows[r][c]); d && !std::isfinite(*d)) {
                throw InvalidSpec("non-finite value in row " + std::to_string(r) + ", column " +
                                  header[c]);
            }
        }
    }
}

std::string ResultTable::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(header[i]);
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += std::visit(CsvCell{}, row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string ResultTable::to_json() const {
    nlohmann::json doc;
    doc["header"] = header;
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& cell : row) r.push_back(std::visit(JsonCell{}, cell));
        rows_json.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows_json);
    return doc.dump() + "\n";
}

}  // namespace csecs
