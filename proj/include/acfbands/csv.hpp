#ifndef ACFBANDS_CSV_HPP
#define ACFBANDS_CSV_HPP

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "acfbands/errors.hpp"

namespace acfbands {

class CsvError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

inline bool parse_double(std::string_view s, double& out) {
    s = trim(s);
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    cells.push_back(cur);
    return cells;
}

} // namespace detail

/// Comma-separated table with an optional header row, auto-detected by a
/// non-numeric first row.
struct CsvTable {
    bool has_header = false;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Resolve a column selector: a header name, or a 0-based index.
    int resolve_column(const std::string& selector) const {
        if (has_header) {
            for (std::size_t i = 0; i < header.size(); ++i) {
                if (header[i] == selector) return static_cast<int>(i);
            }
        }
        int idx = -1;
        if (double d = 0.0; detail::parse_double(selector, d) && d == std::floor(d) && d >= 0.0) {
            idx = static_cast<int>(d);
        }
        if (idx < 0) {
            throw CsvError("column '" + selector + "' not found" +
                           (has_header ? " in header" : " (no header row; use a 0-based index)"));
        }
        const std::size_t ncols = rows.empty() ? header.size() : rows.front().size();
        if (static_cast<std::size_t>(idx) >= ncols) {
            throw CsvError("column index " + std::to_string(idx) + " out of range (file has " +
                           std::to_string(ncols) + " columns)");
        }
        return idx;
    }

    std::string column_label(int idx) const {
        if (has_header && static_cast<std::size_t>(idx) < header.size()) return header[static_cast<std::size_t>(idx)];
        return std::to_string(idx);
    }

    /// Extract a numeric column. Unparseable or non-finite values in the
    /// selected column are hard errors naming row and column.
    std::vector<double> numeric_column(const std::string& selector) const {
        const int idx = resolve_column(selector);
        std::vector<double> out;
        out.reserve(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto& row = rows[r];
            if (static_cast<std::size_t>(idx) >= row.size()) {
                throw CsvError("data row " + std::to_string(r + 1) + " has no column " +
                               column_label(idx));
            }
            double v = 0.0;
            if (!detail::parse_double(row[static_cast<std::size_t>(idx)], v)) {
                throw CsvError("unparseable value '" + row[static_cast<std::size_t>(idx)] +
                               "' at data row " + std::to_string(r + 1) + ", column " +
                               column_label(idx));
            }
            if (!std::isfinite(v)) {
                throw CsvError("non-finite value at data row " + std::to_string(r + 1) +
                               ", column " + column_label(idx));
            }
            out.push_back(v);
        }
        if (out.size() < 2) {
            throw CsvError("need at least 2 values in column " + column_label(idx) + ", got " +
                           std::to_string(out.size()));
        }
        return out;
    }
};

inline CsvTable parse_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::trim(line).empty()) continue;
        auto cells = detail::split_csv_line(line);
        for (auto& c : cells) c = std::string(detail::trim(c));
        if (first) {
            first = false;
            bool numeric = true;
            for (const auto& c : cells) {
                if (double d = 0.0; !detail::parse_double(c, d)) {
                    numeric = false;
                    break;
                }
            }
            if (!numeric) {
                table.has_header = true;
                table.header = std::move(cells);
                continue;
            }
        }
        table.rows.push_back(std::move(cells));
    }
    if (table.rows.empty()) throw CsvError("no data rows");
    return table;
}

inline CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CsvError("cannot open file: " + path);
    try {
        return parse_csv(in);
    } catch (const CsvError& e) {
        throw CsvError(path + ": " + e.what());
    }
}

} // namespace acfbands

#endif
