#include "edreg/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "edreg/errors.hpp"

namespace edreg {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string strip(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_cell(const std::string& raw, std::size_t line_no, std::size_t col,
                  const std::string& col_name) {
    const std::string cell = strip(raw);
    const auto where = [&] {
        return "row " + std::to_string(line_no) + ", column " + std::to_string(col + 1) +
               " ('" + col_name + "')";
    };
    if (cell.empty()) throw ParseError("csv: blank cell at " + where());
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("csv: non-numeric cell '" + cell + "' at " + where());
    }
    return value;
}

}  // namespace

DataSet load_csv(const std::string& path, const std::string& response_column) {
    std::ifstream in(path);
    if (!in) throw ParseError("csv: cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw ParseError("csv: '" + path + "' is empty (header row required)");
    // Tolerate a UTF-8 byte-order mark on the first line.
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);

    std::vector<std::string> header = split_line(line);
    for (auto& name : header) name = strip(name);
    std::ptrdiff_t response_idx = -1;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (header[j] == response_column) response_idx = static_cast<std::ptrdiff_t>(j);
    }
    if (response_idx < 0) {
        std::string available;
        for (const auto& name : header) available += (available.empty() ? "" : ", ") + name;
        throw ParseError("csv: response column '" + response_column + "' not found in '" + path +
                         "' (columns: " + available + ")");
    }
    const std::size_t ncol = header.size();
    if (ncol < 2) throw ParseError("csv: need at least one predictor column besides '" + response_column + "'");

    std::vector<std::vector<double>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty()) continue;  // ignore trailing blank lines
        const std::vector<std::string> cells = split_line(line);
        if (cells.size() != ncol) {
            throw ParseError("csv: row " + std::to_string(line_no) + " has " +
                             std::to_string(cells.size()) + " cells, expected " + std::to_string(ncol));
        }
        std::vector<double> parsed(ncol);
        for (std::size_t j = 0; j < ncol; ++j) parsed[j] = parse_cell(cells[j], line_no, j, header[j]);
        rows.push_back(std::move(parsed));
    }
    if (rows.empty()) throw ParseError("csv: '" + path + "' has a header but no data rows");

    DataSet data;
    const std::size_t n = rows.size();
    const std::size_t p = ncol - 1;
    data.X.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
    data.Y.resize(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < ncol; ++j) {
        if (static_cast<std::ptrdiff_t>(j) != response_idx) data.names.push_back(header[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t xj = 0;
        for (std::size_t j = 0; j < ncol; ++j) {
            if (static_cast<std::ptrdiff_t>(j) == response_idx) {
                data.Y(static_cast<Eigen::Index>(i)) = rows[i][j];
            } else {
                data.X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(xj++)) = rows[i][j];
            }
        }
    }
    data.validate();
    return data;
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void save_csv(const DataSet& data, const std::string& path, const std::string& response_column) {
    std::ofstream out(path);
    if (!out) throw ParseError("csv: cannot write '" + path + "'");
    const Eigen::Index p = data.p();
    for (Eigen::Index j = 0; j < p; ++j) {
        const std::string name =
            data.names.empty() ? "x" + std::to_string(j + 1) : data.names[static_cast<std::size_t>(j)];
        out << name << ',';
    }
    out << response_column << '\n';
    for (Eigen::Index i = 0; i < data.n(); ++i) {
        for (Eigen::Index j = 0; j < p; ++j) out << format_double(data.X(i, j)) << ',';
        out << format_double(data.Y(i)) << '\n';
    }
}

void save_vector_csv(const Eigen::VectorXd& v, const std::string& path,
                     const std::string& column_name) {
    std::ofstream out(path);
    if (!out) throw ParseError("csv: cannot write '" + path + "'");
    out << column_name << '\n';
    for (Eigen::Index i = 0; i < v.size(); ++i) out << format_double(v(i)) << '\n';
}

}  // namespace edreg
