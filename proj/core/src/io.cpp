#include "tdats/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "tdats/errors.hpp"

namespace tdats {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : line) {
        if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r') {
            if (!current.empty()) tokens.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

bool parse_double(const std::string& token, double& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

std::ifstream open_input(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) {
        throw ParseError("input file not found: " + path.string(), "file-not-found");
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path.string(), "file-not-found");
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path.string(), "file-not-found");
    return out;
}

}  // namespace

Table read_table(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    Table table;
    std::string line;
    std::size_t line_no = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.front() == '#') continue;
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;

        std::vector<double> row(tokens.size());
        bool numeric = true;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (!parse_double(tokens[i], row[i])) {
                numeric = false;
                break;
            }
        }
        if (!numeric) {
            if (!saw_data && table.columns.empty()) {
                table.columns = tokens;
                continue;
            }
            throw ParseError("non-numeric value at " + path.string() + ":" +
                             std::to_string(line_no));
        }
        if (!saw_data) {
            table.data.resize(row.size());
            saw_data = true;
        }
        if (row.size() != table.data.size()) {
            throw ParseError("inconsistent column count at " + path.string() + ":" +
                             std::to_string(line_no));
        }
        for (std::size_t i = 0; i < row.size(); ++i) table.data[i].push_back(row[i]);
    }
    if (!saw_data) throw ParseError("no numeric rows in " + path.string());
    if (table.columns.empty()) {
        for (std::size_t i = 0; i < table.data.size(); ++i) {
            table.columns.push_back("col" + std::to_string(i));
        }
    }
    return table;
}

TimeSeries series_from_column(const Table& table, std::size_t column) {
    if (column >= table.column_count()) {
        throw ParameterError("column " + std::to_string(column) + " out of range (table has " +
                             std::to_string(table.column_count()) + ")");
    }
    return TimeSeries(table.data[column]);
}

PointCloud read_point_cloud(const std::filesystem::path& path) {
    const Table table = read_table(path);
    std::vector<double> data;
    data.reserve(table.column_count() * table.row_count());
    for (std::size_t r = 0; r < table.row_count(); ++r) {
        for (std::size_t c = 0; c < table.column_count(); ++c) {
            data.push_back(table.data[c][r]);
        }
    }
    return PointCloud(table.column_count(), std::move(data));
}

DistanceMatrix read_distance_matrix(const std::filesystem::path& path) {
    const Table table = read_table(path);
    const std::size_t n = table.row_count();
    if (table.column_count() != n) {
        throw ParseError("distance matrix in " + path.string() + " is not square");
    }
    std::vector<double> entries(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) entries[r * n + c] = table.data[c][r];
    }
    return DistanceMatrix(n, std::move(entries), Metric::arbitrary);
}

PersistenceDiagram read_diagram(const std::filesystem::path& path) {
    const Table table = read_table(path);
    if (table.column_count() != 3) {
        throw ParseError("diagram in " + path.string() + " must have 3 columns");
    }
    PersistenceDiagram diagram;
    double maxscale = 0.0;
    for (std::size_t r = 0; r < table.row_count(); ++r) {
        const double dim = table.data[0][r];
        const double birth = table.data[1][r];
        const double death = table.data[2][r];
        if (dim != 0.0 && dim != 1.0) {
            throw ParseError("diagram dimension must be 0 or 1 in " + path.string());
        }
        if (death < birth) {
            throw ParseError("diagram death < birth in " + path.string());
        }
        diagram.features.push_back({static_cast<int>(dim), birth, death});
        maxscale = std::max(maxscale, death);
    }
    diagram.maxscale = maxscale;
    diagram.sort_canonical();
    return diagram;
}

void write_diagram(const std::filesystem::path& path, const PersistenceDiagram& diagram) {
    std::ofstream out = open_output(path);
    out << "dim birth death\n";
    for (const auto& f : diagram.features) {
        out << f.dim << ' ' << format_double(f.birth) << ' ' << format_double(f.death) << '\n';
    }
}

void write_rows(const std::filesystem::path& path, const std::vector<std::vector<double>>& rows,
                const std::vector<std::string>& header) {
    std::ofstream out = open_output(path);
    if (!header.empty()) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i > 0) out << ' ';
            out << header[i];
        }
        out << '\n';
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ' ';
            out << format_double(row[i]);
        }
        out << '\n';
    }
}

std::string format_double(double value) {
    if (value == std::floor(value) && std::abs(value) < 1e15) {
        char buffer[32];
        std::snprintf(buffer, sizeof(buffer), "%.1f", value);
        return buffer;
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

}  // namespace tdats
