#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tdats/diagram.hpp"
#include "tdats/embedding.hpp"
#include "tdats/rips.hpp"
#include "tdats/series.hpp"

namespace tdats {

/// Column-oriented numeric table parsed from whitespace- or comma-delimited
/// text.  A non-numeric first row is taken as the header.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> data;  // column major

    std::size_t column_count() const noexcept { return data.size(); }
    std::size_t row_count() const noexcept { return data.empty() ? 0 : data.front().size(); }
};

Table read_table(const std::filesystem::path& path);

TimeSeries series_from_column(const Table& table, std::size_t column);

PointCloud read_point_cloud(const std::filesystem::path& path);
DistanceMatrix read_distance_matrix(const std::filesystem::path& path);
PersistenceDiagram read_diagram(const std::filesystem::path& path);

void write_diagram(const std::filesystem::path& path, const PersistenceDiagram& diagram);
void write_rows(const std::filesystem::path& path, const std::vector<std::vector<double>>& rows,
                const std::vector<std::string>& header = {});

/// Shortest round-trip decimal representation, locale independent.
std::string format_double(double value);

}  // namespace tdats
