#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tdats/diagram.hpp"
#include "tdats/embedding.hpp"

namespace tdats {

enum class Metric { euclidean, manhattan, maximum, arbitrary };

Metric metric_from_name(std::string_view name);
std::string_view metric_name(Metric metric);

/// Symmetric nonnegative matrix with zero diagonal, tagged with the metric
/// that produced it ("arbitrary" for precomputed inputs).
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(std::size_t n, std::vector<double> entries, Metric label = Metric::arbitrary);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    const std::vector<double>& entries() const noexcept { return entries_; }
    Metric metric() const noexcept { return metric_; }
    double max_entry() const;

private:
    std::size_t n_ = 0;
    std::vector<double> entries_;
    Metric metric_ = Metric::arbitrary;
};

DistanceMatrix distance_matrix(const PointCloud& cloud, Metric metric = Metric::euclidean);

/// Vietoris–Rips persistence in dimensions 0..maxdim (maxdim is 0 or 1).
/// Dimension 0 comes from union-find over edges; dimension 1 from reduction
/// over edge/triangle incidences with the filtration capped at maxscale.
/// Zero-persistence pairs are dropped; the surviving component dies at
/// maxscale.
PersistenceDiagram rips_persistence(const DistanceMatrix& dist, int maxdim, double maxscale);
PersistenceDiagram rips_persistence(const DistanceMatrix& dist, int maxdim = 1);
PersistenceDiagram rips_persistence(const PointCloud& cloud, int maxdim, double maxscale);
PersistenceDiagram rips_persistence(const PointCloud& cloud, int maxdim = 1);

}  // namespace tdats
