#pragma once

#include <cstddef>
#include <vector>

#include "tdats/diagram.hpp"
#include "tdats/embedding.hpp"

namespace tdats {

/// Function values sampled on a uniform 1-D grid.
struct GridFunction1D {
    std::vector<double> values;
    double spacing = 1.0;
};

/// Function values sampled on a uniform 2-D grid, row-major.
struct GridFunction2D {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;
    double spacing_row = 1.0;
    double spacing_col = 1.0;

    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

/// Dimension-0 persistence of the sublevel filtration of a sampled 1-D
/// function.  Components are born at local minima and merge by the elder
/// rule; the oldest dies at the global maximum.  Plateaus are merged into
/// single cells before minima detection.
PersistenceDiagram sublevel_persistence_1d(const GridFunction1D& f);

/// Distance-to-measure values at the query points: root-mean-square distance
/// to the k = max(1, floor(m0 * N)) nearest cloud points.
std::vector<double> dtm(const PointCloud& cloud, const PointCloud& queries, double m0);

/// DTM evaluated on a grid covering the bounding box of a 2-D cloud with the
/// given step, mirroring the usual plotting construction.
GridFunction2D dtm_grid(const PointCloud& cloud, double step, double m0);

/// Dimension-0 sublevel persistence on a 2-D grid with 8-neighbour
/// adjacency.
PersistenceDiagram grid_sublevel_persistence_h0(const GridFunction2D& f);

}  // namespace tdats
