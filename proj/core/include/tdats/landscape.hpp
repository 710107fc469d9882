#pragma once

#include <cstddef>
#include <vector>

#include "tdats/diagram.hpp"

namespace tdats {

/// Piecewise-linear landscape layers sampled on a uniform grid.  Layer nu is
/// the nu-th largest tent value; layers are ordered and at least one is kept
/// even when it is identically zero.
struct PersistenceLandscape {
    std::vector<double> grid;
    std::vector<std::vector<double>> layers;

    double spacing() const {
        return grid.size() > 1 ? (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1)
                               : 0.0;
    }
};

/// Landscape of the dim-p points on grid_points samples spanning
/// [min birth, max death] of that dimension.
PersistenceLandscape landscape(const PersistenceDiagram& diagram, int dim,
                               std::size_t grid_points = 500);

/// Same, with an explicit grid span.
PersistenceLandscape landscape(const PersistenceDiagram& diagram, int dim,
                               std::size_t grid_points, double lo, double hi);

/// (sum over layers of the trapezoidal integral of layer^q)^(1/q).
double landscape_norm(const PersistenceLandscape& pl, int q);

/// Supremum over layers and grid points (the q = infinity norm).
double landscape_sup_norm(const PersistenceLandscape& pl);

/// First-order landscapes of per-series (min, max) ranges on the common grid
/// spanned by the batch extremes; one row of length L per input sequence.
std::vector<std::vector<double>> first_order_pl_batch(
    const std::vector<std::vector<double>>& transforms, std::size_t L);

}  // namespace tdats
