#include "tdats/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "tdats/errors.hpp"

namespace tdats {

namespace {

PersistenceLandscape build(const std::vector<DiagramFeature>& features, std::size_t grid_points,
                           double lo, double hi) {
    PersistenceLandscape pl;
    pl.grid.resize(grid_points);
    for (std::size_t l = 0; l < grid_points; ++l) {
        pl.grid[l] = lo + (hi - lo) * static_cast<double>(l) /
                              static_cast<double>(grid_points - 1);
    }

    // Tent values per grid point, sorted descending; layer count is the
    // largest number of positive tents anywhere.
    std::vector<std::vector<double>> tents(grid_points);
    std::size_t depth = 0;
    for (std::size_t l = 0; l < grid_points; ++l) {
        const double x = pl.grid[l];
        for (const auto& f : features) {
            const double v = std::min(x - f.birth, f.death - x);
            if (v > 0.0) tents[l].push_back(v);
        }
        std::sort(tents[l].begin(), tents[l].end(), std::greater<double>());
        depth = std::max(depth, tents[l].size());
    }
    depth = std::max<std::size_t>(depth, 1);

    pl.layers.assign(depth, std::vector<double>(grid_points, 0.0));
    for (std::size_t l = 0; l < grid_points; ++l) {
        for (std::size_t nu = 0; nu < tents[l].size(); ++nu) {
            pl.layers[nu][l] = tents[l][nu];
        }
    }
    return pl;
}

}  // namespace

PersistenceLandscape landscape(const PersistenceDiagram& diagram, int dim,
                               std::size_t grid_points) {
    if (dim != 0 && dim != 1) throw ParameterError("landscape dimension must be 0 or 1");
    const std::vector<DiagramFeature> features = diagram.features_of(dim);
    double lo = 0.0;
    double hi = std::max(diagram.maxscale, 0.0);
    if (!features.empty()) {
        lo = std::numeric_limits<double>::infinity();
        hi = -lo;
        for (const auto& f : features) {
            lo = std::min(lo, f.birth);
            hi = std::max(hi, f.death);
        }
    }
    if (hi <= lo) hi = lo + 1.0;  // degenerate span; the layers stay zero
    return landscape(diagram, dim, grid_points, lo, hi);
}

PersistenceLandscape landscape(const PersistenceDiagram& diagram, int dim,
                               std::size_t grid_points, double lo, double hi) {
    if (dim != 0 && dim != 1) throw ParameterError("landscape dimension must be 0 or 1");
    if (grid_points < 2) throw ParameterError("landscape needs at least 2 grid points");
    if (!(hi > lo)) throw ParameterError("landscape grid span must be nonempty");
    return build(diagram.features_of(dim), grid_points, lo, hi);
}

double landscape_norm(const PersistenceLandscape& pl, int q) {
    if (q < 1) throw ParameterError("landscape norm degree must be a positive integer");
    const double dx = pl.spacing();
    double total = 0.0;
    for (const auto& layer : pl.layers) {
        double integral = 0.0;
        for (std::size_t l = 0; l + 1 < layer.size(); ++l) {
            const double fa = q == 1 ? layer[l] : std::pow(layer[l], q);
            const double fb = q == 1 ? layer[l + 1] : std::pow(layer[l + 1], q);
            integral += 0.5 * (fa + fb) * dx;
        }
        total += integral;
    }
    return q == 1 ? total : std::pow(total, 1.0 / static_cast<double>(q));
}

double landscape_sup_norm(const PersistenceLandscape& pl) {
    double sup = 0.0;
    for (const auto& layer : pl.layers) {
        for (double v : layer) sup = std::max(sup, v);
    }
    return sup;
}

std::vector<std::vector<double>> first_order_pl_batch(
    const std::vector<std::vector<double>>& transforms, std::size_t L) {
    if (transforms.empty()) throw ParameterError("first_order_pl_batch needs at least one series");
    if (L < 2) throw ParameterError("first_order_pl_batch needs L >= 2");

    const std::size_t n = transforms.size();
    std::vector<double> mins(n), maxs(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (transforms[i].empty()) {
            throw ParameterError("first_order_pl_batch sequence " + std::to_string(i) +
                                 " is empty");
        }
        const auto [lo, hi] = std::minmax_element(transforms[i].begin(), transforms[i].end());
        mins[i] = *lo;
        maxs[i] = *hi;
    }
    const double global_min = *std::min_element(mins.begin(), mins.end());
    const double global_max = *std::max_element(maxs.begin(), maxs.end());
    if (!(global_max > global_min)) {
        throw DegenerateInputError("all transform values identical across the batch");
    }

    std::vector<std::vector<double>> out(n, std::vector<double>(L));
    const double range = global_max - global_min;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < L; ++l) {
            const double offset = static_cast<double>(l) * range / static_cast<double>(L - 1);
            const double v1 = global_min + offset - mins[i];
            const double v2 = maxs[i] - global_min - offset;
            out[i][l] = std::max(0.0, std::min(v1, v2));
        }
    }
    return out;
}

}  // namespace tdats
