#include "tdats/sublevel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tdats/errors.hpp"

namespace tdats {

namespace {

void validate_values(const std::vector<double>& values, const char* what) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw ParameterError(std::string(what) + " contains a non-finite value");
        }
    }
}

// Union-find with birth tracking for sublevel filtrations.  Cells are
// activated in (value, index) order; merging kills the younger component at
// the current level.  The global survivor dies at the global maximum; it is
// always emitted, other zero-persistence merges are dropped.
class SublevelTracker {
public:
    explicit SublevelTracker(std::size_t cells)
        : parent_(cells), birth_(cells, 0.0), active_(cells, false) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    void activate(std::size_t cell, double value) {
        active_[cell] = true;
        birth_[cell] = value;
    }

    bool active(std::size_t cell) const { return active_[cell]; }

    std::size_t find(std::size_t v) {
        std::size_t root = v;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[v] != root) {
            const std::size_t next = parent_[v];
            parent_[v] = root;
            v = next;
        }
        return root;
    }

    // Merge the components of a and b at `level`, recording the death of the
    // younger one.  No-op if already connected.
    void merge(std::size_t a, std::size_t b, double level, PersistenceDiagram& diagram) {
        std::size_t ra = find(a);
        std::size_t rb = find(b);
        if (ra == rb) return;
        // Elder rule: earlier birth survives; ties by lower cell index.
        if (birth_[rb] < birth_[ra] || (birth_[rb] == birth_[ra] && rb < ra)) std::swap(ra, rb);
        if (level > birth_[rb]) diagram.features.push_back({0, birth_[rb], level});
        parent_[rb] = ra;
    }

    void emit_survivors(double global_max, PersistenceDiagram& diagram, std::size_t cells) {
        for (std::size_t v = 0; v < cells; ++v) {
            if (active_[v] && find(v) == v) {
                diagram.features.push_back({0, birth_[v], global_max});
            }
        }
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<double> birth_;
    std::vector<bool> active_;
};

}  // namespace

PersistenceDiagram sublevel_persistence_1d(const GridFunction1D& f) {
    if (f.values.size() < 2) throw ParameterError("1-D grid function needs at least 2 samples");
    validate_values(f.values, "grid function");

    // Merge plateaus into single cells.
    std::vector<double> cells;
    cells.reserve(f.values.size());
    for (double v : f.values) {
        if (cells.empty() || cells.back() != v) cells.push_back(v);
    }

    const std::size_t n = cells.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (cells[a] != cells[b]) return cells[a] < cells[b];
        return a < b;
    });

    PersistenceDiagram diagram;
    diagram.maxscale = *std::max_element(cells.begin(), cells.end());
    SublevelTracker tracker(n);
    for (std::size_t cell : order) {
        tracker.activate(cell, cells[cell]);
        if (cell > 0 && tracker.active(cell - 1)) {
            tracker.merge(cell, cell - 1, cells[cell], diagram);
        }
        if (cell + 1 < n && tracker.active(cell + 1)) {
            tracker.merge(cell, cell + 1, cells[cell], diagram);
        }
    }
    tracker.emit_survivors(diagram.maxscale, diagram, n);
    diagram.sort_canonical();
    return diagram;
}

std::vector<double> dtm(const PointCloud& cloud, const PointCloud& queries, double m0) {
    if (cloud.size() == 0) throw ParameterError("dtm needs a nonempty cloud");
    if (!(m0 > 0.0 && m0 < 1.0)) throw ParameterError("dtm smoothing m0 must lie in (0, 1)");
    if (queries.dim() != cloud.dim()) {
        throw ParameterError("dtm query dimension does not match the cloud");
    }
    const std::size_t k = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(m0 * static_cast<double>(cloud.size()))));

    std::vector<double> out(queries.size());
    std::vector<double> dist2(cloud.size());
    for (std::size_t q = 0; q < queries.size(); ++q) {
        const auto query = queries.point(q);
        for (std::size_t i = 0; i < cloud.size(); ++i) {
            const auto p = cloud.point(i);
            double s = 0.0;
            for (std::size_t l = 0; l < p.size(); ++l) {
                const double diff = p[l] - query[l];
                s += diff * diff;
            }
            dist2[i] = s;
        }
        std::nth_element(dist2.begin(), dist2.begin() + (k - 1), dist2.end());
        double sum = 0.0;
        for (std::size_t i = 0; i < k; ++i) sum += dist2[i];
        out[q] = std::sqrt(sum / static_cast<double>(k));
    }
    return out;
}

GridFunction2D dtm_grid(const PointCloud& cloud, double step, double m0) {
    if (cloud.dim() != 2) throw ParameterError("dtm_grid expects a 2-D cloud");
    if (!(step > 0.0)) throw ParameterError("dtm_grid step must be positive");

    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        xmin = std::min(xmin, cloud.coord(i, 0));
        xmax = std::max(xmax, cloud.coord(i, 0));
        ymin = std::min(ymin, cloud.coord(i, 1));
        ymax = std::max(ymax, cloud.coord(i, 1));
    }
    const auto axis_count = [step](double lo, double hi) {
        std::size_t count = 1;
        while (lo + static_cast<double>(count) * step <= hi) ++count;
        return count;
    };
    const std::size_t nx = axis_count(xmin, xmax);
    const std::size_t ny = axis_count(ymin, ymax);
    if (nx < 2 || ny < 2) throw ParameterError("dtm_grid step too coarse for the cloud extent");

    std::vector<double> query_data;
    query_data.reserve(nx * ny * 2);
    for (std::size_t r = 0; r < nx; ++r) {
        for (std::size_t c = 0; c < ny; ++c) {
            query_data.push_back(xmin + static_cast<double>(r) * step);
            query_data.push_back(ymin + static_cast<double>(c) * step);
        }
    }
    const PointCloud queries(2, std::move(query_data));

    GridFunction2D grid;
    grid.rows = nx;
    grid.cols = ny;
    grid.spacing_row = step;
    grid.spacing_col = step;
    grid.values = dtm(cloud, queries, m0);
    return grid;
}

PersistenceDiagram grid_sublevel_persistence_h0(const GridFunction2D& f) {
    if (f.rows < 2 || f.cols < 2) throw ParameterError("2-D grid must be at least 2x2");
    if (f.values.size() != f.rows * f.cols) {
        throw ParameterError("2-D grid storage does not match rows*cols");
    }
    validate_values(f.values, "grid function");

    const std::size_t n = f.values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (f.values[a] != f.values[b]) return f.values[a] < f.values[b];
        return a < b;
    });

    PersistenceDiagram diagram;
    diagram.maxscale = *std::max_element(f.values.begin(), f.values.end());
    SublevelTracker tracker(n);
    for (std::size_t cell : order) {
        tracker.activate(cell, f.values[cell]);
        const std::size_t r = cell / f.cols;
        const std::size_t c = cell % f.cols;
        for (int dr = -1; dr <= 1; ++dr) {
            for (int dc = -1; dc <= 1; ++dc) {
                if (dr == 0 && dc == 0) continue;
                const std::size_t nr = r + static_cast<std::size_t>(dr);
                const std::size_t nc = c + static_cast<std::size_t>(dc);
                if (nr >= f.rows || nc >= f.cols) continue;  // wrapped negatives land here too
                const std::size_t neighbour = nr * f.cols + nc;
                if (tracker.active(neighbour)) {
                    tracker.merge(cell, neighbour, f.values[cell], diagram);
                }
            }
        }
    }
    tracker.emit_survivors(diagram.maxscale, diagram, n);
    diagram.sort_canonical();
    return diagram;
}

}  // namespace tdats
