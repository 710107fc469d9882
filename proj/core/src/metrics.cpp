#include "tdats/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "tdats/errors.hpp"

namespace tdats {

namespace {

struct Point {
    double birth;
    double death;

    double diagonal_cost() const { return (death - birth) / 2.0; }
};

std::vector<Point> points_of(const PersistenceDiagram& diagram, int dim) {
    if (dim != 0 && dim != 1) throw ParameterError("diagram distance dimension must be 0 or 1");
    std::vector<Point> out;
    for (const auto& f : diagram.features) {
        if (f.dim == dim) out.push_back({f.birth, f.death});
    }
    return out;
}

double ground_cost(const Point& a, const Point& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

// Cost of assigning row i to column j in the augmented square problem:
// rows are the points of A followed by |B| diagonal slots, columns are the
// points of B followed by |A| diagonal slots.  A point pairs with any
// diagonal slot at the cost of reaching its own projection.
double augmented_cost(const std::vector<Point>& a, const std::vector<Point>& b, std::size_t i,
                      std::size_t j) {
    const bool row_real = i < a.size();
    const bool col_real = j < b.size();
    if (row_real && col_real) return ground_cost(a[i], b[j]);
    if (row_real) return a[i].diagonal_cost();
    if (col_real) return b[j].diagonal_cost();
    return 0.0;
}

// O(n^3) Hungarian assignment with potentials; returns the minimum total
// cost of a perfect matching of the square cost matrix.
double solve_assignment(const std::vector<std::vector<double>>& cost) {
    const std::size_t n = cost.size();
    if (n == 0) return 0.0;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0);
    std::vector<double> v(n + 1, 0.0);
    std::vector<std::size_t> match(n + 1, 0);  // column -> row (1-based, 0 = free)
    std::vector<std::size_t> way(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    double total = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
        if (match[j] != 0) total += cost[match[j] - 1][j - 1];
    }
    return total;
}

// Feasibility of a bottleneck threshold: does the augmented square graph
// admit a perfect matching with every assignment cost <= limit?  Points that
// sit within `limit` of the diagonal and farther than `limit` from every
// forced point of the other side can always take their own projection, so
// they are removed (together with one matching diagonal slot) before the
// matching runs.
class ThresholdMatcher {
public:
    ThresholdMatcher(std::vector<Point> a, std::vector<Point> b)
        : a_(std::move(a)), b_(std::move(b)) {}

    bool feasible(double limit) {
        std::vector<std::size_t> rows;  // kept indices into a_
        std::vector<std::size_t> cols;  // kept indices into b_
        std::size_t forced_rows = 0;
        std::size_t forced_cols = 0;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (a_[i].diagonal_cost() > limit) {
                rows.push_back(i);
                ++forced_rows;
            }
        }
        for (std::size_t j = 0; j < b_.size(); ++j) {
            if (b_[j].diagonal_cost() > limit) {
                cols.push_back(j);
                ++forced_cols;
            }
        }
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (a_[i].diagonal_cost() > limit) continue;
            for (std::size_t c = 0; c < forced_cols; ++c) {
                if (ground_cost(a_[i], b_[cols[c]]) <= limit) {
                    rows.push_back(i);
                    break;
                }
            }
        }
        for (std::size_t j = 0; j < b_.size(); ++j) {
            if (b_[j].diagonal_cost() > limit) continue;
            for (std::size_t r = 0; r < forced_rows; ++r) {
                if (ground_cost(a_[rows[r]], b_[j]) <= limit) {
                    cols.push_back(j);
                    break;
                }
            }
        }

        // Square graph: kept A rows plus |cols| diagonal rows against kept B
        // cols plus |rows| diagonal cols.
        limit_ = limit;
        rows_ = std::move(rows);
        cols_ = std::move(cols);
        const std::size_t side = rows_.size() + cols_.size();
        match_row_.assign(side, kFree);
        match_col_.assign(side, kFree);
        for (std::size_t r = 0; r < side; ++r) {
            visited_.assign(side, false);
            if (!augment(r)) return false;
        }
        return true;
    }

private:
    static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

    bool allowed(std::size_t row, std::size_t col) const {
        const bool row_real = row < rows_.size();
        const bool col_real = col < cols_.size();
        if (row_real && col_real) return ground_cost(a_[rows_[row]], b_[cols_[col]]) <= limit_;
        if (row_real) return a_[rows_[row]].diagonal_cost() <= limit_;
        if (col_real) return b_[cols_[col]].diagonal_cost() <= limit_;
        return true;
    }

    bool augment(std::size_t row) {
        const std::size_t side = match_col_.size();
        for (std::size_t c = 0; c < side; ++c) {
            if (visited_[c] || !allowed(row, c)) continue;
            visited_[c] = true;
            if (match_col_[c] == kFree || augment(match_col_[c])) {
                match_row_[row] = c;
                match_col_[c] = row;
                return true;
            }
        }
        return false;
    }

    std::vector<Point> a_;
    std::vector<Point> b_;
    std::vector<std::size_t> rows_;
    std::vector<std::size_t> cols_;
    double limit_ = 0.0;
    std::vector<std::size_t> match_row_;
    std::vector<std::size_t> match_col_;
    std::vector<bool> visited_;
};

}  // namespace

double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, int q, int dim) {
    if (q < 1) throw ParameterError("wasserstein degree q must be a positive integer");
    const std::vector<Point> pa = points_of(a, dim);
    const std::vector<Point> pb = points_of(b, dim);
    const std::size_t n = pa.size() + pb.size();
    if (n == 0) return 0.0;

    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cost[i][j] = std::pow(augmented_cost(pa, pb, i, j), q);
        }
    }
    const double total = solve_assignment(cost);
    return std::pow(total, 1.0 / static_cast<double>(q));
}

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim) {
    const std::vector<Point> pa = points_of(a, dim);
    const std::vector<Point> pb = points_of(b, dim);
    if (pa.empty() && pb.empty()) return 0.0;

    std::vector<double> candidates{0.0};
    for (const auto& p : pa) candidates.push_back(p.diagonal_cost());
    for (const auto& p : pb) candidates.push_back(p.diagonal_cost());
    for (const auto& p : pa) {
        for (const auto& r : pb) candidates.push_back(ground_cost(p, r));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    ThresholdMatcher matcher(pa, pb);
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (matcher.feasible(candidates[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return candidates[lo];
}

}  // namespace tdats
