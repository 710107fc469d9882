#include "tdats/rips.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>

#include "tdats/errors.hpp"

namespace tdats {

Metric metric_from_name(std::string_view name) {
    if (name == "euclidean") return Metric::euclidean;
    if (name == "manhattan") return Metric::manhattan;
    if (name == "maximum") return Metric::maximum;
    if (name == "arbitrary") return Metric::arbitrary;
    throw ParameterError("unknown metric '" + std::string(name) + "'");
}

std::string_view metric_name(Metric metric) {
    switch (metric) {
        case Metric::euclidean: return "euclidean";
        case Metric::manhattan: return "manhattan";
        case Metric::maximum: return "maximum";
        case Metric::arbitrary: return "arbitrary";
    }
    return "arbitrary";
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> entries, Metric label)
    : n_(n), entries_(std::move(entries)), metric_(label) {
    if (n_ == 0) throw ParameterError("distance matrix must have at least one point");
    if (entries_.size() != n_ * n_) {
        throw ParameterError("distance matrix storage does not match its size");
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (entries_[i * n_ + i] != 0.0) {
            throw ParameterError("distance matrix diagonal must be exactly zero");
        }
        for (std::size_t j = 0; j < n_; ++j) {
            const double v = entries_[i * n_ + j];
            if (!std::isfinite(v) || v < 0.0) {
                throw ParameterError("distance matrix entries must be finite and nonnegative");
            }
            if (std::abs(v - entries_[j * n_ + i]) > 1e-12) {
                throw ParameterError("distance matrix is not symmetric");
            }
        }
    }
}

double DistanceMatrix::max_entry() const {
    double m = 0.0;
    for (double v : entries_) m = std::max(m, v);
    return m;
}

DistanceMatrix distance_matrix(const PointCloud& cloud, Metric metric) {
    if (metric == Metric::arbitrary) {
        throw ParameterError("metric for a point cloud must be euclidean, manhattan or maximum");
    }
    const std::size_t n = cloud.size();
    const std::size_t d = cloud.dim();
    std::vector<double> entries(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto pi = cloud.point(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto pj = cloud.point(j);
            double v = 0.0;
            switch (metric) {
                case Metric::euclidean: {
                    for (std::size_t l = 0; l < d; ++l) {
                        const double diff = pi[l] - pj[l];
                        v += diff * diff;
                    }
                    v = std::sqrt(v);
                    break;
                }
                case Metric::manhattan: {
                    for (std::size_t l = 0; l < d; ++l) v += std::abs(pi[l] - pj[l]);
                    break;
                }
                case Metric::maximum: {
                    for (std::size_t l = 0; l < d; ++l) v = std::max(v, std::abs(pi[l] - pj[l]));
                    break;
                }
                case Metric::arbitrary: break;
            }
            entries[i * n + j] = v;
            entries[j * n + i] = v;
        }
    }
    return DistanceMatrix(n, std::move(entries), metric);
}

namespace {

struct Edge {
    double filt;
    std::uint32_t i, j;
};

// Triangles are keyed by their sorted vertex triple packed into 21-bit
// fields, so key order is lexicographic order.
std::uint64_t triangle_key(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return (static_cast<std::uint64_t>(a) << 42) | (static_cast<std::uint64_t>(b) << 21) |
           static_cast<std::uint64_t>(c);
}

std::uint64_t sorted_triangle_key(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    // i < j by construction; k is arbitrary.
    if (k < i) return triangle_key(k, i, j);
    if (k < j) return triangle_key(i, k, j);
    return triangle_key(i, j, k);
}

struct TriEntry {
    double filt;
    std::uint64_t key;
};

// Pivot preference: smallest (filtration, lexicographic triple).
struct TriEntryAfter {
    bool operator()(const TriEntry& a, const TriEntry& b) const {
        if (a.filt != b.filt) return a.filt > b.filt;
        return a.key > b.key;
    }
};

using Column = std::priority_queue<TriEntry, std::vector<TriEntry>, TriEntryAfter>;

// Pop the minimal surviving entry under Z/2 cancellation of duplicates.
bool pop_pivot(Column& column, TriEntry& out) {
    while (!column.empty()) {
        TriEntry top = column.top();
        column.pop();
        if (!column.empty() && column.top().key == top.key) {
            column.pop();  // the pair cancels
            continue;
        }
        out = top;
        return true;
    }
    return false;
}

// A reduced column is remembered either implicitly (its reduction never
// added anything, so the content is the raw coboundary of its edge) or as
// an explicit entry list.  Stored entries exclude the column's pivot.
struct ColumnRecord {
    std::uint32_t edge_rank;
    bool is_explicit;
    std::uint32_t begin;
    std::uint32_t length;
};

class RipsReduction {
public:
    RipsReduction(const DistanceMatrix& dist, double maxscale)
        : dist_(dist), n_(dist.size()), maxscale_(maxscale) {
        for (std::uint32_t i = 0; i < n_; ++i) {
            for (std::uint32_t j = i + 1; j < n_; ++j) {
                const double v = dist_(i, j);
                if (v <= maxscale_) edges_.push_back({v, i, j});
            }
        }
        std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
            if (a.filt != b.filt) return a.filt < b.filt;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });
    }

    void compute_dim0(PersistenceDiagram& diagram) {
        parent_.resize(n_);
        std::iota(parent_.begin(), parent_.end(), 0);
        positive_.assign(edges_.size(), false);
        for (std::uint32_t r = 0; r < edges_.size(); ++r) {
            const Edge& e = edges_[r];
            const std::uint32_t ri = find(e.i);
            const std::uint32_t rj = find(e.j);
            if (ri == rj) {
                positive_[r] = true;
                continue;
            }
            // Elder rule: the lower-indexed root survives.
            parent_[std::max(ri, rj)] = std::min(ri, rj);
            if (e.filt > 0.0) diagram.features.push_back({0, 0.0, e.filt});
        }
        std::size_t survivors = 0;
        for (std::uint32_t v = 0; v < n_; ++v) {
            if (find(v) == v) ++survivors;
        }
        for (std::size_t s = 0; s < survivors; ++s) {
            diagram.features.push_back({0, 0.0, maxscale_});
        }
    }

    void compute_dim1(PersistenceDiagram& diagram) {
        std::unordered_map<std::uint64_t, std::uint32_t> claims;
        claims.reserve(edges_.size());
        std::vector<ColumnRecord> records;
        std::vector<TriEntry> pool;

        // Coboundary reduction over positive edges in decreasing filtration
        // order; killing edges are skipped outright (cleared by the dim-0
        // pairing).
        for (std::uint32_t r = static_cast<std::uint32_t>(edges_.size()); r-- > 0;) {
            if (!positive_[r]) continue;
            const Edge& edge = edges_[r];

            TriEntry initial{};
            bool has_cofacet = false;
            for (std::uint32_t k = 0; k < n_; ++k) {
                if (k == edge.i || k == edge.j) continue;
                const double dik = dist_(edge.i, k);
                const double djk = dist_(edge.j, k);
                if (dik > maxscale_ || djk > maxscale_) continue;
                const TriEntry cand{std::max(edge.filt, std::max(dik, djk)),
                                    sorted_triangle_key(edge.i, edge.j, k)};
                if (!has_cofacet || cand.filt < initial.filt ||
                    (cand.filt == initial.filt && cand.key < initial.key)) {
                    initial = cand;
                    has_cofacet = true;
                }
            }

            if (!has_cofacet) {
                emit_essential(diagram, edge);
                continue;
            }
            if (!claims.contains(initial.key)) {
                // Unclaimed initial pivot: the reduction would terminate
                // immediately, so pair without assembling the column.
                claims.emplace(initial.key, static_cast<std::uint32_t>(records.size()));
                records.push_back({r, false, 0, 0});
                emit_pair(diagram, edge, initial);
                continue;
            }

            Column working;
            push_coboundary(working, edge, kNoKey);
            while (true) {
                TriEntry pivot{};
                if (!pop_pivot(working, pivot)) {
                    emit_essential(diagram, edge);
                    break;
                }
                auto it = claims.find(pivot.key);
                if (it == claims.end()) {
                    claims.emplace(pivot.key, static_cast<std::uint32_t>(records.size()));
                    ColumnRecord record{r, true, static_cast<std::uint32_t>(pool.size()), 0};
                    TriEntry rest{};
                    while (pop_pivot(working, rest)) {
                        pool.push_back(rest);
                        ++record.length;
                    }
                    records.push_back(record);
                    emit_pair(diagram, edge, pivot);
                    break;
                }
                // Add the claimed column; both pivot copies cancel, so the
                // popped pivot is simply dropped.
                const ColumnRecord& record = records[it->second];
                if (record.is_explicit) {
                    for (std::uint32_t s = 0; s < record.length; ++s) {
                        working.push(pool[record.begin + s]);
                    }
                } else {
                    push_coboundary(working, edges_[record.edge_rank], pivot.key);
                }
            }
        }
    }

private:
    static constexpr std::uint64_t kNoKey = std::numeric_limits<std::uint64_t>::max();

    std::uint32_t find(std::uint32_t v) {
        std::uint32_t root = v;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[v] != root) {
            const std::uint32_t next = parent_[v];
            parent_[v] = root;
            v = next;
        }
        return root;
    }

    void push_coboundary(Column& column, const Edge& edge, std::uint64_t skip_key) {
        for (std::uint32_t k = 0; k < n_; ++k) {
            if (k == edge.i || k == edge.j) continue;
            const double dik = dist_(edge.i, k);
            const double djk = dist_(edge.j, k);
            if (dik > maxscale_ || djk > maxscale_) continue;
            const std::uint64_t key = sorted_triangle_key(edge.i, edge.j, k);
            if (key == skip_key) continue;
            column.push({std::max(edge.filt, std::max(dik, djk)), key});
        }
    }

    void emit_pair(PersistenceDiagram& diagram, const Edge& edge, const TriEntry& pivot) const {
        if (pivot.filt > edge.filt) diagram.features.push_back({1, edge.filt, pivot.filt});
    }

    void emit_essential(PersistenceDiagram& diagram, const Edge& edge) const {
        if (edge.filt < maxscale_) diagram.features.push_back({1, edge.filt, maxscale_});
    }

    const DistanceMatrix& dist_;
    std::size_t n_;
    double maxscale_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> parent_;
    std::vector<bool> positive_;
};

}  // namespace

PersistenceDiagram rips_persistence(const DistanceMatrix& dist, int maxdim, double maxscale) {
    if (maxdim != 0 && maxdim != 1) throw ParameterError("rips maxdim must be 0 or 1");
    if (!(maxscale >= 0.0) || !std::isfinite(maxscale)) {
        throw ParameterError("rips maxscale must be a nonnegative finite number");
    }
    if (dist.size() >= (1u << 21)) {
        throw ParameterError("rips supports at most 2^21 - 1 points");
    }

    PersistenceDiagram diagram;
    diagram.maxscale = maxscale;
    RipsReduction reduction(dist, maxscale);
    reduction.compute_dim0(diagram);
    if (maxdim >= 1) reduction.compute_dim1(diagram);
    diagram.sort_canonical();
    return diagram;
}

PersistenceDiagram rips_persistence(const DistanceMatrix& dist, int maxdim) {
    return rips_persistence(dist, maxdim, dist.max_entry());
}

PersistenceDiagram rips_persistence(const PointCloud& cloud, int maxdim, double maxscale) {
    return rips_persistence(distance_matrix(cloud, Metric::euclidean), maxdim, maxscale);
}

PersistenceDiagram rips_persistence(const PointCloud& cloud, int maxdim) {
    const DistanceMatrix dist = distance_matrix(cloud, Metric::euclidean);
    return rips_persistence(dist, maxdim, dist.max_entry());
}

}  // namespace tdats
