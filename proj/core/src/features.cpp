#include "tdats/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "tdats/embedding.hpp"
#include "tdats/errors.hpp"
#include "tdats/landscape.hpp"
#include "tdats/rips.hpp"

namespace tdats {

double sw1pers_score(const PersistenceDiagram& diagram) {
    // Allow a little slack beyond sqrt(3) for diagrams built with a cap that
    // was itself rounded.
    const double bound = std::sqrt(3.0) + 1e-2;
    const DiagramFeature* best = nullptr;
    for (const auto& f : diagram.features) {
        if (f.dim != 1) continue;
        if (f.birth < 0.0 || f.death > bound) {
            throw ParameterError("sw1pers_score expects births and deaths in [0, sqrt(3)]");
        }
        if (best == nullptr || f.persistence() > best->persistence()) best = &f;
    }
    if (best == nullptr) return 1.0;
    const double score = 1.0 - (best->death * best->death - best->birth * best->birth) / 3.0;
    return std::clamp(score, 0.0, 1.0);
}

LifetimeFeatures lifetime_features(const PersistenceDiagram& diagram) {
    LifetimeFeatures out;
    for (int dim = 0; dim <= 1; ++dim) {
        LifetimeStats& stats = out.per_dim[static_cast<std::size_t>(dim)];
        double max_life = 0.0;
        for (const auto& f : diagram.features) {
            if (f.dim != dim) continue;
            ++stats.count;
            stats.sum_lifetime += f.persistence();
            max_life = std::max(max_life, f.persistence());
        }
        if (stats.count == 0) continue;
        stats.max_lifetime = max_life;
        stats.mean_lifetime = stats.sum_lifetime / static_cast<double>(stats.count);
        for (const auto& f : diagram.features) {
            if (f.dim == dim && f.persistence() >= 0.5 * max_life) ++stats.relevant_count;
        }
    }
    return out;
}

std::vector<int> betti_sequence(const PersistenceDiagram& diagram, int dim, std::size_t n_grid) {
    if (dim != 0 && dim != 1) throw ParameterError("betti dimension must be 0 or 1");
    if (n_grid < 2) throw ParameterError("betti grid needs at least 2 points");
    std::vector<int> out(n_grid, 0);
    const double hi = std::max(diagram.maxscale, 0.0);
    for (std::size_t l = 0; l < n_grid; ++l) {
        const double lambda = hi * static_cast<double>(l) / static_cast<double>(n_grid - 1);
        int count = 0;
        for (const auto& f : diagram.features) {
            if (f.dim == dim && f.birth <= lambda && lambda <= f.death) ++count;
        }
        out[l] = count;
    }
    return out;
}

std::vector<int> betti_concat(const PersistenceDiagram& diagram, std::size_t n_grid) {
    std::vector<int> out = betti_sequence(diagram, 0, n_grid);
    const std::vector<int> dim1 = betti_sequence(diagram, 1, n_grid);
    out.insert(out.end(), dim1.begin(), dim1.end());
    return out;
}

std::vector<WindowFeature> window_break_features(const TimeSeries& series, int window_n,
                                                 int embed_d) {
    if (window_n < 1) throw ParameterError("break window size must be positive");
    if (embed_d < 1) throw ParameterError("break embedding dimension must be positive");
    const std::size_t need = static_cast<std::size_t>(window_n) + static_cast<std::size_t>(embed_d);
    if (series.size() < need) {
        throw ParameterError("series of length " + std::to_string(series.size()) +
                             " too short for window " + std::to_string(window_n) +
                             " with embedding " + std::to_string(embed_d));
    }

    const PointCloud embedded = takens_embed(series, embed_d, 1);
    const std::size_t windows = embedded.size() - static_cast<std::size_t>(window_n) + 1;

    std::vector<WindowFeature> out;
    out.reserve(windows);
    for (std::size_t w = 0; w < windows; ++w) {
        std::vector<double> data(embedded.data().begin() + w * embedded.dim(),
                                 embedded.data().begin() +
                                     (w + static_cast<std::size_t>(window_n)) * embedded.dim());
        const PointCloud window_cloud(embedded.dim(), std::move(data));
        const PersistenceDiagram diagram = rips_persistence(window_cloud, 1);
        const PersistenceLandscape pl = landscape(diagram, 1);
        out.push_back({w + 1, series[w], series[w + 1] - series[w], landscape_norm(pl, 1)});
    }
    return out;
}

namespace {

// Deterministic uniform doubles in [0, 1) from the raw generator stream;
// std::uniform_real_distribution is implementation-defined.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        s += diff * diff;
    }
    return s;
}

}  // namespace

KMeansResult kmeans(const std::vector<std::vector<double>>& features, int k, std::uint64_t seed,
                    int max_iter) {
    const std::size_t n = features.size();
    if (k < 1) throw ParameterError("kmeans needs k >= 1");
    if (static_cast<std::size_t>(k) > n) {
        throw ParameterError("kmeans k exceeds the number of points");
    }
    if (max_iter < 1) throw ParameterError("kmeans needs max_iter >= 1");
    const std::size_t dim = features.front().size();
    for (const auto& row : features) {
        if (row.size() != dim) throw ParameterError("kmeans feature rows have mixed widths");
        for (double v : row) {
            if (!std::isfinite(v)) throw ParameterError("kmeans features must be finite");
        }
    }

    std::mt19937_64 rng(seed);
    KMeansResult result;
    result.centers.reserve(static_cast<std::size_t>(k));

    // k-means++ seeding.
    result.centers.push_back(features[static_cast<std::size_t>(uniform01(rng) *
                                                               static_cast<double>(n))]);
    std::vector<double> best_dist2(n);
    while (result.centers.size() < static_cast<std::size_t>(k)) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& c : result.centers) {
                best = std::min(best, squared_distance(features[i], c));
            }
            best_dist2[i] = best;
            total += best;
        }
        std::size_t chosen = 0;
        if (total > 0.0) {
            const double target = uniform01(rng) * total;
            double acc = 0.0;
            chosen = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                acc += best_dist2[i];
                if (acc > target) {
                    chosen = i;
                    break;
                }
            }
        } else {
            chosen = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n));
        }
        result.centers.push_back(features[chosen]);
    }

    result.labels.assign(n, 0);
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k), 0);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool changed = iter == 0;
        for (std::size_t i = 0; i < n; ++i) {
            int best_label = 0;
            double best = std::numeric_limits<double>::infinity();
            for (int c = 0; c < k; ++c) {
                const double d2 = squared_distance(features[i],
                                                   result.centers[static_cast<std::size_t>(c)]);
                if (d2 < best) {
                    best = d2;
                    best_label = c;
                }
            }
            if (result.labels[i] != best_label) {
                result.labels[i] = best_label;
                changed = true;
            }
        }
        result.iterations = static_cast<std::size_t>(iter + 1);
        if (!changed) break;

        for (auto& c : result.centers) std::fill(c.begin(), c.end(), 0.0);
        std::fill(sizes.begin(), sizes.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            auto& c = result.centers[static_cast<std::size_t>(result.labels[i])];
            for (std::size_t j = 0; j < dim; ++j) c[j] += features[i][j];
            ++sizes[static_cast<std::size_t>(result.labels[i])];
        }
        for (int c = 0; c < k; ++c) {
            if (sizes[static_cast<std::size_t>(c)] == 0) continue;
            for (double& v : result.centers[static_cast<std::size_t>(c)]) {
                v /= static_cast<double>(sizes[static_cast<std::size_t>(c)]);
            }
        }
        // Reseed empty clusters to the farthest point from its center.
        for (int c = 0; c < k; ++c) {
            if (sizes[static_cast<std::size_t>(c)] != 0) continue;
            std::size_t farthest = 0;
            double far_d2 = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d2 = squared_distance(
                    features[i], result.centers[static_cast<std::size_t>(result.labels[i])]);
                if (d2 > far_d2) {
                    far_d2 = d2;
                    farthest = i;
                }
            }
            result.centers[static_cast<std::size_t>(c)] = features[farthest];
        }
    }

    result.inertia = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        result.inertia += squared_distance(
            features[i], result.centers[static_cast<std::size_t>(result.labels[i])]);
    }
    return result;
}

}  // namespace tdats
