#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "tdats/diagram.hpp"
#include "tdats/series.hpp"

namespace tdats {

/// Periodicity score in [0, 1] from the strongest dim-1 feature of a
/// sliding-window diagram built with maxscale sqrt(3): near 0 for periodic
/// input, near 1 for noise; 1 exactly when no cycle exists.
double sw1pers_score(const PersistenceDiagram& diagram);

struct LifetimeStats {
    std::size_t count = 0;
    double max_lifetime = 0.0;
    std::size_t relevant_count = 0;
    double mean_lifetime = 0.0;
    double sum_lifetime = 0.0;
};

/// The five lifetime statistics per homology dimension (0 and 1); relevant
/// features are those with lifetime >= half the maximum.
struct LifetimeFeatures {
    std::array<LifetimeStats, 2> per_dim;
};

LifetimeFeatures lifetime_features(const PersistenceDiagram& diagram);

/// Betti numbers sampled on n_grid points spanning [0, maxscale]; entry l
/// counts features with birth <= lambda_l <= death.
std::vector<int> betti_sequence(const PersistenceDiagram& diagram, int dim,
                                std::size_t n_grid = 300);

/// Concatenated Betti sequences for dimensions 0 and 1.
std::vector<int> betti_concat(const PersistenceDiagram& diagram, std::size_t n_grid = 300);

struct WindowFeature {
    std::size_t window = 0;  // 1-based start index
    double level = 0.0;
    double diff = 0.0;
    double landscape_l1 = 0.0;
};

/// Sliding-window break features: per window of window_n embedded points,
/// the window-start level, its first difference, and the L1 norm of all
/// dim-1 landscape layers of the window's Rips diagram.
std::vector<WindowFeature> window_break_features(const TimeSeries& series, int window_n = 50,
                                                 int embed_d = 4);

struct KMeansResult {
    std::vector<int> labels;
    std::vector<std::vector<double>> centers;
    double inertia = 0.0;
    std::size_t iterations = 0;
};

/// Lloyd iteration from a seeded k-means++ initialization; empty clusters
/// are reseeded to the point farthest from its assigned center.
KMeansResult kmeans(const std::vector<std::vector<double>>& features, int k, std::uint64_t seed,
                    int max_iter = 100);

}  // namespace tdats
