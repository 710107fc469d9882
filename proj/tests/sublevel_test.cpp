#include <tdats/sublevel.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>
#include <tdats/errors.hpp>
#include <tdats/metrics.hpp>

#include "test_util.hpp"

using namespace tdats;

TEST(Sublevel1D, ThreeBasinFunction) {
    const GridFunction1D f{{1, 0.5, 1, 1.5, 0.5, 0, 1, 1, 0.5, 1}, 1.0};
    const PersistenceDiagram diagram = sublevel_persistence_1d(f);
    ASSERT_EQ(diagram.features.size(), 3u);
    EXPECT_EQ(diagram.features[0], (DiagramFeature{0, 0.0, 1.5}));
    EXPECT_EQ(diagram.features[1], (DiagramFeature{0, 0.5, 1.5}));
    EXPECT_EQ(diagram.features[2], (DiagramFeature{0, 0.5, 1.0}));
}

TEST(Sublevel1D, MonotoneFunctionHasOneComponent) {
    const PersistenceDiagram diagram = sublevel_persistence_1d({{0, 1, 2}, 1.0});
    ASSERT_EQ(diagram.features.size(), 1u);
    EXPECT_EQ(diagram.features[0], (DiagramFeature{0, 0.0, 2.0}));
}

TEST(Sublevel1D, TwoMinimaElderRule) {
    const PersistenceDiagram diagram = sublevel_persistence_1d({{0, 2, 1, 3}, 1.0});
    ASSERT_EQ(diagram.features.size(), 2u);
    EXPECT_EQ(diagram.features[0], (DiagramFeature{0, 0.0, 3.0}));
    EXPECT_EQ(diagram.features[1], (DiagramFeature{0, 1.0, 2.0}));
}

TEST(Sublevel1D, PlateauCountsAsOneMinimum) {
    const PersistenceDiagram diagram = sublevel_persistence_1d({{1, 0, 0, 1}, 1.0});
    ASSERT_EQ(diagram.features.size(), 1u);
    EXPECT_EQ(diagram.features[0], (DiagramFeature{0, 0.0, 1.0}));
}

TEST(Sublevel1D, FeatureCountEqualsStrictLocalMinima) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int rep = 0; rep < 30; ++rep) {
        std::vector<double> values(20);
        for (double& v : values) v = uniform(rng);

        // Count strict minima after collapsing plateaus.
        std::vector<double> cells;
        for (double v : values) {
            if (cells.empty() || cells.back() != v) cells.push_back(v);
        }
        std::size_t minima = 0;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const bool left_ok = i == 0 || cells[i - 1] > cells[i];
            const bool right_ok = i + 1 == cells.size() || cells[i + 1] > cells[i];
            if (left_ok && right_ok) ++minima;
        }
        EXPECT_EQ(sublevel_persistence_1d({values, 1.0}).features.size(), minima);
    }
}

TEST(Sublevel1D, GlobalMaxAppearsExactlyOnce) {
    const GridFunction1D f{{0.3, 0.8, 0.1, 0.7, 0.2, 0.9}, 1.0};
    const PersistenceDiagram diagram = sublevel_persistence_1d(f);
    std::size_t at_max = 0;
    for (const auto& feature : diagram.features) {
        if (feature.death == 0.9) ++at_max;
    }
    EXPECT_EQ(at_max, 1u);
}

TEST(Sublevel1D, BottleneckStabilityUnderPerturbation) {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> f(30), g(30);
        double sup = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            f[i] = uniform(rng);
            g[i] = f[i] + 0.2 * (uniform(rng) - 0.5);
            sup = std::max(sup, std::abs(g[i] - f[i]));
        }
        const double dist = bottleneck(sublevel_persistence_1d({f, 1.0}),
                                       sublevel_persistence_1d({g, 1.0}), 0);
        EXPECT_LE(dist, sup + 1e-9);
    }
}

TEST(Sublevel1D, ShiftEquivariance) {
    const std::vector<double> values{0.4, 0.1, 0.8, 0.3, 0.9, 0.2, 0.6};
    const PersistenceDiagram base = sublevel_persistence_1d({values, 1.0});
    std::vector<double> shifted(values);
    for (double& v : shifted) v += 2.5;
    const PersistenceDiagram moved = sublevel_persistence_1d({shifted, 1.0});
    ASSERT_EQ(base.features.size(), moved.features.size());
    for (std::size_t i = 0; i < base.features.size(); ++i) {
        EXPECT_NEAR(moved.features[i].birth, base.features[i].birth + 2.5, 1e-12);
        EXPECT_NEAR(moved.features[i].death, base.features[i].death + 2.5, 1e-12);
    }
}

TEST(Dtm, QueryOnCloudPointIsZero) {
    const PointCloud cloud(1, {0.0, 1.0, 2.0});
    const std::vector<double> values = dtm(cloud, PointCloud(1, {1.0}), 0.3);  // k = 1
    ASSERT_EQ(values.size(), 1u);
    EXPECT_DOUBLE_EQ(values[0], 0.0);
}

TEST(Dtm, SingleNeighbourDistance) {
    const PointCloud cloud(1, {0.0, 1.0});
    const std::vector<double> values = dtm(cloud, PointCloud(1, {0.25}), 0.4);  // k = 1
    EXPECT_DOUBLE_EQ(values[0], 0.25);
}

TEST(Dtm, TwoNeighbourRootMeanSquare) {
    // k = floor(0.67 * 3) = 2; the two nearest neighbours of 0 are {0, 1},
    // so the value is sqrt((0 + 1) / 2).
    const PointCloud cloud(1, {0.0, 1.0, 5.0});
    const std::vector<double> values = dtm(cloud, PointCloud(1, {0.0}), 0.67);
    EXPECT_NEAR(values[0], std::sqrt(0.5), 1e-12);
}

TEST(Dtm, RejectsBadArguments) {
    const PointCloud cloud(1, {0.0, 1.0});
    EXPECT_THROW(dtm(cloud, PointCloud(1, {0.5}), 0.0), ParameterError);
    EXPECT_THROW(dtm(cloud, PointCloud(1, {0.5}), 1.0), ParameterError);
    EXPECT_THROW(dtm(cloud, PointCloud(2, {0.5, 0.5}), 0.5), ParameterError);
}

TEST(Dtm, LipschitzInTheQuery) {
    const PointCloud cloud = testutil::random_cloud(40, 2, 61);
    std::mt19937_64 rng(62);
    std::uniform_real_distribution<double> uniform(-1.5, 1.5);
    for (int rep = 0; rep < 50; ++rep) {
        const double ax = uniform(rng), ay = uniform(rng);
        const double bx = uniform(rng), by = uniform(rng);
        const std::vector<double> v = dtm(cloud, PointCloud(2, {ax, ay, bx, by}), 0.2);
        const double query_dist = std::hypot(ax - bx, ay - by);
        EXPECT_LE(std::abs(v[0] - v[1]), query_dist + 1e-12);
    }
}

TEST(GridSublevel, ConstantGridKeepsOnlyGlobalComponent) {
    const GridFunction2D grid{2, 3, {4, 4, 4, 4, 4, 4}, 1.0, 1.0};
    const PersistenceDiagram diagram = grid_sublevel_persistence_h0(grid);
    ASSERT_EQ(diagram.features.size(), 1u);
    EXPECT_EQ(diagram.features[0], (DiagramFeature{0, 4.0, 4.0}));
}

TEST(GridSublevel, TwoBasinsMergeOverRidge) {
    const GridFunction2D grid{3, 5,
                              {1.0, 1.0, 1.0, 1.0, 1.0,
                               1.0, 0.1, 0.9, 0.3, 1.0,
                               1.0, 1.0, 1.0, 1.0, 1.0},
                              1.0, 1.0};
    const PersistenceDiagram diagram = grid_sublevel_persistence_h0(grid);
    ASSERT_EQ(diagram.features.size(), 2u);
    EXPECT_EQ(diagram.features[0], (DiagramFeature{0, 0.1, 1.0}));
    EXPECT_EQ(diagram.features[1], (DiagramFeature{0, 0.3, 0.9}));
}

TEST(GridSublevel, DtmOfCircleCloud) {
    const GridFunction2D grid = dtm_grid(testutil::circle_cloud(60), 0.065, 0.05);
    const PersistenceDiagram diagram = grid_sublevel_persistence_h0(grid);
    ASSERT_GE(diagram.features.size(), 2u);
    // Canonical order puts the global component first; it must dominate.
    EXPECT_DOUBLE_EQ(diagram.features[0].death, diagram.maxscale);
    EXPECT_GT(diagram.features[0].persistence(), diagram.features[1].persistence());
}

TEST(GridSublevel, RejectsTinyGrids) {
    EXPECT_THROW(grid_sublevel_persistence_h0({1, 3, {1, 2, 3}, 1.0, 1.0}), ParameterError);
}
