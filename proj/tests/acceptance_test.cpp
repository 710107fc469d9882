// Acceptance suite: one test per criterion, each asserting its stated
// tolerances and time budget.  Tolerances are pinned here, not configurable.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>
#include <tdats/tdats.hpp>

#include "oracle.hpp"
#include "test_util.hpp"

using namespace tdats;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

// Criterion 1: exact reproduction of the three-basin sublevel diagram.
TEST(Acceptance, C01_SublevelThreeBasinExact) {
    const GridFunction1D f{{1, 0.5, 1, 1.5, 0.5, 0, 1, 1, 0.5, 1}, 1.0};
    const auto start = Clock::now();
    const PersistenceDiagram diagram = sublevel_persistence_1d(f);
    const double elapsed = seconds_since(start);

    ASSERT_EQ(diagram.features.size(), 3u);
    EXPECT_EQ(diagram.features[0], (DiagramFeature{0, 0.0, 1.5}));
    EXPECT_EQ(diagram.features[1], (DiagramFeature{0, 0.5, 1.5}));
    EXPECT_EQ(diagram.features[2], (DiagramFeature{0, 0.5, 1.0}));
    EXPECT_LT(elapsed, 1e-3);
}

// Criterion 2: Rips structure of 60 evenly spaced unit-circle points.
TEST(Acceptance, C02_SixtyPointCircleStructure) {
    const auto start = Clock::now();
    const PointCloud cloud = testutil::circle_cloud(60);
    const DistanceMatrix dist = distance_matrix(cloud, Metric::euclidean);
    const PersistenceDiagram diagram = rips_persistence(dist, 1, 2.0);
    const double elapsed = seconds_since(start);

    const auto dim0 = diagram.features_of(0);
    ASSERT_EQ(dim0.size(), 60u);
    std::size_t at_cap = 0;
    for (const auto& f : dim0) {
        EXPECT_DOUBLE_EQ(f.birth, 0.0);
        if (f.death == 2.0) ++at_cap;
    }
    EXPECT_EQ(at_cap, 1u);

    const auto dim1 = diagram.features_of(1);
    ASSERT_GE(dim1.size(), 1u);
    EXPECT_GE(dim1[0].death, 1.70);
    EXPECT_LE(dim1[0].death, 1.74);
    EXPECT_LT(dim1[0].birth, 0.35);
    // Dominance: no second cycle comes close.
    for (std::size_t i = 1; i < dim1.size(); ++i) {
        EXPECT_LT(dim1[i].persistence(), 0.5 * dim1[0].persistence());
    }
    EXPECT_LT(elapsed, 1.0);
}

// Criterion 3: pairwise bottleneck distances of the three delay-embedded
// cosines reproduce the reported table ordering and values.
TEST(Acceptance, C03_CosineBottleneckTable) {
    const auto start = Clock::now();

    struct Expected {
        int d;
        double tolerance;
        std::array<double, 3> dim0;  // pairs (1,2), (1,3), (2,3)
        std::array<double, 3> dim1;
    };
    const std::vector<Expected> table{
        {2, 0.1, {0.26, 0.26, 0.07}, {0.39, 0.45, 0.06}},
        {3, 0.2, {0.36, 0.36, 0.09}, {0.53, 0.63, 0.09}},
        {15, 0.2, {0.73, 0.73, 0.18}, {1.09, 1.28, 0.19}},
    };

    const std::array<double, 3> periods{12.0, 48.0, 96.0};
    std::array<TimeSeries, 3> series;
    std::array<int, 3> taus{};
    for (std::size_t s = 0; s < 3; ++s) {
        series[s] = testutil::cosine_series(480, periods[s]);
        taus[s] = select_tau_acf(series[s]).lag;
    }

    for (const auto& expected : table) {
        std::array<PersistenceDiagram, 3> diagrams;
        for (std::size_t s = 0; s < 3; ++s) {
            diagrams[s] = rips_persistence(takens_embed(series[s], expected.d, taus[s]), 1);
        }
        const std::array<std::pair<std::size_t, std::size_t>, 3> pairs{
            {{0, 1}, {0, 2}, {1, 2}}};
        for (int dim : {0, 1}) {
            std::array<double, 3> got{};
            for (std::size_t p = 0; p < 3; ++p) {
                got[p] = bottleneck(diagrams[pairs[p].first], diagrams[pairs[p].second], dim);
            }
            // Ordering: (1,2) and (1,3) each exceed (2,3).
            EXPECT_GT(got[0], got[2]) << "d=" << expected.d << " dim=" << dim;
            EXPECT_GT(got[1], got[2]) << "d=" << expected.d << " dim=" << dim;
            const auto& reference = dim == 0 ? expected.dim0 : expected.dim1;
            for (std::size_t p = 0; p < 3; ++p) {
                EXPECT_NEAR(got[p], reference[p], expected.tolerance)
                    << "d=" << expected.d << " dim=" << dim << " pair=" << p;
            }
        }
    }
    EXPECT_LT(seconds_since(start), 60.0);
}

// Criterion 4: sliding-window periodicity scores separate the periodic cases
// from white noise across ten seeded repetitions.
TEST(Acceptance, C04_Sw1persDiscrimination) {
    const auto start = Clock::now();
    const int T = 480;
    const double sd = 0.8;  // variance 0.64
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> normal(0.0, sd);
        std::vector<double> noise(T);
        for (double& e : noise) e = normal(rng);

        std::array<std::vector<double>, 4> cases;
        for (auto& c : cases) c.resize(T);
        for (int t = 1; t <= T; ++t) {
            const double e = noise[t - 1];
            cases[0][t - 1] = std::cos(2.0 * std::numbers::pi * t / 12.0) + e;
            cases[1][t - 1] =
                0.05 * t + 10.0 * (std::cos(2.0 * std::numbers::pi * (t - 10.0) / 48.0) + e);
            cases[2][t - 1] =
                10.0 * (std::cos(2.0 * std::numbers::pi * t / 12.0) + e) * std::exp(-0.01 * t);
            cases[3][t - 1] = e;
        }

        std::array<double, 4> scores{};
        for (std::size_t c = 0; c < 4; ++c) {
            const PointCloud cloud = sw1pers_cloud(TimeSeries(cases[c]), 15, 201, 5);
            scores[c] = sw1pers_score(rips_persistence(cloud, 1, std::sqrt(3.0)));
        }
        for (std::size_t c = 0; c < 3; ++c) {
            EXPECT_LT(scores[c], 0.3) << "seed " << seed << " case " << c + 1;
            EXPECT_LT(scores[c], scores[3]) << "seed " << seed << " case " << c + 1;
        }
        EXPECT_GT(scores[3], 0.6) << "seed " << seed;
    }
    EXPECT_LT(seconds_since(start), 120.0);
}

// Criterion 5: exact agreement of both distances with exhaustive matching
// oracles, bottleneck <= Wasserstein, and the triangle inequality.
TEST(Acceptance, C05_MetricOracles) {
    std::mt19937_64 rng(1005);
    for (int rep = 0; rep < 200; ++rep) {
        const int dim = rep % 2;
        const PersistenceDiagram a = testutil::random_diagram(rng() % 7, dim, rng());
        const PersistenceDiagram b = testutil::random_diagram(rng() % 7, dim, rng());
        EXPECT_NEAR(bottleneck(a, b, dim), oracle::brute_force_bottleneck(a, b, dim), 1e-9);
        const double w1 = wasserstein(a, b, 1, dim);
        EXPECT_NEAR(w1, oracle::brute_force_wasserstein(a, b, 1, dim), 1e-9);
        EXPECT_LE(bottleneck(a, b, dim), w1 + 1e-9);
    }
    for (int rep = 0; rep < 100; ++rep) {
        const PersistenceDiagram a = testutil::random_diagram(1 + rng() % 5, 0, rng());
        const PersistenceDiagram b = testutil::random_diagram(1 + rng() % 5, 0, rng());
        const PersistenceDiagram c = testutil::random_diagram(1 + rng() % 5, 0, rng());
        EXPECT_LE(bottleneck(a, c, 0), bottleneck(a, b, 0) + bottleneck(b, c, 0) + 1e-9);
        EXPECT_LE(wasserstein(a, c, 1, 0),
                  wasserstein(a, b, 1, 0) + wasserstein(b, c, 1, 0) + 1e-9);
    }
}

// Criterion 6: the optimized Rips reduction equals the naive full
// boundary-matrix reduction on random clouds.
TEST(Acceptance, C06_RipsOracleEquivalence) {
    std::mt19937_64 rng(1006);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 2 + rng() % 11;
        const std::size_t dim = 1 + rng() % 3;
        const PointCloud cloud = testutil::random_cloud(n, dim, rng());
        const DistanceMatrix dist = distance_matrix(cloud, Metric::euclidean);
        // Alternate between the full filtration and a truncated cap.
        const double maxscale = rep % 3 == 0 ? 0.7 * dist.max_entry() : dist.max_entry();
        const PersistenceDiagram fast = rips_persistence(dist, 1, maxscale);
        const PersistenceDiagram naive = oracle::naive_rips_persistence(dist, 1, maxscale);
        ASSERT_EQ(fast.features.size(), naive.features.size()) << "rep " << rep;
        for (std::size_t i = 0; i < fast.features.size(); ++i) {
            EXPECT_EQ(fast.features[i], naive.features[i]) << "rep " << rep << " feature " << i;
        }
    }
}

// Criterion 7: Walsh function orthogonality, Parseval, fast/naive transform
// agreement, and the padding rule.
TEST(Acceptance, C07_WalshSuite) {
    for (std::size_t t2 : {4u, 8u, 16u}) {
        for (std::size_t t1 = 0; t1 < t2; ++t1) {
            for (std::size_t u = 0; u < t2; ++u) {
                long long acc = 0;
                for (std::size_t j = 0; j < t2; ++j) {
                    acc += static_cast<long long>(walsh_function(t1, j, t2)) *
                           static_cast<long long>(walsh_function(u, j, t2));
                }
                EXPECT_EQ(acc, t1 == u ? static_cast<long long>(t2) : 0);
            }
        }
    }

    std::mt19937_64 rng(1007);
    for (std::size_t n : {2u, 3u, 5u, 8u, 13u, 16u, 27u, 32u, 50u, 64u}) {
        const TimeSeries series(testutil::gaussian_noise(n, rng()));
        const WalshTransform fast = wft(series);
        EXPECT_LE(fast.padded_length, 64u);

        double energy = 0.0;
        for (double v : series) energy += v * v;
        double coeff_energy = 0.0;
        for (double c : fast.coeffs) coeff_energy += c * c;
        EXPECT_NEAR(coeff_energy, energy, 1e-9 * std::max(1.0, energy));

        for (std::size_t j = 0; j < fast.padded_length; ++j) {
            double acc = 0.0;
            for (std::size_t t = 0; t < fast.padded_length; ++t) {
                const double x = t < n ? series[t] : 0.0;
                acc += x * static_cast<double>(walsh_function(t, j, fast.padded_length));
            }
            EXPECT_NEAR(fast.coeffs[j], acc / std::sqrt(static_cast<double>(fast.padded_length)),
                        1e-9);
        }
    }

    EXPECT_EQ(wft(TimeSeries(testutil::gaussian_noise(1440, 3))).padded_length, 2048u);
}

// Criterion 8: the closed-form first-order landscape batch agrees with the
// general landscape, and all landscape layers are ordered and 1-Lipschitz.
TEST(Acceptance, C08_LandscapeConsistency) {
    std::mt19937_64 rng(1008);
    std::uniform_real_distribution<double> uniform(-3.0, 3.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<std::vector<double>> batch(2 + rng() % 5);
        for (auto& row : batch) {
            row.resize(3 + rng() % 12);
            for (double& v : row) v = uniform(rng);
        }
        const std::size_t L = 40 + rng() % 100;
        const auto rows = first_order_pl_batch(batch, L);

        double global_min = batch[0][0];
        double global_max = batch[0][0];
        for (const auto& row : batch) {
            for (double v : row) {
                global_min = std::min(global_min, v);
                global_max = std::max(global_max, v);
            }
        }
        for (std::size_t i = 0; i < batch.size(); ++i) {
            const auto [lo, hi] = std::minmax_element(batch[i].begin(), batch[i].end());
            PersistenceDiagram single;
            single.maxscale = global_max;
            single.features.push_back({0, *lo, *hi});
            const PersistenceLandscape pl = landscape(single, 0, L, global_min, global_max);
            for (std::size_t l = 0; l < L; ++l) {
                EXPECT_NEAR(rows[i][l], pl.layers[0][l], 1e-9);
            }
        }

        // Ordering and Lipschitz continuity on a random multi-feature landscape.
        const PersistenceDiagram diagram = testutil::random_diagram(2 + rng() % 8, 0, rng());
        const PersistenceLandscape pl = landscape(diagram, 0, 200);
        const double dx = pl.spacing();
        for (std::size_t nu = 0; nu < pl.layers.size(); ++nu) {
            for (std::size_t l = 0; l < pl.grid.size(); ++l) {
                EXPECT_GE(pl.layers[nu][l], 0.0);
                if (nu + 1 < pl.layers.size()) EXPECT_GE(pl.layers[nu][l], pl.layers[nu + 1][l]);
                if (l + 1 < pl.grid.size()) {
                    EXPECT_LE(std::abs(pl.layers[nu][l + 1] - pl.layers[nu][l]), dx + 1e-12);
                }
            }
        }
    }
}

// Criterion 9: sublevel stability under sup-norm perturbations and Rips
// scale equivariance.
TEST(Acceptance, C09_StabilityProperties) {
    std::mt19937_64 rng(1009);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 10 + rng() % 40;
        std::vector<double> f(n), g(n);
        double sup = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            f[i] = uniform(rng);
            g[i] = f[i] + 0.3 * (uniform(rng) - 0.5);
            sup = std::max(sup, std::abs(g[i] - f[i]));
        }
        const double dist = bottleneck(sublevel_persistence_1d({f, 1.0}),
                                       sublevel_persistence_1d({g, 1.0}), 0);
        EXPECT_LE(dist, sup + 1e-9) << "rep " << rep;
    }

    for (int rep = 0; rep < 5; ++rep) {
        const PointCloud cloud = testutil::random_cloud(15 + rng() % 10, 2 + rng() % 2, rng());
        const DistanceMatrix dist = distance_matrix(cloud, Metric::euclidean);
        const double maxscale = dist.max_entry();
        const PersistenceDiagram base = rips_persistence(dist, 1, maxscale);
        for (double c : {0.5, 3.0}) {
            std::vector<double> scaled(dist.entries());
            for (double& v : scaled) v *= c;
            const PersistenceDiagram rescaled =
                rips_persistence(DistanceMatrix(dist.size(), std::move(scaled)), 1, c * maxscale);
            ASSERT_EQ(rescaled.features.size(), base.features.size());
            for (std::size_t i = 0; i < base.features.size(); ++i) {
                EXPECT_EQ(rescaled.features[i].dim, base.features[i].dim);
                EXPECT_NEAR(rescaled.features[i].birth, c * base.features[i].birth, 1e-9);
                EXPECT_NEAR(rescaled.features[i].death, c * base.features[i].death, 1e-9);
            }
        }
    }
}

// Criterion 10: break-feature pipeline row count, degenerate input, and
// separation between a periodic and a noise regime.
TEST(Acceptance, C10_BreakFeaturePipeline) {
    const auto rows =
        window_break_features(TimeSeries(testutil::gaussian_noise(500, 1010)), 50, 4);
    EXPECT_EQ(rows.size(), 448u);

    const auto constant_rows =
        window_break_features(TimeSeries(std::vector<double>(500, 1.0)), 50, 4);
    EXPECT_EQ(constant_rows.size(), 448u);
    for (const auto& row : constant_rows) EXPECT_DOUBLE_EQ(row.landscape_l1, 0.0);

    // Two regimes: a pure cosine followed by seeded white noise.
    std::mt19937_64 rng(1011);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> series(500);
    for (int t = 0; t < 250; ++t) {
        series[t] = std::cos(2.0 * std::numbers::pi * (t + 1) / 20.0);
    }
    for (int t = 250; t < 500; ++t) series[t] = normal(rng);
    const auto features = window_break_features(TimeSeries(series), 50, 4);
    ASSERT_EQ(features.size(), 448u);

    double periodic_mean = 0.0;
    std::size_t periodic_count = 0;
    double noise_mean = 0.0;
    std::size_t noise_count = 0;
    for (const auto& row : features) {
        if (row.window + 52 <= 250) {  // windows fully inside the cosine half
            periodic_mean += row.landscape_l1;
            ++periodic_count;
        } else if (row.window >= 251) {  // windows fully inside the noise half
            noise_mean += row.landscape_l1;
            ++noise_count;
        }
    }
    ASSERT_GT(periodic_count, 0u);
    ASSERT_GT(noise_count, 0u);
    periodic_mean /= static_cast<double>(periodic_count);
    noise_mean /= static_cast<double>(noise_count);
    EXPECT_GT(periodic_mean, noise_mean);
}
