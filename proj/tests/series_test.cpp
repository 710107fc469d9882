#include <tdats/series.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>
#include <tdats/errors.hpp>

#include "test_util.hpp"

using namespace tdats;

TEST(MovingAverage, ConstantSeriesIsFixedPoint) {
    const TimeSeries series({5, 5, 5, 5});
    for (int window : {1, 2, 3, 4}) {
        const TimeSeries out = moving_average(series, window);
        for (double v : out) EXPECT_DOUBLE_EQ(v, 5.0);
    }
}

TEST(MovingAverage, TrailingWindowWithPartialStart) {
    const TimeSeries out = moving_average(TimeSeries({1, 2, 3, 4}), 2);
    const std::vector<double> expected{1.0, 1.5, 2.5, 3.5};
    ASSERT_EQ(out.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_DOUBLE_EQ(out[i], expected[i]);
}

TEST(MovingAverage, WindowOneIsIdentity) {
    const TimeSeries series(testutil::gaussian_noise(25, 1));
    const TimeSeries out = moving_average(series, 1);
    for (std::size_t i = 0; i < series.size(); ++i) EXPECT_DOUBLE_EQ(out[i], series[i]);
}

TEST(MovingAverage, RejectsBadWindows) {
    const TimeSeries series({1, 2, 3});
    EXPECT_THROW(moving_average(series, 0), ParameterError);
    EXPECT_THROW(moving_average(series, 4), ParameterError);
}

TEST(DetrendStandardize, PerfectLineIsDegenerate) {
    EXPECT_THROW(detrend_standardize(TimeSeries({1, 2, 3, 4, 5})), DegenerateInputError);
}

TEST(DetrendStandardize, AlternatingSeries) {
    const TimeSeries out = detrend_standardize(TimeSeries({0, 1, 0, 1, 0, 1}));
    double mean = 0.0;
    for (double v : out) mean += v;
    mean /= static_cast<double>(out.size());
    EXPECT_NEAR(mean, 0.0, 1e-9);
    double ss = 0.0;
    for (double v : out) ss += (v - mean) * (v - mean);
    EXPECT_NEAR(std::sqrt(ss / static_cast<double>(out.size() - 1)), 1.0, 1e-9);
    // Residuals of the flat trend alternate in sign.
    for (std::size_t i = 0; i + 1 < out.size(); ++i) EXPECT_LT(out[i] * out[i + 1], 0.0);
}

TEST(DetrendStandardize, OutputAlwaysStandardized) {
    for (std::uint64_t seed = 10; seed < 15; ++seed) {
        std::vector<double> values = testutil::gaussian_noise(60, seed);
        for (std::size_t t = 0; t < values.size(); ++t) values[t] += 0.3 * static_cast<double>(t);
        const TimeSeries out = detrend_standardize(TimeSeries(values));
        double mean = 0.0;
        for (double v : out) mean += v;
        mean /= static_cast<double>(out.size());
        double ss = 0.0;
        for (double v : out) ss += (v - mean) * (v - mean);
        EXPECT_NEAR(mean, 0.0, 1e-9);
        EXPECT_NEAR(std::sqrt(ss / static_cast<double>(out.size() - 1)), 1.0, 1e-9);
    }
}

TEST(Acf, LagZeroIsOne) {
    const TimeSeries series(testutil::gaussian_noise(40, 2));
    EXPECT_DOUBLE_EQ(acf(series, 10).rho[0], 1.0);
}

TEST(Acf, AlternatingSeriesClosedForm) {
    const std::size_t n = 64;
    std::vector<double> values(n);
    for (std::size_t t = 0; t < n; ++t) values[t] = (t % 2 == 0) ? 1.0 : -1.0;
    const AcfProfile profile = acf(TimeSeries(values), 1);
    EXPECT_NEAR(profile.rho[1], -static_cast<double>(n - 1) / static_cast<double>(n), 1e-12);
}

TEST(Acf, CosineQuarterPeriodNearZero) {
    const AcfProfile profile = acf(testutil::cosine_series(480, 12), 5);
    EXPECT_LT(std::abs(profile.rho[3]), 0.02);
}

TEST(Acf, BoundedBelowOnePlusTolerance) {
    for (std::uint64_t seed = 3; seed < 8; ++seed) {
        const AcfProfile profile = acf(TimeSeries(testutil::gaussian_noise(50, seed)), 20);
        for (double rho : profile.rho) EXPECT_LE(std::abs(rho), 1.0 + 1e-12);
    }
}

TEST(Acf, RejectsDegenerateAndBadLags) {
    EXPECT_THROW(acf(TimeSeries({2, 2, 2, 2}), 2), DegenerateInputError);
    EXPECT_THROW(acf(TimeSeries({1, 2, 3}), 3), ParameterError);
}

TEST(SelectTauAcf, CosinePeriodTwelve) {
    const LagSelection tau = select_tau_acf(testutil::cosine_series(480, 12));
    EXPECT_EQ(tau.lag, 3);
    EXPECT_FALSE(tau.capped);
}

TEST(SelectTauAcf, WhiteNoisePicksLagOne) {
    const LagSelection tau = select_tau_acf(TimeSeries(testutil::gaussian_noise(4000, 7)));
    EXPECT_EQ(tau.lag, 1);
}

TEST(SelectTauAcf, LongerPeriodGivesLargerTau) {
    const LagSelection short_period = select_tau_acf(testutil::cosine_series(480, 12));
    const LagSelection long_period = select_tau_acf(testutil::cosine_series(480, 96));
    EXPECT_GT(long_period.lag, short_period.lag);
}

TEST(SelectTauAcf, AffineInvariance) {
    const TimeSeries base = testutil::cosine_series(480, 48);
    std::vector<double> scaled(base.values());
    for (double& v : scaled) v = -3.7 * v + 11.0;
    EXPECT_EQ(select_tau_acf(base).lag, select_tau_acf(TimeSeries(scaled)).lag);
}

TEST(SelectTauDecay, WhiteNoiseDropsImmediately) {
    // rho ~ [1, eps, ...]: the relative drop at lag 1 is far above 1/e and
    // |rho_1| sits inside the significance band.
    const LagSelection tau = select_tau_decay(TimeSeries(testutil::gaussian_noise(400, 11)));
    EXPECT_EQ(tau.lag, 1);
    EXPECT_FALSE(tau.capped);
}

TEST(SelectTauDecay, CosineMatchesAcfRule) {
    const TimeSeries series = testutil::cosine_series(480, 12);
    const LagSelection decay = select_tau_decay(series);
    const LagSelection plain = select_tau_acf(series);
    EXPECT_FALSE(decay.capped);
    EXPECT_GE(decay.lag, plain.lag);
}

TEST(SelectTauDecay, ZeroRhoCandidateIsSkipped) {
    // Exact [0,-1,0,1] cycle: rho_1 = 0 exactly, so lag 1 must be skipped
    // even though the drop condition would divide by zero there.
    std::vector<double> values;
    for (int cycle = 0; cycle < 25; ++cycle) {
        values.insert(values.end(), {0.0, -1.0, 0.0, 1.0});
    }
    const LagSelection tau = select_tau_decay(TimeSeries(values));
    EXPECT_EQ(tau.lag, 2);
}

TEST(SelectDimFnn, CosineEmbedsInThePlane) {
    const DimSelection dim = select_dim_fnn(testutil::cosine_series(480, 12), 3, 6);
    EXPECT_EQ(dim.dim, 2);
    EXPECT_FALSE(dim.capped);
}

TEST(SelectDimFnn, ConstantSeriesIsDegenerate) {
    EXPECT_THROW(select_dim_fnn(TimeSeries(std::vector<double>(100, 1.0)), 1, 3),
                 DegenerateInputError);
}

TEST(SelectDimFnn, WhiteNoiseStaysHigh) {
    const DimSelection dim = select_dim_fnn(TimeSeries(testutil::gaussian_noise(500, 13)), 1, 6);
    EXPECT_TRUE(dim.capped || dim.dim >= 4);
}

TEST(SelectDimFnn, RejectsShortSeries) {
    EXPECT_THROW(select_dim_fnn(TimeSeries({1, 2, 3, 4}), 2, 3), ParameterError);
}

TEST(SplineResample, ReproducesKnotsOnAlignedGrid) {
    const TimeSeries series(testutil::gaussian_noise(30, 17));
    const TimeSeries out = spline_resample(series, series.size());
    ASSERT_EQ(out.size(), series.size());
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_NEAR(out[i], series[i], 1e-9);
}

TEST(SplineResample, AffineDataStaysAffine) {
    const std::size_t n = 20;
    std::vector<double> ramp(n);
    for (std::size_t i = 0; i < n; ++i) ramp[i] = 0.5 + 2.0 * static_cast<double>(i);
    const std::size_t n_out = 2 * n;
    const TimeSeries out = spline_resample(TimeSeries(ramp), n_out);
    // The resampled values must lie on the same line over [0, 2*pi].
    const double slope = 2.0 * static_cast<double>(n - 1) / (2.0 * std::numbers::pi);
    for (std::size_t k = 0; k < n_out; ++k) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(n_out - 1);
        EXPECT_NEAR(out[k], 0.5 + slope * t, 1e-9);
    }
}

TEST(SplineResample, ResamplesToRequestedLength) {
    const TimeSeries out = spline_resample(testutil::cosine_series(480, 12), 216);
    EXPECT_EQ(out.size(), 216u);
}

TEST(SplineResample, RejectsBadArguments) {
    EXPECT_THROW(spline_resample(TimeSeries({1, 2, 3}), 10), ParameterError);
    EXPECT_THROW(spline_resample(TimeSeries({1, 2, 3, 4}), 1), ParameterError);
}
