#include "tdats/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "tdats/errors.hpp"

namespace tdats {

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw ParameterError("time series value at index " + std::to_string(i) +
                                 " is not finite");
        }
    }
}

TimeSeries moving_average(const TimeSeries& series, int window) {
    const std::size_t n = series.size();
    if (window < 1 || static_cast<std::size_t>(window) > n) {
        throw ParameterError("moving average window must be in [1, T], got " +
                             std::to_string(window));
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t used = std::min<std::size_t>(i + 1, window);
        double sum = 0.0;
        for (std::size_t t = i + 1 - used; t <= i; ++t) sum += series[t];
        out[i] = sum / static_cast<double>(used);
    }
    return TimeSeries(std::move(out));
}

TimeSeries detrend_standardize(const TimeSeries& series) {
    const std::size_t n = series.size();
    if (n < 3) throw ParameterError("detrend_standardize needs at least 3 observations");

    // OLS of x_t on t = 1..T.
    const double t_mean = (static_cast<double>(n) + 1.0) / 2.0;
    double x_mean = 0.0;
    for (double v : series) x_mean += v;
    x_mean /= static_cast<double>(n);

    double sxt = 0.0;
    double stt = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = static_cast<double>(i + 1) - t_mean;
        sxt += dt * (series[i] - x_mean);
        stt += dt * dt;
    }
    const double slope = sxt / stt;

    std::vector<double> resid(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        resid[i] = series[i] - x_mean - slope * (static_cast<double>(i + 1) - t_mean);
        ss += resid[i] * resid[i];
    }
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (!(sd > 0.0)) {
        throw DegenerateInputError("series is exactly linear: zero residual variance");
    }
    for (double& r : resid) r /= sd;
    return TimeSeries(std::move(resid));
}

AcfProfile acf(const TimeSeries& series, int max_lag) {
    const std::size_t n = series.size();
    if (n < 2) throw ParameterError("acf needs at least 2 observations");
    if (max_lag < 0 || static_cast<std::size_t>(max_lag) >= n) {
        throw ParameterError("acf max_lag must satisfy 0 <= max_lag < T");
    }
    double mean = 0.0;
    for (double v : series) mean += v;
    mean /= static_cast<double>(n);

    double denom = 0.0;
    for (double v : series) denom += (v - mean) * (v - mean);
    if (!(denom > 0.0)) throw DegenerateInputError("constant series has undefined ACF");

    AcfProfile profile;
    profile.series_length = n;
    profile.rho.resize(static_cast<std::size_t>(max_lag) + 1);
    profile.rho[0] = 1.0;
    for (int h = 1; h <= max_lag; ++h) {
        double num = 0.0;
        for (std::size_t t = 0; t + h < n; ++t) {
            num += (series[t] - mean) * (series[t + h] - mean);
        }
        profile.rho[static_cast<std::size_t>(h)] = num / denom;
    }
    return profile;
}

int default_acf_scan_lags(std::size_t series_length) {
    if (series_length < 3) return 1;
    const int by_rule = static_cast<int>(10.0 * std::log10(static_cast<double>(series_length)));
    return std::max(1, std::min<int>(static_cast<int>(series_length) - 2, by_rule));
}

namespace {

int resolve_scan_lags(const TimeSeries& series, int max_lag) {
    if (max_lag == 0) return default_acf_scan_lags(series.size());
    if (max_lag < 1 || static_cast<std::size_t>(max_lag) >= series.size()) {
        throw ParameterError("tau scan range must satisfy 1 <= max_lag < T");
    }
    return max_lag;
}

}  // namespace

LagSelection select_tau_acf(const TimeSeries& series, int max_lag) {
    const int lags = resolve_scan_lags(series, max_lag);
    const AcfProfile profile = acf(series, lags);
    const double band = 2.0 / std::sqrt(static_cast<double>(series.size()));
    for (int h = 1; h <= lags; ++h) {
        if (std::abs(profile.rho[static_cast<std::size_t>(h)]) < band) return {h, false};
    }
    return {lags, true};
}

LagSelection select_tau_decay(const TimeSeries& series, int max_lag) {
    const int lags = resolve_scan_lags(series, max_lag);
    const AcfProfile profile = acf(series, lags);
    const double band = 2.0 / std::sqrt(static_cast<double>(series.size()));
    for (int tau = 1; tau <= lags; ++tau) {
        const double r = profile.rho[static_cast<std::size_t>(tau)];
        if (r == 0.0) continue;  // guarded division: candidate skipped
        const double prev = profile.rho[static_cast<std::size_t>(tau) - 1];
        if (std::abs((r - prev) / r) > 1.0 / std::numbers::e && r < band) return {tau, false};
    }
    return {lags, true};
}

namespace {

// Squared distance between delay vectors starting at a and b, dimension d.
double embed_dist2(const std::vector<double>& x, std::size_t a, std::size_t b, int d, int tau) {
    double s = 0.0;
    for (int m = 0; m < d; ++m) {
        const double diff = x[a + static_cast<std::size_t>(m) * tau] -
                            x[b + static_cast<std::size_t>(m) * tau];
        s += diff * diff;
    }
    return s;
}

}  // namespace

DimSelection select_dim_fnn(const TimeSeries& series, int tau, int max_d,
                            const FnnOptions& options) {
    if (tau < 1) throw ParameterError("fnn delay must be positive");
    if (max_d < 1) throw ParameterError("fnn max dimension must be positive");
    const std::size_t n = series.size();
    if (n <= static_cast<std::size_t>(max_d) * static_cast<std::size_t>(tau) + 1) {
        throw ParameterError("series too short for FNN scan up to dimension " +
                             std::to_string(max_d));
    }

    const std::vector<double>& x = series.values();
    double scale = 0.0;
    for (double v : x) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) throw DegenerateInputError("constant zero series has no neighbours");
    const double floor = options.added_coordinate_floor > 0.0 ? options.added_coordinate_floor
                                                              : 1e-8 * scale;

    for (int d = 1; d <= max_d; ++d) {
        // Points present in both the d and d+1 embeddings.
        const std::size_t count = n - static_cast<std::size_t>(d) * tau;
        if (count < 2) throw ParameterError("series too short at dimension " + std::to_string(d));

        std::size_t false_count = 0;
        bool any_positive_distance = false;
        for (std::size_t i = 0; i < count; ++i) {
            double best = std::numeric_limits<double>::infinity();
            bool is_false = false;
            for (std::size_t j = 0; j < count; ++j) {
                if (j == i) continue;
                const double d2 = embed_dist2(x, i, j, d, tau);
                const double added = std::abs(x[i + static_cast<std::size_t>(d) * tau] -
                                              x[j + static_cast<std::size_t>(d) * tau]);
                if (d2 < best) {
                    best = d2;
                    is_false = added > floor && added * added > options.r_tol * options.r_tol * d2;
                } else if (d2 == best) {
                    // Ties (exact duplicates): pessimistic, false if any tie fails.
                    is_false = is_false ||
                               (added > floor && added * added > options.r_tol * options.r_tol * d2);
                }
            }
            if (best > 0.0) any_positive_distance = true;
            if (is_false) ++false_count;
        }
        if (!any_positive_distance) {
            throw DegenerateInputError("all embedded points coincide; FNN undefined");
        }
        const double fraction = static_cast<double>(false_count) / static_cast<double>(count);
        if (fraction < options.false_fraction_threshold) return {d, false};
    }
    return {max_d, true};
}

TimeSeries spline_resample(const TimeSeries& series, std::size_t n_out) {
    const std::size_t n = series.size();
    if (n < 4) throw ParameterError("spline_resample needs at least 4 knots");
    if (n_out < 2) throw ParameterError("spline_resample needs n_out >= 2");

    const double h = 2.0 * std::numbers::pi / static_cast<double>(n - 1);

    // Natural cubic spline: tridiagonal system for second derivatives.
    std::vector<double> m(n, 0.0);
    const std::size_t interior = n - 2;
    std::vector<double> diag(interior, 2.0 * h / 3.0);
    std::vector<double> off(interior, h / 6.0);
    std::vector<double> rhs(interior);
    for (std::size_t i = 0; i < interior; ++i) {
        rhs[i] = (series[i + 2] - 2.0 * series[i + 1] + series[i]) / h;
    }
    for (std::size_t i = 1; i < interior; ++i) {
        const double w = off[i] / diag[i - 1];
        diag[i] -= w * off[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    m[interior] = rhs[interior - 1] / diag[interior - 1];
    for (std::size_t i = interior - 1; i >= 1; --i) {
        m[i] = (rhs[i - 1] - off[i - 1] * m[i + 1]) / diag[i - 1];
        if (i == 1) break;
    }

    std::vector<double> out(n_out);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n_out - 1);
    for (std::size_t k = 0; k < n_out; ++k) {
        const double t = std::min(static_cast<double>(k) * step, 2.0 * std::numbers::pi);
        std::size_t cell = std::min<std::size_t>(static_cast<std::size_t>(t / h), n - 2);
        const double a = (static_cast<double>(cell + 1) * h - t) / h;
        const double b = 1.0 - a;
        out[k] = a * series[cell] + b * series[cell + 1] +
                 ((a * a * a - a) * m[cell] + (b * b * b - b) * m[cell + 1]) * h * h / 6.0;
    }
    return TimeSeries(std::move(out));
}

}  // namespace tdats
