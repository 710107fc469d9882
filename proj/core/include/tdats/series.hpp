#pragma once

#include <cstddef>
#include <vector>

namespace tdats {

/// Uniformly spaced univariate time series.  Values are finite; most
/// operations additionally require a minimum length, checked per call.
class TimeSeries {
public:
    TimeSeries() = default;
    explicit TimeSeries(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const noexcept { return values_; }

    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

private:
    std::vector<double> values_;
};

/// Sample autocorrelations rho[0..max_lag] plus the length of the series
/// they were estimated from (needed for the 2/sqrt(T) significance band).
struct AcfProfile {
    std::vector<double> rho;
    std::size_t series_length = 0;

    int max_lag() const noexcept { return static_cast<int>(rho.size()) - 1; }
};

/// Result of a delay/dimension search.  `capped` is set when no candidate
/// satisfied the rule within the scan range and the bound was returned.
struct LagSelection {
    int lag = 1;
    bool capped = false;
};

struct DimSelection {
    int dim = 1;
    bool capped = false;
};

struct FnnOptions {
    double r_tol = 10.0;
    double false_fraction_threshold = 0.01;
    // Added-coordinate differences below this floor never count as false;
    // 0 means "scale-relative default" (1e-8 * max |x|).  Guards against
    // near-duplicate points whose distance is pure rounding noise.
    double added_coordinate_floor = 0.0;
};

/// Trailing moving average of length `window`; partial windows at the start.
TimeSeries moving_average(const TimeSeries& series, int window);

/// OLS-detrend against the index, then scale residuals to unit sample
/// standard deviation.  Output has mean 0 and sd 1.
TimeSeries detrend_standardize(const TimeSeries& series);

/// Sample ACF with the divide-by-total-sum-of-squares estimator, so
/// rho[0] == 1 and |rho[h]| <= 1.
AcfProfile acf(const TimeSeries& series, int max_lag);

/// Default number of lags scanned by the tau selectors: min(T-2, 10*log10 T).
int default_acf_scan_lags(std::size_t series_length);

/// Smallest lag h >= 1 with |rho[h]| < 2/sqrt(T).
LagSelection select_tau_acf(const TimeSeries& series, int max_lag = 0);

/// Smallest lag tau >= 1 with |(rho[tau]-rho[tau-1])/rho[tau]| > 1/e and
/// rho[tau] < 2/sqrt(T); lags with rho[tau] == 0 are skipped.
LagSelection select_tau_decay(const TimeSeries& series, int max_lag = 0);

/// False-nearest-neighbour embedding dimension search over d = 1..max_d.
DimSelection select_dim_fnn(const TimeSeries& series, int tau, int max_d,
                            const FnnOptions& options = {});

/// Natural cubic spline through the samples placed on [0, 2*pi], evaluated
/// at n_out equally spaced points of the same interval.
TimeSeries spline_resample(const TimeSeries& series, std::size_t n_out);

}  // namespace tdats
