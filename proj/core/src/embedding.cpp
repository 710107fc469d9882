#include "tdats/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tdats/errors.hpp"

namespace tdats {

PointCloud::PointCloud(std::size_t dim, std::vector<double> row_major)
    : dim_(dim), data_(std::move(row_major)) {
    if (dim_ == 0) throw ParameterError("point cloud dimension must be positive");
    if (data_.empty() || data_.size() % dim_ != 0) {
        throw ParameterError("point cloud storage is not a whole number of points");
    }
    for (double v : data_) {
        if (!std::isfinite(v)) throw ParameterError("point cloud contains a non-finite value");
    }
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw ParameterError("point cloud needs at least one point");
    const std::size_t dim = rows.front().size();
    std::vector<double> data;
    data.reserve(rows.size() * dim);
    for (const auto& row : rows) {
        if (row.size() != dim) throw ParameterError("point cloud rows have mixed dimensions");
        data.insert(data.end(), row.begin(), row.end());
    }
    return PointCloud(dim, std::move(data));
}

PointCloud takens_embed(const TimeSeries& series, int d, int tau) {
    if (d < 1) throw ParameterError("embedding dimension must be positive");
    if (tau < 1) throw ParameterError("embedding delay must be positive");
    const std::size_t span = static_cast<std::size_t>(d - 1) * static_cast<std::size_t>(tau);
    if (series.size() < span + 1) {
        throw ParameterError("series of length " + std::to_string(series.size()) +
                             " too short for d=" + std::to_string(d) +
                             ", tau=" + std::to_string(tau));
    }
    const std::size_t count = series.size() - span;
    std::vector<double> data(count * static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < count; ++i) {
        for (int m = 0; m < d; ++m) {
            data[i * d + m] = series[i + static_cast<std::size_t>(m) * tau];
        }
    }
    return PointCloud(static_cast<std::size_t>(d), std::move(data));
}

PointCloud standardize_pointwise(const PointCloud& cloud) {
    if (cloud.dim() < 2) throw ParameterError("pointwise standardization needs dimension >= 2");
    std::vector<double> data(cloud.data());
    const std::size_t d = cloud.dim();
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        double* p = data.data() + i * d;
        double mean = 0.0;
        for (std::size_t j = 0; j < d; ++j) mean += p[j];
        mean /= static_cast<double>(d);
        double norm2 = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            p[j] -= mean;
            norm2 += p[j] * p[j];
        }
        if (!(norm2 > 0.0)) {
            throw DegenerateInputError("point " + std::to_string(i) +
                                       " is constant across coordinates; zero centred norm");
        }
        const double norm = std::sqrt(norm2);
        for (std::size_t j = 0; j < d; ++j) p[j] /= norm;
    }
    return PointCloud(d, std::move(data));
}

PointCloud sw1pers_cloud(const TimeSeries& series, int d, int n_points, int denoise_window) {
    if (series.size() < 4) throw ParameterError("sw1pers needs at least 4 observations");
    if (d < 2) throw ParameterError("sw1pers dimension must be >= 2");
    if (n_points < 2) throw ParameterError("sw1pers cloud size must be >= 2");
    if (denoise_window < 0) throw ParameterError("denoise window must be nonnegative");

    TimeSeries working = series;
    if (denoise_window > 1) {
        const int cap = std::max(1, d / 3);
        working = moving_average(working, std::min(denoise_window, cap));
    }

    const std::size_t resampled = static_cast<std::size_t>(n_points) + static_cast<std::size_t>(d);
    const TimeSeries grid = spline_resample(working, resampled);

    std::vector<double> data(static_cast<std::size_t>(n_points) * static_cast<std::size_t>(d));
    for (int t = 0; t < n_points; ++t) {
        for (int m = 0; m < d; ++m) {
            data[static_cast<std::size_t>(t) * d + m] = grid[static_cast<std::size_t>(t + m)];
        }
    }
    return standardize_pointwise(PointCloud(static_cast<std::size_t>(d), std::move(data)));
}

}  // namespace tdats
