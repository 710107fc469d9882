#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tdats/series.hpp"

namespace tdats {

/// N points in R^d, row-major storage.
class PointCloud {
public:
    PointCloud() = default;
    PointCloud(std::size_t dim, std::vector<double> row_major);
    static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return dim_ == 0 ? 0 : data_.size() / dim_; }
    std::size_t dim() const noexcept { return dim_; }
    std::span<const double> point(std::size_t i) const {
        return {data_.data() + i * dim_, dim_};
    }
    double coord(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    const std::vector<double>& data() const noexcept { return data_; }

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

/// Delay embedding: row i is (x_i, x_{i+tau}, ..., x_{i+(d-1)tau}), giving
/// T - (d-1)*tau points.
PointCloud takens_embed(const TimeSeries& series, int d, int tau);

/// Centre every point across its own coordinates and scale it to unit norm.
PointCloud standardize_pointwise(const PointCloud& cloud);

/// Sliding-window cloud for periodicity scoring: optional moving-average
/// denoising (window capped at d/3), spline resampling to n_points + d
/// samples on [0, 2*pi], width-d windows at stride 1, then pointwise
/// standardization.  denoise_window <= 1 disables denoising.
PointCloud sw1pers_cloud(const TimeSeries& series, int d = 15, int n_points = 201,
                         int denoise_window = 5);

}  // namespace tdats
