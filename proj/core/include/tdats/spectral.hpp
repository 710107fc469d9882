#pragma once

#include <cstddef>
#include <vector>

#include "tdats/series.hpp"
#include "tdats/sublevel.hpp"

namespace tdats {

/// Power at the Fourier frequencies j/T, j = 1..floor(T/2).
struct Spectrum {
    std::vector<double> freqs;
    std::vector<double> power;
};

/// Walsh–Fourier coefficients indexed by sequency j = 0..T2-1, where T2 is
/// the zero-padded power-of-two length.
struct WalshTransform {
    std::vector<double> coeffs;
    std::size_t padded_length = 0;
};

std::size_t next_power_of_two(std::size_t n);

/// Detrend/standardize, apply a split-cosine-bell taper to a proportion
/// taper_p of each end, take |DFT|^2 / T at the Fourier frequencies, then
/// smooth with modified Daniell weights (one pass per span) reflecting at
/// the boundaries.
Spectrum tapered_smoothed_periodogram(const TimeSeries& series, double taper_p = 0.1,
                                      const std::vector<int>& daniell_spans = {1});

/// Walsh function value in {-1, +1} from the doubling recursion
/// W(t, j) = W(floor(t/2), 2j mod T2) * W(t mod 2, j).
int walsh_function(std::size_t t, std::size_t j, std::size_t t2);

/// Fast Walsh–Fourier transform of the zero-padded series; coefficient j is
/// (1/sqrt(T2)) * sum_t x_t W(t, j).
WalshTransform wft(const TimeSeries& series);

/// Smoothed weighted Fourier reconstruction: coefficients up to `degree`
/// thresholded at the MAD level s * sqrt(2 log n) and damped by
/// exp(-(2 j pi / T)^2 * sigma), evaluated at t = 1..T.  `phase_points`
/// is the n in the threshold; 0 means n = T, 1 disables thresholding.
GridFunction1D weighted_fourier_smooth(const TimeSeries& series, int degree, double sigma,
                                       std::size_t phase_points = 0);

/// Conventional degree choice for weighted Fourier smoothing (about T/5).
int suggested_fourier_degree(std::size_t series_length);

}  // namespace tdats
