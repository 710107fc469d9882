#include "tdats/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "tdats/errors.hpp"

namespace tdats {

std::size_t next_power_of_two(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

Spectrum tapered_smoothed_periodogram(const TimeSeries& series, double taper_p,
                                      const std::vector<int>& daniell_spans) {
    const std::size_t n = series.size();
    if (n < 8) throw ParameterError("periodogram needs at least 8 observations");
    if (!(taper_p >= 0.0 && taper_p <= 0.5)) {
        throw ParameterError("taper proportion must lie in [0, 0.5]");
    }
    for (int span : daniell_spans) {
        if (span < 1) throw ParameterError("Daniell spans must be positive");
    }

    const TimeSeries standardized = detrend_standardize(series);

    // Split cosine bell over the first and last floor(n * taper_p) points.
    std::vector<double> tapered(standardized.values());
    const std::size_t m = static_cast<std::size_t>(std::floor(static_cast<double>(n) * taper_p));
    for (std::size_t t = 0; t < m; ++t) {
        const double w =
            0.5 * (1.0 - std::cos(std::numbers::pi * (static_cast<double>(t) + 0.5) /
                                  static_cast<double>(m)));
        tapered[t] *= w;
        tapered[n - 1 - t] *= w;
    }

    const std::size_t half = n / 2;
    Spectrum spectrum;
    spectrum.freqs.resize(half);
    spectrum.power.resize(half);
    for (std::size_t j = 1; j <= half; ++j) {
        std::complex<double> d{0.0, 0.0};
        const double base = -2.0 * std::numbers::pi * static_cast<double>(j) /
                            static_cast<double>(n);
        for (std::size_t t = 0; t < n; ++t) {
            d += tapered[t] * std::polar(1.0, base * static_cast<double>(t + 1));
        }
        spectrum.freqs[j - 1] = static_cast<double>(j) / static_cast<double>(n);
        spectrum.power[j - 1] = std::norm(d) / static_cast<double>(n);
    }

    // Modified Daniell smoothing, one convolution pass per span, with
    // symmetric reflection at the ends.
    for (int span : daniell_spans) {
        const std::size_t w = static_cast<std::size_t>(span);
        std::vector<double> weights(2 * w + 1, 1.0 / (2.0 * static_cast<double>(w)));
        weights.front() = 1.0 / (4.0 * static_cast<double>(w));
        weights.back() = 1.0 / (4.0 * static_cast<double>(w));

        const std::vector<double> source = spectrum.power;
        const auto reflect = [&](long idx) {
            const long last = static_cast<long>(source.size()) - 1;
            if (idx < 0) idx = -idx;
            if (idx > last) idx = 2 * last - idx;
            return source[static_cast<std::size_t>(std::clamp(idx, 0L, last))];
        };
        for (std::size_t i = 0; i < source.size(); ++i) {
            double acc = 0.0;
            for (std::size_t k = 0; k < weights.size(); ++k) {
                acc += weights[k] * reflect(static_cast<long>(i + k) - static_cast<long>(w));
            }
            spectrum.power[i] = acc;
        }
    }
    return spectrum;
}

int walsh_function(std::size_t t, std::size_t j, std::size_t t2) {
    if (t2 < 2 || (t2 & (t2 - 1)) != 0) {
        throw ParameterError("Walsh length must be a power of two >= 2");
    }
    if (t >= t2 || j >= t2) throw ParameterError("Walsh indices must lie in [0, T2)");
    if (t == 0) return 1;
    if (t == 1) return j < t2 / 2 ? 1 : -1;
    return walsh_function(t / 2, (2 * j) % t2, t2) * walsh_function(t % 2, j, t2);
}

WalshTransform wft(const TimeSeries& series) {
    if (series.empty()) throw ParameterError("wft needs a nonempty series");
    const std::size_t t2 = next_power_of_two(series.size());

    std::vector<double> values(t2, 0.0);
    std::copy(series.begin(), series.end(), values.begin());

    // In-place natural-order Walsh–Hadamard butterfly.
    for (std::size_t len = 1; len < t2; len <<= 1) {
        for (std::size_t block = 0; block < t2; block += len << 1) {
            for (std::size_t k = block; k < block + len; ++k) {
                const double a = values[k];
                const double b = values[k + len];
                values[k] = a + b;
                values[k + len] = a - b;
            }
        }
    }

    // The recursion evaluates W(t, j) = (-1)^<t, reverse(j)>, so the
    // sequency-indexed coefficients are the Hadamard outputs at
    // bit-reversed positions.
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < t2) ++bits;
    WalshTransform out;
    out.padded_length = t2;
    out.coeffs.resize(t2);
    const double scale = 1.0 / std::sqrt(static_cast<double>(t2));
    for (std::size_t j = 0; j < t2; ++j) {
        std::size_t rev = 0;
        for (std::size_t b = 0; b < bits; ++b) {
            rev = (rev << 1) | ((j >> b) & 1);
        }
        out.coeffs[j] = values[rev] * scale;
    }
    return out;
}

namespace {

double median_of(std::vector<double> values) {
    const std::size_t n = values.size();
    std::sort(values.begin(), values.end());
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

GridFunction1D weighted_fourier_smooth(const TimeSeries& series, int degree, double sigma,
                                       std::size_t phase_points) {
    const std::size_t n = series.size();
    if (degree < 1) throw ParameterError("fourier degree must be positive");
    if (n < 2 * static_cast<std::size_t>(degree) + 2) {
        throw ParameterError("fourier degree " + std::to_string(degree) +
                             " too large for series length " + std::to_string(n));
    }
    if (sigma < 0.0) throw ParameterError("smoothing sigma must be nonnegative");
    const std::size_t phase_n = phase_points == 0 ? n : phase_points;

    const std::size_t k = static_cast<std::size_t>(degree);
    std::vector<double> a(k + 1, 0.0);
    std::vector<double> b(k + 1, 0.0);
    for (std::size_t t = 1; t <= n; ++t) a[0] += series[t - 1];
    a[0] /= static_cast<double>(n);
    for (std::size_t j = 1; j <= k; ++j) {
        const double omega = 2.0 * static_cast<double>(j) * std::numbers::pi /
                             static_cast<double>(n);
        for (std::size_t t = 1; t <= n; ++t) {
            a[j] += series[t - 1] * std::cos(omega * static_cast<double>(t));
            b[j] += series[t - 1] * std::sin(omega * static_cast<double>(t));
        }
        a[j] *= 2.0 / static_cast<double>(n);
        b[j] *= 2.0 / static_cast<double>(n);
    }

    // MAD threshold over the degree-1..k coefficients.
    std::vector<double> abs_a, abs_b;
    for (std::size_t j = 1; j <= k; ++j) {
        abs_a.push_back(std::abs(a[j]));
        abs_b.push_back(std::abs(b[j]));
    }
    const double a_med = median_of(abs_a);
    const double b_med = median_of(abs_b);
    std::vector<double> deviations;
    for (std::size_t j = 1; j <= k; ++j) {
        deviations.push_back(std::abs(a[j] - a_med));
        deviations.push_back(std::abs(b[j] - b_med));
    }
    const double s = median_of(std::move(deviations));
    const double threshold = s * std::sqrt(2.0 * std::log(static_cast<double>(phase_n)));

    GridFunction1D out;
    out.spacing = 1.0;
    out.values.assign(n, 0.0);
    for (std::size_t t = 1; t <= n; ++t) {
        double acc = 0.0;
        if (std::abs(a[0]) > threshold) acc += a[0];
        for (std::size_t j = 1; j <= k; ++j) {
            const double omega = 2.0 * static_cast<double>(j) * std::numbers::pi /
                                 static_cast<double>(n);
            const double damping = std::exp(-omega * omega * sigma);
            if (std::abs(a[j]) > threshold) {
                acc += damping * a[j] * std::cos(omega * static_cast<double>(t));
            }
            if (std::abs(b[j]) > threshold) {
                acc += damping * b[j] * std::sin(omega * static_cast<double>(t));
            }
        }
        out.values[t - 1] = acc;
    }
    return out;
}

int suggested_fourier_degree(std::size_t series_length) {
    return std::max(1, static_cast<int>(series_length / 5) - 1);
}

}  // namespace tdats
