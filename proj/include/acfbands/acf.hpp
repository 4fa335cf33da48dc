#ifndef ACFBANDS_ACF_HPP
#define ACFBANDS_ACF_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "acfbands/errors.hpp"

namespace acfbands {

/// A finite real-valued series of length T >= 2.
struct TimeSeriesData {
    std::vector<double> values;

    TimeSeriesData() = default;
    explicit TimeSeriesData(std::vector<double> v) : values(std::move(v)) { validate(); }

    int length() const { return static_cast<int>(values.size()); }

    void validate() const {
        if (values.size() < 2) {
            throw InvalidArgument("TimeSeriesData: need at least 2 observations, got " +
                                  std::to_string(values.size()));
        }
        for (std::size_t t = 0; t < values.size(); ++t) {
            if (!std::isfinite(values[t])) {
                throw InvalidArgument("TimeSeriesData: non-finite value at position " +
                                      std::to_string(t));
            }
        }
    }
};

/// Sample mean, autocovariances gamma(0..H) and autocorrelations rho(1..H).
/// rho is stored with rho[0] == 1 so lag indexing matches the math.
struct AcfEstimate {
    double mean = 0.0;
    std::vector<double> gamma; // gamma[h], h = 0..H
    std::vector<double> rho;   // rho[h],   h = 0..H, rho[0] == 1
    int T = 0;
    int H = 0;

    double gamma_at(int h) const { return gamma.at(static_cast<std::size_t>(h)); }
    double rho_at(int h) const { return rho.at(static_cast<std::size_t>(h)); }
};

namespace detail {

// Relative floor under which a sample variance is treated as exactly zero
// (constant series up to rounding).
inline bool variance_is_degenerate(double gamma0, double scale_sq) {
    return gamma0 <= 1e-20 * std::max(1.0, scale_sq);
}

} // namespace detail

/// Sample ACF with the divisor-T (biased) estimator:
///   gamma(h) = (1/T) sum_{t=1}^{T-h} (y_t - ybar)(y_{t+h} - ybar).
inline AcfEstimate compute_acf(const TimeSeriesData& series, int H) {
    series.validate();
    const int T = series.length();
    if (H < 1 || H > T - 1) {
        throw InvalidLag("compute_acf: H must lie in [1, T-1], got H=" + std::to_string(H) +
                         " with T=" + std::to_string(T));
    }
    const std::span<const double> y(series.values);

    double sum = 0.0;
    for (int t = 0; t < T; ++t) sum += y[t];
    const double mean = sum / T;

    AcfEstimate est;
    est.mean = mean;
    est.T = T;
    est.H = H;
    est.gamma.resize(static_cast<std::size_t>(H) + 1);
    for (int h = 0; h <= H; ++h) {
        double acc = 0.0;
        for (int t = 0; t + h < T; ++t) acc += (y[t] - mean) * (y[t + h] - mean);
        est.gamma[static_cast<std::size_t>(h)] = acc / T;
    }

    double scale_sq = 0.0;
    for (int t = 0; t < T; ++t) scale_sq = std::max(scale_sq, y[t] * y[t]);
    if (detail::variance_is_degenerate(est.gamma[0], scale_sq)) {
        throw DegenerateSeries("compute_acf: zero sample variance (constant series)");
    }

    est.rho.resize(static_cast<std::size_t>(H) + 1);
    est.rho[0] = 1.0;
    for (int h = 1; h <= H; ++h) {
        est.rho[static_cast<std::size_t>(h)] = est.gamma[static_cast<std::size_t>(h)] / est.gamma[0];
    }
    return est;
}

/// Population ACF of a stationary AR(1): rho(h) = phi^h, h = 1..H.
inline std::vector<double> true_acf_ar1(double phi, int H) {
    if (!(std::fabs(phi) < 1.0)) {
        throw NonStationary("true_acf_ar1: |phi| must be < 1, got " + std::to_string(phi));
    }
    if (H < 1) throw InvalidArgument("true_acf_ar1: H must be >= 1");
    std::vector<double> rho(static_cast<std::size_t>(H));
    double p = 1.0;
    for (int h = 1; h <= H; ++h) {
        p *= phi;
        rho[static_cast<std::size_t>(h - 1)] = p;
    }
    return rho;
}

/// Default maximum lag floor(10*log10(T)), capped at T-1 and floored at 1.
inline int default_max_lag(int T) {
    if (T < 2) throw InvalidArgument("default_max_lag: T must be >= 2");
    const int h = static_cast<int>(std::floor(10.0 * std::log10(static_cast<double>(T))));
    return std::clamp(h, 1, T - 1);
}

} // namespace acfbands

#endif
