#ifndef ACFBANDS_BANDS_HPP
#define ACFBANDS_BANDS_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "acfbands/acf.hpp"
#include "acfbands/bartlett.hpp"
#include "acfbands/errors.hpp"
#include "acfbands/mvn.hpp"

namespace acfbands {

enum class BandKind {
    sig_simultaneous,
    sig_pointwise,
    conf_supt,
    conf_bonferroni,
    conf_pointwise,
    sig_dynamic_exact,
    sig_dynamic_naive,
};

inline const char* to_string(BandKind kind) {
    switch (kind) {
        case BandKind::sig_simultaneous: return "sig_simultaneous";
        case BandKind::sig_pointwise: return "sig_pointwise";
        case BandKind::conf_supt: return "conf_supt";
        case BandKind::conf_bonferroni: return "conf_bonferroni";
        case BandKind::conf_pointwise: return "conf_pointwise";
        case BandKind::sig_dynamic_exact: return "sig_dynamic_exact";
        case BandKind::sig_dynamic_naive: return "sig_dynamic_naive";
    }
    return "unknown";
}

inline bool is_significance_kind(BandKind kind) {
    return kind == BandKind::sig_simultaneous || kind == BandKind::sig_pointwise ||
           kind == BandKind::sig_dynamic_exact || kind == BandKind::sig_dynamic_naive;
}

/// Per-lag [lower(h), upper(h)] intervals, h = 1..H. Significance kinds are
/// symmetric about 0, confidence kinds about rho_hat(h). Intervals are
/// closed: a value on the boundary counts as inside.
struct Band {
    BandKind kind = BandKind::sig_simultaneous;
    double alpha = 0.1;
    double scaling_c = 0.0; // the constant c in the generic width 2c*sqrt(sigma_hh/T)
    int T = 0;
    int H = 0;
    std::vector<double> lower; // index h-1
    std::vector<double> upper;

    double lower_at(int h) const { return lower.at(static_cast<std::size_t>(h - 1)); }
    double upper_at(int h) const { return upper.at(static_cast<std::size_t>(h - 1)); }
};

namespace detail {

inline void validate_band_params(int T, int H, double alpha) {
    if (T < 2) throw InvalidArgument("band: T must be >= 2");
    if (H < 1 || H > T - 1) throw InvalidArgument("band: H must lie in [1, T-1]");
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("band: alpha must lie in (0,1)");
}

inline Band constant_significance_band(int T, int H, double alpha, double c, BandKind kind) {
    Band band;
    band.kind = kind;
    band.alpha = alpha;
    band.scaling_c = c;
    band.T = T;
    band.H = H;
    const double half = c / std::sqrt(static_cast<double>(T));
    band.lower.assign(static_cast<std::size_t>(H), -half);
    band.upper.assign(static_cast<std::size_t>(H), half);
    return band;
}

} // namespace detail

/// Simultaneous significance band for white noise: +- z_{(1+(1-a)^{1/H})/2}/sqrt(T).
/// Requires no estimation.
inline Band significance_band_simultaneous(int T, int H, double alpha) {
    detail::validate_band_params(T, H, alpha);
    return detail::constant_significance_band(T, H, alpha, sidak_quantile(1.0 - alpha, H),
                                              BandKind::sig_simultaneous);
}

/// Conventional pointwise significance band: +- z_{1-a/2}/sqrt(T).
inline Band significance_band_pointwise(int T, int H, double alpha) {
    detail::validate_band_params(T, H, alpha);
    return detail::constant_significance_band(T, H, alpha, norm_quantile(1.0 - alpha / 2.0),
                                              BandKind::sig_pointwise);
}

enum class ConfidenceKind { supt, bonferroni, pointwise };

struct ConfidenceOptions {
    double prob_tol = kDefaultProbTol;
    std::uint64_t seed = kDefaultSeed;
};

/// Confidence band rho_hat(h) +- c*sqrt(b_hh/T) with c the equicoordinate
/// quantile of bhat (sup-t), z_{1-a/(2H)} (Bonferroni) or z_{1-a/2}
/// (pointwise). Degenerate diagonal entries are floored at 1e-12 so widths
/// stay finite.
inline Band confidence_band(const AcfEstimate& acf, const CovMatrix& bhat, double alpha,
                            ConfidenceKind kind, const ConfidenceOptions& opts = {}) {
    const int H = acf.H;
    detail::validate_band_params(acf.T, H, alpha);
    if (bhat.H() != H) {
        throw DimensionMismatch("confidence_band: covariance is " + std::to_string(bhat.H()) +
                                "x" + std::to_string(bhat.H()) + " but H=" + std::to_string(H));
    }

    CovMatrix floored = bhat;
    for (int i = 0; i < H; ++i) {
        if (!(floored.entries(i, i) > 1e-12)) floored.entries(i, i) = 1e-12;
    }

    double c = 0.0;
    BandKind bk = BandKind::conf_pointwise;
    switch (kind) {
        case ConfidenceKind::supt:
            c = equicoordinate_quantile({floored, 1.0 - alpha, opts.prob_tol, opts.seed});
            bk = BandKind::conf_supt;
            break;
        case ConfidenceKind::bonferroni:
            c = bonferroni_quantile(alpha, H);
            bk = BandKind::conf_bonferroni;
            break;
        case ConfidenceKind::pointwise:
            c = norm_quantile(1.0 - alpha / 2.0);
            bk = BandKind::conf_pointwise;
            break;
    }

    Band band;
    band.kind = bk;
    band.alpha = alpha;
    band.scaling_c = c;
    band.T = acf.T;
    band.H = H;
    band.lower.resize(static_cast<std::size_t>(H));
    band.upper.resize(static_cast<std::size_t>(H));
    const double sqrt_T = std::sqrt(static_cast<double>(acf.T));
    for (int h = 1; h <= H; ++h) {
        const double half = c * std::sqrt(floored.entries(h - 1, h - 1)) / sqrt_T;
        band.lower[static_cast<std::size_t>(h - 1)] = acf.rho_at(h) - half;
        band.upper[static_cast<std::size_t>(h - 1)] = acf.rho_at(h) + half;
    }
    return band;
}

/// True iff the empirical ACF leaves the significance band at any lag.
/// Boundary values do not reject (closed band).
inline bool rejects_white_noise(const AcfEstimate& acf, const Band& band) {
    if (!is_significance_kind(band.kind)) {
        throw KindMismatch("rejects_white_noise: requires a significance band; use covers_path "
                           "with the zero vector for confidence bands");
    }
    if (acf.H < band.H) {
        throw DimensionMismatch("rejects_white_noise: ACF carries fewer lags than the band");
    }
    for (int h = 1; h <= band.H; ++h) {
        const double r = acf.rho_at(h);
        if (r < band.lower_at(h) || r > band.upper_at(h)) return true;
    }
    return false;
}

/// True iff the path rho(1..H) lies inside the confidence band at every lag.
inline bool covers_path(const Band& band, const std::vector<double>& rho) {
    if (is_significance_kind(band.kind)) {
        throw KindMismatch("covers_path: requires a confidence band");
    }
    if (static_cast<int>(rho.size()) != band.H) {
        throw DimensionMismatch("covers_path: path has " + std::to_string(rho.size()) +
                                " lags but band has H=" + std::to_string(band.H));
    }
    for (int h = 1; h <= band.H; ++h) {
        const double r = rho[static_cast<std::size_t>(h - 1)];
        if (r < band.lower_at(h) || r > band.upper_at(h)) return false;
    }
    return true;
}

/// Per-lag widths upper(h) - lower(h).
inline std::vector<double> band_width(const Band& band) {
    std::vector<double> w(static_cast<std::size_t>(band.H));
    for (int h = 1; h <= band.H; ++h) {
        w[static_cast<std::size_t>(h - 1)] = band.upper_at(h) - band.lower_at(h);
    }
    return w;
}

inline double average_band_width(const Band& band) {
    const auto w = band_width(band);
    double s = 0.0;
    for (double v : w) s += v;
    return s / static_cast<double>(w.size());
}

} // namespace acfbands

#endif
