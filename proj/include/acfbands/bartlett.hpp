#ifndef ACFBANDS_BARTLETT_HPP
#define ACFBANDS_BARTLETT_HPP

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "acfbands/acf.hpp"
#include "acfbands/errors.hpp"

namespace acfbands {

enum class CovLabel {
    bartlett_analytic,
    melard_roy,
    sigma_rho_hom,
    sigma_rho_het,
    identity,
};

inline const char* to_string(CovLabel label) {
    switch (label) {
        case CovLabel::bartlett_analytic: return "bartlett_analytic";
        case CovLabel::melard_roy: return "melard_roy";
        case CovLabel::sigma_rho_hom: return "sigma_rho_hom";
        case CovLabel::sigma_rho_het: return "sigma_rho_het";
        case CovLabel::identity: return "identity";
    }
    return "unknown";
}

/// Symmetric H x H asymptotic covariance of sample autocorrelations.
struct CovMatrix {
    Eigen::MatrixXd entries;
    CovLabel label = CovLabel::identity;

    CovMatrix() = default;
    CovMatrix(Eigen::MatrixXd m, CovLabel l) : entries(std::move(m)), label(l) {}

    int H() const { return static_cast<int>(entries.rows()); }

    static CovMatrix identity(int H) {
        return CovMatrix(Eigen::MatrixXd::Identity(H, H), CovLabel::identity);
    }

    double min_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(entries, Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    }
};

enum class KernelKind { bartlett_triangular };

/// Triangular Bartlett kernel K(x) = max(0, 1 - |x|).
inline double kernel_weight(KernelKind kind, double x) {
    switch (kind) {
        case KernelKind::bartlett_triangular: return std::max(0.0, 1.0 - std::fabs(x));
    }
    return 0.0;
}

/// Bandwidth rules from the HAC literature: L = m*sqrt(T), L = c*T^(1/3),
/// or a fixed L. L is kept real-valued; the kernel argument is continuous.
struct BandwidthRule {
    enum class Kind { m_sqrt, c_cuberoot, fixed };
    Kind kind = Kind::m_sqrt;
    double param = 1.0;

    static BandwidthRule m_sqrt(double m) { return {Kind::m_sqrt, m}; }
    static BandwidthRule sqrt_T() { return m_sqrt(1.0); }
    static BandwidthRule c_cuberoot(double c) { return {Kind::c_cuberoot, c}; }
    static BandwidthRule fixed(double L) { return {Kind::fixed, L}; }

    std::string describe() const {
        switch (kind) {
            case Kind::m_sqrt: return std::to_string(param) + "*sqrt(T)";
            case Kind::c_cuberoot: return std::to_string(param) + "*T^(1/3)";
            case Kind::fixed: return "fixed " + std::to_string(param);
        }
        return "?";
    }
};

inline double resolve_bandwidth(const BandwidthRule& rule, int T) {
    if (T < 2) throw InvalidArgument("resolve_bandwidth: T must be >= 2");
    double L = 0.0;
    switch (rule.kind) {
        case BandwidthRule::Kind::m_sqrt:
            L = rule.param * std::sqrt(static_cast<double>(T));
            break;
        case BandwidthRule::Kind::c_cuberoot:
            L = rule.param * std::cbrt(static_cast<double>(T));
            break;
        case BandwidthRule::Kind::fixed:
            L = rule.param;
            break;
    }
    if (!(L > 0.0)) throw InvalidArgument("resolve_bandwidth: resolved L must be positive");
    return L;
}

struct KernelBandwidth {
    KernelKind kernel = KernelKind::bartlett_triangular;
    BandwidthRule rule = BandwidthRule::sqrt_T();

    double resolve(int T) const { return resolve_bandwidth(rule, T); }
};

/// Geometric envelope |rho(k)| <= scale * rate^k used to bound truncation
/// tails of the Bartlett sum.
struct GeometricEnvelope {
    double scale = 1.0;
    double rate = 0.0;
};

namespace detail {

// Tail of the Bartlett sum beyond index K, for |rho(k)| <= c*r^k (r < 1)
// and g,h <= H: each bracket is bounded by 4c * r^(k-H), so the omitted
// mass per entry is at most 16 c^2 r^(2(K+1-H)) / (1 - r^2).
inline double bartlett_tail_bound(const GeometricEnvelope& env, int K, int H) {
    const double r = env.rate;
    const double c = std::max(env.scale, 1.0);
    if (r <= 0.0) return (K >= H) ? 0.0 : std::numeric_limits<double>::infinity();
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    const double expo = 2.0 * (K + 1 - H);
    return 16.0 * c * c * std::pow(r, expo) / (1.0 - r * r);
}

// Crude geometric envelope fitted to observed |rho| over lags (lo, hi].
inline std::optional<GeometricEnvelope> fit_envelope(const std::function<double(int)>& rho,
                                                     int lo, int hi) {
    double rate = 0.0;
    double prev = std::fabs(rho(lo));
    bool all_zero = prev == 0.0;
    for (int k = lo + 1; k <= hi; ++k) {
        const double cur = std::fabs(rho(k));
        if (cur > 1.0 + 1e-12) return std::nullopt;
        if (cur != 0.0) {
            all_zero = false;
            if (prev == 0.0) return std::nullopt; // revived after a zero: no geometric bound
            rate = std::max(rate, cur / prev);
        }
        prev = cur;
    }
    if (all_zero) return GeometricEnvelope{1.0, 0.0};
    if (rate >= 1.0) return std::nullopt;
    // Anchor the envelope at the last observed lag.
    const double anchor = std::fabs(rho(hi));
    const double scale = (anchor > 0.0) ? anchor / std::pow(rate, hi) : 1.0;
    return GeometricEnvelope{std::max(1.0, scale), rate};
}

} // namespace detail

/// Bartlett's formula, truncated so the omitted tail is below tail_tol:
///   b_gh = sum_{k>=1} [rho(k+g)+rho(k-g)-2 rho(k)rho(g)]
///                    *[rho(k+h)+rho(k-h)-2 rho(k)rho(h)].
/// rho must be the ACF of a stationary process with rho(0)=1 and an
/// (eventually) geometric envelope; pass the envelope when it is known
/// exactly (the AR(1) wrappers do), otherwise it is fitted from rho itself.
inline CovMatrix bartlett_analytic(const std::function<double(int)>& rho, int H,
                                   double tail_tol = 1e-12,
                                   std::optional<GeometricEnvelope> envelope = std::nullopt) {
    if (H < 1) throw InvalidArgument("bartlett_analytic: H must be >= 1");
    if (!(tail_tol > 0.0)) throw InvalidArgument("bartlett_analytic: tail_tol must be > 0");
    auto rho_sym = [&rho](int k) { return (k >= 0) ? rho(k) : rho(-k); };

    const long hard_cap = 1000000;
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(H, H);
    std::vector<double> bracket(static_cast<std::size_t>(H));

    long k = 1;
    const int block = 64;
    while (k <= hard_cap) {
        const long block_end = k + block - 1;
        for (; k <= block_end && k <= hard_cap; ++k) {
            const double rk = rho_sym(static_cast<int>(k));
            for (int g = 1; g <= H; ++g) {
                bracket[static_cast<std::size_t>(g - 1)] =
                    rho_sym(static_cast<int>(k) + g) + rho_sym(static_cast<int>(k) - g) -
                    2.0 * rk * rho_sym(g);
            }
            for (int g = 0; g < H; ++g) {
                for (int h = g; h < H; ++h) {
                    b(g, h) += bracket[static_cast<std::size_t>(g)] *
                               bracket[static_cast<std::size_t>(h)];
                }
            }
        }
        auto env = envelope;
        if (!env) env = detail::fit_envelope(rho_sym, std::max(1, static_cast<int>(k) - 2 * block),
                                             static_cast<int>(k) - 1);
        if (env && static_cast<int>(k) - 1 >= H &&
            detail::bartlett_tail_bound(*env, static_cast<int>(k) - 1, H) < tail_tol) {
            break;
        }
    }
    if (k > hard_cap) {
        throw TruncationFailure("bartlett_analytic: tail bound not met within 10^6 terms");
    }

    for (int g = 0; g < H; ++g)
        for (int h = 0; h < g; ++h) b(g, h) = b(h, g);
    return CovMatrix(std::move(b), CovLabel::bartlett_analytic);
}

/// Overload for a finite ACF vector rho(1..n); lags beyond n are zero.
inline CovMatrix bartlett_analytic(const std::vector<double>& rho_tail, int H,
                                   double tail_tol = 1e-12) {
    auto rho = [&rho_tail](int k) {
        if (k == 0) return 1.0;
        return (k <= static_cast<int>(rho_tail.size())) ? rho_tail[static_cast<std::size_t>(k - 1)]
                                                        : 0.0;
    };
    return bartlett_analytic(rho, H, tail_tol);
}

/// Bartlett matrix of a stationary AR(1) with parameter phi (rho(h) = phi^h),
/// using the exact geometric envelope for truncation.
inline CovMatrix bartlett_analytic_ar1(double phi, int H, double tail_tol = 1e-12) {
    if (!(std::fabs(phi) < 1.0)) {
        throw NonStationary("bartlett_analytic_ar1: |phi| must be < 1");
    }
    auto rho = [phi](int h) { return std::pow(phi, h); };
    return bartlett_analytic(rho, H, tail_tol, GeometricEnvelope{1.0, std::fabs(phi)});
}

/// Largest raw-ACF lag the Melard-Roy estimator can touch with nonzero
/// kernel weight; callers on the residual path must supply lags up to this.
inline int melard_roy_required_lags(int T, double L) {
    return std::min(T - 1, static_cast<int>(std::floor(L)));
}

namespace detail {

// Core of the Melard-Roy estimator: damped autocorrelations
// rho~(j) = K(j/L) rho_hat(j) substituted into Bartlett's formula, summed
// over k = 1..T-1. With the triangular kernel every term with k beyond
// L + H vanishes identically, so the loop stops there.
inline CovMatrix melard_roy_core(const std::vector<double>& rho_ext, int T, int H, double L,
                                 KernelKind kernel) {
    const int have = static_cast<int>(rho_ext.size()) - 1; // lags 0..have
    const int kmax = std::min<long>(T - 1, static_cast<long>(std::floor(L)) + H);
    const int need = static_cast<int>(std::min<long>(T - 1, kmax + H));

    std::vector<double> damped(static_cast<std::size_t>(need) + 1, 0.0);
    damped[0] = 1.0;
    for (int j = 1; j <= need; ++j) {
        const double w = kernel_weight(kernel, j / L);
        if (w == 0.0) continue;
        const double r = (j <= have) ? rho_ext[static_cast<std::size_t>(j)] : 0.0;
        damped[static_cast<std::size_t>(j)] = w * r;
    }
    auto damped_at = [&damped](long j) {
        const long a = (j >= 0) ? j : -j;
        return (a < static_cast<long>(damped.size())) ? damped[static_cast<std::size_t>(a)] : 0.0;
    };

    Eigen::MatrixXd A(H, std::max(kmax, 1));
    A.setZero();
    for (long k = 1; k <= kmax; ++k) {
        const double dk = damped_at(k);
        for (int g = 1; g <= H; ++g) {
            A(g - 1, static_cast<int>(k) - 1) =
                damped_at(k + g) + damped_at(k - g) - 2.0 * dk * damped_at(g);
        }
    }
    Eigen::MatrixXd b = A * A.transpose();
    b = ((b + b.transpose()) * 0.5).eval();
    return CovMatrix(std::move(b), CovLabel::melard_roy);
}

} // namespace detail

/// Melard-Roy kernel plug-in estimate of the Bartlett matrix, recomputing
/// the sample ACF from the series up to every lag the kernel can reach.
inline CovMatrix melard_roy_estimate(const TimeSeriesData& series, int H,
                                     const KernelBandwidth& kb) {
    const int T = series.length();
    if (T < 4) throw InsufficientData("melard_roy_estimate: need T >= 4");
    if (H < 1 || H > T - 1) throw InvalidLag("melard_roy_estimate: H must lie in [1, T-1]");
    const double L = kb.resolve(T);
    const int lags = std::max(1, melard_roy_required_lags(T, L));
    const AcfEstimate acf = compute_acf(series, lags);
    return detail::melard_roy_core(acf.rho, T, H, L, kb.kernel);
}

/// Overload for a precomputed AcfEstimate (e.g. residual autocorrelations,
/// which must not be re-demeaned). The estimate must carry every lag with
/// nonzero kernel weight.
inline CovMatrix melard_roy_estimate(const AcfEstimate& acf, int H, const KernelBandwidth& kb) {
    const int T = acf.T;
    if (T < 4) throw InsufficientData("melard_roy_estimate: need T >= 4");
    if (H < 1 || H > T - 1) throw InvalidLag("melard_roy_estimate: H must lie in [1, T-1]");
    const double L = kb.resolve(T);
    const int need = melard_roy_required_lags(T, L);
    if (acf.H < need) {
        throw InvalidLag("melard_roy_estimate: AcfEstimate carries lags up to " +
                         std::to_string(acf.H) + " but the kernel reaches lag " +
                         std::to_string(need));
    }
    return detail::melard_roy_core(acf.rho, T, H, L, kb.kernel);
}

} // namespace acfbands

#endif
