#ifndef ACFBANDS_REGRESSION_HPP
#define ACFBANDS_REGRESSION_HPP

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "acfbands/acf.hpp"
#include "acfbands/bands.hpp"
#include "acfbands/bartlett.hpp"
#include "acfbands/errors.hpp"
#include "acfbands/mvn.hpp"

namespace acfbands {

/// Inputs of an intercept-included least-squares fit: y (length T) and the
/// T x K regressor matrix excluding the intercept column.
struct RegressionData {
    Eigen::VectorXd y;
    Eigen::MatrixXd X;

    int T() const { return static_cast<int>(y.size()); }
    int K() const { return static_cast<int>(X.cols()); }

    void validate() const {
        if (X.rows() != y.size()) {
            throw DimensionMismatch("RegressionData: y has " + std::to_string(y.size()) +
                                    " rows but X has " + std::to_string(X.rows()));
        }
        if (!y.allFinite() || !X.allFinite()) {
            throw InvalidArgument("RegressionData: non-finite entries");
        }
        if (T() <= K() + 1) {
            throw Degenerate("RegressionData: need T > K+1, got T=" + std::to_string(T()) +
                             ", K=" + std::to_string(K()));
        }
    }
};

struct OlsFit {
    double intercept = 0.0;
    Eigen::VectorXd coeffs;          // beta_hat, length K
    Eigen::VectorXd residuals;       // e_hat, length T
    Eigen::MatrixXd x_centered_gram; // Sigma_x_hat = (1/T) sum (x-xbar)(x-xbar)'
    double sigma2_eps = 0.0;         // (1/T) sum e_hat^2
    Eigen::MatrixXd X;               // regressors kept for Gamma_hat / LM tests
    Eigen::VectorXd x_mean;
    int T = 0;
    int K = 0;
};

/// LS fit via column-pivoted QR of the intercept-augmented design, rank
/// detected with a relative pivot threshold of 1e-10.
inline OlsFit ols_fit(const RegressionData& data) {
    data.validate();
    const int T = data.T();
    const int K = data.K();

    Eigen::MatrixXd design(T, K + 1);
    design.col(0).setOnes();
    if (K > 0) design.rightCols(K) = data.X;

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    qr.setThreshold(1e-10);
    if (qr.rank() < K + 1) {
        throw RankDeficient("ols_fit: design matrix (with intercept) is rank deficient");
    }
    const Eigen::VectorXd coef = qr.solve(data.y);

    OlsFit fit;
    fit.intercept = coef(0);
    fit.coeffs = coef.tail(K);
    fit.residuals = data.y - design * coef;
    fit.X = data.X;
    fit.x_mean = (K > 0) ? Eigen::VectorXd(data.X.colwise().mean())
                         : Eigen::VectorXd(0);
    if (K > 0) {
        const Eigen::MatrixXd centered = data.X.rowwise() - fit.x_mean.transpose();
        fit.x_centered_gram = (centered.transpose() * centered) / static_cast<double>(T);
    } else {
        fit.x_centered_gram = Eigen::MatrixXd(0, 0);
    }
    fit.sigma2_eps = fit.residuals.squaredNorm() / static_cast<double>(T);
    fit.T = T;
    fit.K = K;
    return fit;
}

/// Residual autocorrelations
///   rho_hat(h) = sum_{t=h+1}^T e_t e_{t-h} / sum_t e_t^2,
/// computed from the raw residuals WITHOUT subtracting their mean again
/// (the intercept already centres them); the stored mean field is 0.
inline AcfEstimate residual_acf(const OlsFit& fit, int H) {
    const int T = fit.T;
    if (H < 1 || H > T - 1) throw InvalidLag("residual_acf: H must lie in [1, T-1]");

    const Eigen::VectorXd& e = fit.residuals;
    AcfEstimate est;
    est.mean = 0.0;
    est.T = T;
    est.H = H;
    est.gamma.resize(static_cast<std::size_t>(H) + 1);
    for (int h = 0; h <= H; ++h) {
        double acc = 0.0;
        for (int t = h; t < T; ++t) acc += e(t) * e(t - h);
        est.gamma[static_cast<std::size_t>(h)] = acc / T;
    }
    double scale_sq = 0.0;
    for (int t = 0; t < T; ++t) scale_sq = std::max(scale_sq, e(t) * e(t));
    if (detail::variance_is_degenerate(est.gamma[0], scale_sq)) {
        throw DegenerateSeries("residual_acf: residual sum of squares is zero (perfect fit)");
    }
    est.rho.resize(static_cast<std::size_t>(H) + 1);
    est.rho[0] = 1.0;
    for (int h = 1; h <= H; ++h) {
        est.rho[static_cast<std::size_t>(h)] = est.gamma[static_cast<std::size_t>(h)] / est.gamma[0];
    }
    return est;
}

/// Gamma_hat = (c_1, ..., c_H)' with c_h = (1/T) sum_{t=h+1}^T x_t e_{t-h}.
/// x_t enters raw (not demeaned), exactly as the estimator is defined;
/// demean_x exists for experimentation only.
inline Eigen::MatrixXd estimate_gamma_hat(const OlsFit& fit, int H, bool demean_x = false) {
    const int T = fit.T;
    const int K = fit.K;
    if (H < 1 || H > T - 1) throw InvalidLag("estimate_gamma_hat: H must lie in [1, T-1]");
    Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(H, K);
    for (int h = 1; h <= H; ++h) {
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(K);
        for (int t = h; t < T; ++t) {
            acc += fit.X.row(t).transpose() * fit.residuals(t - h);
        }
        if (demean_x) {
            double esum = 0.0;
            for (int t = h; t < T; ++t) esum += fit.residuals(t - h);
            acc -= fit.x_mean * esum;
        }
        gamma.row(h - 1) = acc.transpose() / static_cast<double>(T);
    }
    return gamma;
}

enum class SigmaRhoMode { hom, het };

inline const char* to_string(SigmaRhoMode mode) {
    return mode == SigmaRhoMode::hom ? "hom" : "het";
}

namespace detail {

inline Eigen::LLT<Eigen::MatrixXd> factor_sigma_x(const OlsFit& fit) {
    if (fit.K == 0) throw SingularSigmaX("sigma_rho_plugin: no regressors");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(fit.x_centered_gram, Eigen::EigenvaluesOnly);
    const double emin = es.eigenvalues().minCoeff();
    const double emax = es.eigenvalues().maxCoeff();
    if (!(emin > 1e-12 * std::max(1.0, emax))) {
        throw SingularSigmaX("sigma_rho_plugin: Sigma_x_hat is numerically singular");
    }
    return Eigen::LLT<Eigen::MatrixXd>(fit.x_centered_gram);
}

} // namespace detail

/// Plug-in estimate of the dynamic-regression covariance of residual
/// autocorrelations (raw, possibly non-positive-definite):
///   hom: I_H - Gamma Sx^{-1} Gamma' / s2
///   het: I_H - 2 Gamma Sx^{-1} Gamma' / s2 + Gamma Sx^{-1} Sxe Sx^{-1} Gamma' / s2^2
inline CovMatrix sigma_rho_plugin(const OlsFit& fit, int H, SigmaRhoMode mode) {
    if (!(fit.sigma2_eps > 0.0)) {
        throw DegenerateSeries("sigma_rho_plugin: zero residual variance");
    }
    const auto llt = detail::factor_sigma_x(fit);
    const Eigen::MatrixXd gamma = estimate_gamma_hat(fit, H);
    const Eigen::MatrixXd w = llt.solve(gamma.transpose()); // Sx^{-1} Gamma', K x H

    Eigen::MatrixXd m;
    if (mode == SigmaRhoMode::hom) {
        m = Eigen::MatrixXd::Identity(H, H) - (gamma * w) / fit.sigma2_eps;
    } else {
        const int T = fit.T;
        Eigen::MatrixXd sxe = Eigen::MatrixXd::Zero(fit.K, fit.K);
        for (int t = 0; t < T; ++t) {
            const Eigen::VectorXd xc = fit.X.row(t).transpose() - fit.x_mean;
            sxe += fit.residuals(t) * fit.residuals(t) * (xc * xc.transpose());
        }
        sxe /= static_cast<double>(T);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sxe, Eigen::EigenvaluesOnly);
        if (!(es.eigenvalues().minCoeff() >
              1e-14 * std::max(1.0, es.eigenvalues().maxCoeff()))) {
            throw SingularSigmaX("sigma_rho_plugin: Sigma_xe_hat is numerically singular");
        }
        m = Eigen::MatrixXd::Identity(H, H) - 2.0 * (gamma * w) / fit.sigma2_eps +
            (w.transpose() * sxe * w) / (fit.sigma2_eps * fit.sigma2_eps);
    }
    m = ((m + m.transpose()) * 0.5).eval();
    return CovMatrix(std::move(m),
                     mode == SigmaRhoMode::hom ? CovLabel::sigma_rho_hom : CovLabel::sigma_rho_het);
}

/// Result of the shrinkage algorithm: the raw plug-in matrix, the
/// positive-definite shrunk matrix (identity outside its retained leading
/// block) and the first k whose leading block failed positive definiteness
/// (H+1 when none did).
struct SigmaRhoEstimate {
    CovMatrix raw;
    CovMatrix shrunk;
    SigmaRhoMode mode = SigmaRhoMode::hom;
    int k_star = 0;
};

/// Shrink a possibly indefinite plug-in covariance: grow k while the leading
/// k x k block is positive definite, then embed the last positive-definite
/// block into I_H.
inline SigmaRhoEstimate shrink_sigma_rho(const CovMatrix& raw) {
    const int H = raw.H();
    if (raw.entries.rows() != raw.entries.cols()) {
        throw DimensionMismatch("shrink_sigma_rho: matrix must be square");
    }
    const double tol = 1e-12 * std::max(1.0, raw.entries.trace() / H);

    int k_star = H + 1;
    for (int k = 1; k <= H; ++k) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(raw.entries.topLeftCorner(k, k),
                                                          Eigen::EigenvaluesOnly);
        if (!(es.eigenvalues().minCoeff() > tol)) {
            k_star = k;
            break;
        }
    }

    SigmaRhoEstimate est;
    est.raw = raw;
    est.mode = (raw.label == CovLabel::sigma_rho_het) ? SigmaRhoMode::het : SigmaRhoMode::hom;
    est.k_star = k_star;
    if (k_star == H + 1) {
        est.shrunk = raw;
    } else {
        Eigen::MatrixXd s = Eigen::MatrixXd::Identity(H, H);
        const int keep = k_star - 1;
        if (keep > 0) s.topLeftCorner(keep, keep) = raw.entries.topLeftCorner(keep, keep);
        est.shrunk = CovMatrix(std::move(s), raw.label);
    }
    return est;
}

struct DynamicBandOptions {
    double prob_tol = kDefaultProbTol;
    std::uint64_t seed = kDefaultSeed;
};

/// Significance band for residual autocorrelations of a dynamic regression:
/// +- q_{1-a}(Sigma_rho_hat) * sqrt(sigma_rho_hh/T) with the shrunk plug-in
/// covariance, or the naive band (identical to the observed-series
/// simultaneous band) when naive = true.
inline Band significance_band_dynamic(const OlsFit& fit, int H, double alpha,
                                      SigmaRhoMode mode = SigmaRhoMode::hom, bool naive = false,
                                      const DynamicBandOptions& opts = {}) {
    detail::validate_band_params(fit.T, H, alpha);
    if (naive) {
        Band band = significance_band_simultaneous(fit.T, H, alpha);
        band.kind = BandKind::sig_dynamic_naive;
        return band;
    }
    const SigmaRhoEstimate est = shrink_sigma_rho(sigma_rho_plugin(fit, H, mode));
    const double q = equicoordinate_quantile({est.shrunk, 1.0 - alpha, opts.prob_tol, opts.seed});

    Band band;
    band.kind = BandKind::sig_dynamic_exact;
    band.alpha = alpha;
    band.scaling_c = q;
    band.T = fit.T;
    band.H = H;
    band.lower.resize(static_cast<std::size_t>(H));
    band.upper.resize(static_cast<std::size_t>(H));
    const double sqrt_T = std::sqrt(static_cast<double>(fit.T));
    for (int h = 0; h < H; ++h) {
        const double half = q * std::sqrt(est.shrunk.entries(h, h)) / sqrt_T;
        band.lower[static_cast<std::size_t>(h)] = -half;
        band.upper[static_cast<std::size_t>(h)] = half;
    }
    return band;
}

/// Design for a (possibly differenced) autoregressive distributed-lag
/// regression: columns [y_{t-1..t-p}, x_{t..t-r}], rows aligned so the
/// effective sample starts after the consumed starting values.
inline RegressionData lagged_design(const std::vector<double>& y_raw,
                                    const std::optional<std::vector<double>>& exog, int p, int r,
                                    bool differenced) {
    if (p < 0) throw InvalidArgument("lagged_design: p must be >= 0");
    if (exog && r < 0) throw InvalidArgument("lagged_design: r must be >= 0");
    if (exog && exog->size() != y_raw.size()) {
        throw DimensionMismatch("lagged_design: endogenous and exogenous series lengths differ");
    }

    std::vector<double> y = y_raw;
    std::vector<double> x = exog ? *exog : std::vector<double>{};
    if (differenced) {
        if (y.size() < 2) throw InsufficientLength("lagged_design: series too short to difference");
        std::vector<double> dy(y.size() - 1);
        for (std::size_t t = 1; t < y.size(); ++t) dy[t - 1] = y[t] - y[t - 1];
        y = std::move(dy);
        if (exog) x.erase(x.begin()); // x_t aligned with Delta y_t = y_t - y_{t-1}
    }

    const int n = static_cast<int>(y.size());
    const int start = std::max(p, exog ? r : 0);
    const int T_eff = n - start;
    const int K = p + (exog ? r + 1 : 0);
    if (T_eff <= K + 1) {
        throw InsufficientLength("lagged_design: effective sample " + std::to_string(T_eff) +
                                 " too short for K=" + std::to_string(K) + " regressors");
    }

    RegressionData data;
    data.y.resize(T_eff);
    data.X.resize(T_eff, K);
    for (int t = 0; t < T_eff; ++t) {
        const int s = start + t;
        data.y(t) = y[static_cast<std::size_t>(s)];
        int col = 0;
        for (int i = 1; i <= p; ++i) data.X(t, col++) = y[static_cast<std::size_t>(s - i)];
        if (exog) {
            for (int j = 0; j <= r; ++j) data.X(t, col++) = x[static_cast<std::size_t>(s - j)];
        }
    }
    data.validate();
    return data;
}

} // namespace acfbands

#endif
