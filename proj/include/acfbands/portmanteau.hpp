#ifndef ACFBANDS_PORTMANTEAU_HPP
#define ACFBANDS_PORTMANTEAU_HPP

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "acfbands/acf.hpp"
#include "acfbands/errors.hpp"
#include "acfbands/regression.hpp"
#include "acfbands/special_functions.hpp"

namespace acfbands {

enum class PortmanteauName { box_pierce, ljung_box, breusch_godfrey };

inline const char* to_string(PortmanteauName name) {
    switch (name) {
        case PortmanteauName::box_pierce: return "box_pierce";
        case PortmanteauName::ljung_box: return "ljung_box";
        case PortmanteauName::breusch_godfrey: return "breusch_godfrey";
    }
    return "unknown";
}

struct TestResult {
    double statistic = 0.0;
    int df = 0;
    double pvalue = 1.0;
    PortmanteauName name = PortmanteauName::box_pierce;

    bool rejects(double alpha) const { return pvalue < alpha; }
};

/// Box-Pierce: Q = T * sum_{h=1}^H rho_hat(h)^2, chi-square with H df.
inline TestResult box_pierce(const AcfEstimate& acf, int H) {
    if (H < 1 || H > acf.H) throw InvalidLag("box_pierce: H must lie in [1, acf.H]");
    double q = 0.0;
    for (int h = 1; h <= H; ++h) q += acf.rho_at(h) * acf.rho_at(h);
    q *= acf.T;
    return {q, H, chi_squared_sf(q, H), PortmanteauName::box_pierce};
}

/// Ljung-Box: Q* = T(T+2) * sum_{h=1}^H rho_hat(h)^2/(T-h), chi-square with H df.
inline TestResult ljung_box(const AcfEstimate& acf, int H) {
    if (H < 1 || H > acf.H) throw InvalidLag("ljung_box: H must lie in [1, acf.H]");
    const double T = acf.T;
    double q = 0.0;
    for (int h = 1; h <= H; ++h) {
        q += acf.rho_at(h) * acf.rho_at(h) / (T - h);
    }
    q *= T * (T + 2.0);
    return {q, H, chi_squared_sf(q, H), PortmanteauName::ljung_box};
}

/// Breusch-Godfrey LM test: regress e_hat on the original regressors plus
/// e_hat_{t-1..t-H} (pre-sample lags padded with zeros so all T rows are
/// used); statistic = T * R^2 of the auxiliary regression, chi-square with
/// H df.
inline TestResult breusch_godfrey(const OlsFit& fit, const RegressionData& data, int H) {
    const int T = fit.T;
    const int K = fit.K;
    if (H < 1 || H > T - 1) throw InvalidLag("breusch_godfrey: H must lie in [1, T-1]");
    if (data.T() != T || data.K() != K) {
        throw DimensionMismatch("breusch_godfrey: fit and data disagree on dimensions");
    }
    const int cols = 1 + K + H;
    if (T <= cols) {
        throw RankDeficient("breusch_godfrey: auxiliary regression has no residual degrees of "
                            "freedom (T=" + std::to_string(T) + ", regressors=" +
                            std::to_string(cols) + ")");
    }

    const Eigen::VectorXd& e = fit.residuals;
    const double sst = e.squaredNorm(); // residuals have zero mean by intercept orthogonality
    if (sst <= 1e-20 * T) {
        return {0.0, H, 1.0, PortmanteauName::breusch_godfrey};
    }

    Eigen::MatrixXd aux(T, cols);
    aux.col(0).setOnes();
    if (K > 0) aux.middleCols(1, K) = data.X;
    for (int h = 1; h <= H; ++h) {
        for (int t = 0; t < T; ++t) {
            aux(t, K + h) = (t - h >= 0) ? e(t - h) : 0.0;
        }
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(aux);
    qr.setThreshold(1e-10);
    if (qr.rank() < cols) {
        throw RankDeficient("breusch_godfrey: auxiliary design is rank deficient");
    }
    const Eigen::VectorXd coef = qr.solve(e);
    const double ssr = (e - aux * coef).squaredNorm();
    const double r2 = std::clamp(1.0 - ssr / sst, 0.0, 1.0);
    const double stat = T * r2;
    return {stat, H, chi_squared_sf(stat, H), PortmanteauName::breusch_godfrey};
}

} // namespace acfbands

#endif
