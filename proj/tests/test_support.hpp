#ifndef ACFBANDS_TEST_SUPPORT_HPP
#define ACFBANDS_TEST_SUPPORT_HPP

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "acfbands/acf.hpp"
#include "acfbands/rng.hpp"

namespace test_support {

// Brute-force ACF oracle: the defining sums, written independently of the
// library implementation path it checks.
struct OracleAcf {
    double mean;
    std::vector<double> gamma;
    std::vector<double> rho;
};

inline OracleAcf acf_oracle(const std::vector<double>& y, int H) {
    const int T = static_cast<int>(y.size());
    OracleAcf o;
    double s = 0.0;
    for (int t = 0; t < T; ++t) s += y[static_cast<std::size_t>(t)];
    o.mean = s / T;
    o.gamma.assign(static_cast<std::size_t>(H) + 1, 0.0);
    for (int h = 0; h <= H; ++h) {
        double acc = 0.0;
        for (int t = 0; t + h < T; ++t) {
            acc += (y[static_cast<std::size_t>(t)] - o.mean) *
                   (y[static_cast<std::size_t>(t + h)] - o.mean);
        }
        o.gamma[static_cast<std::size_t>(h)] = acc / T;
    }
    o.rho.assign(static_cast<std::size_t>(H) + 1, 1.0);
    for (int h = 1; h <= H; ++h) {
        o.rho[static_cast<std::size_t>(h)] = o.gamma[static_cast<std::size_t>(h)] / o.gamma[0];
    }
    return o;
}

// Random correlation matrix via a Gram matrix of H+2 random vectors.
inline Eigen::MatrixXd random_correlation(int H, acfbands::RngStream& rng) {
    Eigen::MatrixXd a(H, H + 2);
    for (int i = 0; i < H; ++i) {
        for (int j = 0; j < H + 2; ++j) a(i, j) = rng.next_normal();
    }
    Eigen::MatrixXd s = a * a.transpose();
    s += 0.05 * Eigen::MatrixXd::Identity(H, H);
    Eigen::VectorXd dinv = s.diagonal().array().sqrt().inverse();
    Eigen::MatrixXd r = dinv.asDiagonal() * s * dinv.asDiagonal();
    for (int i = 0; i < H; ++i) r(i, i) = 1.0;
    return r;
}

// Plain Monte-Carlo oracle for P(max_h |V_h| <= q), V ~ N(0, R).
struct McRectResult {
    double prob;
    double se;
};

inline McRectResult mc_rect_prob_oracle(const Eigen::MatrixXd& r, double q, long draws,
                                        acfbands::RngStream& rng) {
    const int H = static_cast<int>(r.rows());
    Eigen::LLT<Eigen::MatrixXd> llt(r + 1e-12 * Eigen::MatrixXd::Identity(H, H));
    const Eigen::MatrixXd chol = llt.matrixL();
    Eigen::VectorXd z(H);
    long inside = 0;
    for (long k = 0; k < draws; ++k) {
        for (int i = 0; i < H; ++i) z(i) = rng.next_normal();
        bool ok = true;
        for (int i = 0; i < H && ok; ++i) {
            double v = 0.0;
            for (int j = 0; j <= i; ++j) v += chol(i, j) * z(j);
            if (std::fabs(v) > q) ok = false;
        }
        if (ok) ++inside;
    }
    const double p = static_cast<double>(inside) / static_cast<double>(draws);
    return {p, std::sqrt(std::max(p * (1.0 - p), 1e-12) / static_cast<double>(draws))};
}

} // namespace test_support

#endif
