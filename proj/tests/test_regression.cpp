#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "acfbands/regression.hpp"
#include "acfbands/simulation.hpp"
#include "test_support.hpp"

using namespace acfbands;

namespace {

Eigen::MatrixXd sigma_rho_hom_ar1_closed_form(double phi, int H) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(H, H);
    for (int i = 1; i <= H; ++i) {
        for (int j = 1; j <= H; ++j) {
            m(i - 1, j - 1) -= (1.0 - phi * phi) * std::pow(phi, i + j - 2);
        }
    }
    return m;
}

OlsFit ar1_fit(double phi1, double phi2, int T, std::uint64_t seed,
               RegressionData* out_data = nullptr) {
    RngStream rng = RngStream::substream(seed, 0);
    const TimeSeriesData y = simulate_ar({phi1, phi2, 2}, T + 1, 200, rng);
    RegressionData data = lagged_design(y.values, std::nullopt, 1, 0, false);
    if (out_data) *out_data = data;
    return ols_fit(data);
}

} // namespace

TEST_CASE("noise-free system is recovered exactly", "[regression]") {
    const int T = 40, K = 3;
    RngStream rng(17);
    RegressionData data;
    data.X.resize(T, K);
    data.y.resize(T);
    for (int t = 0; t < T; ++t) {
        for (int k = 0; k < K; ++k) data.X(t, k) = rng.next_normal();
        data.y(t) = 3.0 + data.X.row(t).sum();
    }
    const OlsFit fit = ols_fit(data);
    CHECK(fit.intercept == Catch::Approx(3.0).margin(1e-8));
    for (int k = 0; k < K; ++k) CHECK(fit.coeffs(k) == Catch::Approx(1.0).margin(1e-8));
    CHECK(fit.residuals.cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("orthogonal regressor gets a zero coefficient", "[regression]") {
    RegressionData data;
    data.y.resize(8);
    data.X.resize(8, 1);
    for (int t = 0; t < 8; ++t) {
        data.y(t) = (t % 2 == 0) ? 1.0 : 2.0;
        data.X(t, 0) = (t < 4) ? 1.0 : -1.0;
    }
    const OlsFit fit = ols_fit(data);
    CHECK(fit.coeffs(0) == Catch::Approx(0.0).margin(1e-12));
    CHECK(fit.intercept == Catch::Approx(1.5).margin(1e-12));
}

TEST_CASE("least squares is consistent for the AR(1) coefficient", "[regression]") {
    const OlsFit fit = ar1_fit(0.5, 0.0, 100000, 21);
    CHECK(fit.coeffs(0) == Catch::Approx(0.5).margin(0.01));
}

TEST_CASE("residuals sum to zero and the fit guards its preconditions", "[regression]") {
    RegressionData data;
    const OlsFit fit = ar1_fit(0.4, 0.0, 500, 22, &data);
    const double scale = std::sqrt(data.y.squaredNorm() / data.T());
    CHECK(std::fabs(fit.residuals.sum()) <= 1e-8 * data.T() * scale);
    CHECK(fit.sigma2_eps > 0.0);
    CHECK((fit.x_centered_gram - fit.x_centered_gram.transpose()).cwiseAbs().maxCoeff() < 1e-12);

    RegressionData dup;
    dup.y.resize(10);
    dup.X.resize(10, 2);
    RngStream rng(3);
    for (int t = 0; t < 10; ++t) {
        dup.X(t, 0) = rng.next_normal();
        dup.X(t, 1) = 2.0 * dup.X(t, 0);
        dup.y(t) = rng.next_normal();
    }
    CHECK_THROWS_AS(ols_fit(dup), RankDeficient);

    RegressionData tiny;
    tiny.y.resize(3);
    tiny.y << 1.0, 2.0, 3.0;
    tiny.X.resize(3, 2);
    tiny.X.setRandom();
    CHECK_THROWS_AS(ols_fit(tiny), Degenerate);
}

TEST_CASE("residual ACF uses raw residuals", "[regression]") {
    OlsFit fit;
    fit.T = 4;
    fit.K = 0;
    fit.residuals.resize(4);
    fit.residuals << 1.0, -1.0, 1.0, -1.0;
    fit.sigma2_eps = 1.0;
    const AcfEstimate acf = residual_acf(fit, 1);
    CHECK(acf.rho_at(1) == Catch::Approx(-0.75));
    CHECK(acf.mean == 0.0);

    OlsFit perfect;
    perfect.T = 6;
    perfect.K = 0;
    perfect.residuals = Eigen::VectorXd::Constant(6, 1e-14);
    CHECK_THROWS_AS(residual_acf(perfect, 2), DegenerateSeries);
}

TEST_CASE("lagged-residual moments of an AR(1) autoregression", "[regression]") {
    // c_h converges to phi^(h-1) when an AR(1) is fit to AR(1) data.
    const OlsFit fit = ar1_fit(0.5, 0.0, 100000, 31);
    const Eigen::MatrixXd gamma = estimate_gamma_hat(fit, 3);
    CHECK(gamma(0, 0) == Catch::Approx(1.0).margin(0.05));
    CHECK(gamma(1, 0) == Catch::Approx(0.5).margin(0.05));
    CHECK(gamma(2, 0) == Catch::Approx(0.25).margin(0.05));
}

TEST_CASE("exogenous static regression has vanishing residual moments", "[regression]") {
    // y_t = 1 + 2 x_t + e_t with e_t AR(1) and x_t independent noise.
    const int T = 100000;
    RngStream rng(41);
    RngStream erng(42);
    const TimeSeriesData e = simulate_ar(Dgp::ar1(0.5), T, 200, erng);
    RegressionData data;
    data.y.resize(T);
    data.X.resize(T, 1);
    for (int t = 0; t < T; ++t) {
        data.X(t, 0) = rng.next_normal();
        data.y(t) = 1.0 + 2.0 * data.X(t, 0) + e.values[static_cast<std::size_t>(t)];
    }
    const OlsFit fit = ols_fit(data);
    const Eigen::MatrixXd gamma = estimate_gamma_hat(fit, 5);
    CHECK(gamma.cwiseAbs().maxCoeff() < 0.05);

    // zero residuals give a zero matrix
    OlsFit clean;
    clean.T = 10;
    clean.K = 1;
    clean.X = Eigen::MatrixXd::Random(10, 1);
    clean.residuals = Eigen::VectorXd::Zero(10);
    CHECK(estimate_gamma_hat(clean, 3).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("plug-in covariance reproduces the AR(1) closed form", "[regression]") {
    const int H = 3;
    const Eigen::MatrixXd closed = sigma_rho_hom_ar1_closed_form(0.5, H);
    CHECK(closed(0, 0) == Catch::Approx(0.25));
    CHECK(closed(0, 1) == Catch::Approx(-0.375));
    CHECK(closed(1, 1) == Catch::Approx(0.8125));

    Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(H, H);
    const int reps = 5;
    for (int rep = 0; rep < reps; ++rep) {
        const OlsFit fit = ar1_fit(0.5, 0.0, 100000, 500 + static_cast<std::uint64_t>(rep));
        avg += sigma_rho_plugin(fit, H, SigmaRhoMode::hom).entries;
    }
    avg /= reps;
    CHECK((avg - closed).cwiseAbs().maxCoeff() < 0.02);
}

TEST_CASE("plug-in covariances match an independent evaluation", "[regression]") {
    // expected matrices computed independently (numpy) from the plug-in
    // definitions on this fixed 12-observation regression with K=2
    RegressionData data;
    data.y.resize(12);
    data.y << 0.619324, -0.285825, 1.717398, 0.031687, 0.852159, 1.838568, 0.891930, 1.738678,
        -0.069786, 1.444094, 1.594946, 1.150220;
    data.X.resize(12, 2);
    data.X << 0.765649, -0.496634, -2.050723, -0.006231, 0.526687, -0.512821, -0.293865,
        -0.696394, 0.467151, -1.145887, 1.445508, 0.566659, 0.128858, -0.118880, 1.679754,
        0.466157, -0.615068, 0.141986, 0.677098, -0.896538, 0.862149, -0.216590, 0.341006,
        0.150409;
    const OlsFit fit = ols_fit(data);
    const CovMatrix hom = sigma_rho_plugin(fit, 2, SigmaRhoMode::hom);
    const CovMatrix het = sigma_rho_plugin(fit, 2, SigmaRhoMode::het);
    CHECK(hom.entries(0, 0) == Catch::Approx(0.924193548429915).margin(1e-8));
    CHECK(hom.entries(0, 1) == Catch::Approx(0.089606094269605).margin(1e-8));
    CHECK(hom.entries(1, 1) == Catch::Approx(0.877249636178635).margin(1e-8));
    CHECK(het.entries(0, 0) == Catch::Approx(0.887969546446532).margin(1e-8));
    CHECK(het.entries(0, 1) == Catch::Approx(0.139599594006101).margin(1e-8));
    CHECK(het.entries(1, 1) == Catch::Approx(0.805096575894684).margin(1e-8));
}

TEST_CASE("hom and het plug-ins agree under homoskedastic errors", "[regression]") {
    const OlsFit fit = ar1_fit(0.5, 0.0, 50000, 61);
    const CovMatrix hom = sigma_rho_plugin(fit, 4, SigmaRhoMode::hom);
    const CovMatrix het = sigma_rho_plugin(fit, 4, SigmaRhoMode::het);
    CHECK((hom.entries - het.entries).cwiseAbs().maxCoeff() < 0.05);
    CHECK(hom.label == CovLabel::sigma_rho_hom);
    CHECK(het.label == CovLabel::sigma_rho_het);
}

TEST_CASE("hom plug-in diagonal never exceeds one", "[regression]") {
    for (int rep = 0; rep < 20; ++rep) {
        RngStream prng = RngStream::substream(71, static_cast<std::uint64_t>(rep));
        const double phi = -0.8 + 1.6 * prng.next_uniform();
        const OlsFit fit = ar1_fit(phi, 0.0, 300, 700 + static_cast<std::uint64_t>(rep));
        const CovMatrix hom = sigma_rho_plugin(fit, 8, SigmaRhoMode::hom);
        for (int h = 0; h < 8; ++h) {
            CHECK(hom.entries(h, h) <= 1.0 + 1e-10);
            CHECK(1.0 - hom.entries(h, h) >= -1e-10); // subtracted diagonal is nonnegative
        }
    }
}

TEST_CASE("shrinkage keeps the largest positive-definite leading block", "[regression]") {
    const int H = 3;
    CovMatrix pd(sigma_rho_hom_ar1_closed_form(0.5, H), CovLabel::sigma_rho_hom);
    const SigmaRhoEstimate keep = shrink_sigma_rho(pd);
    CHECK(keep.k_star == H + 1);
    CHECK((keep.shrunk.entries - pd.entries).cwiseAbs().maxCoeff() == 0.0);

    Eigen::MatrixXd bad1 = pd.entries;
    bad1(0, 0) = -0.2;
    const SigmaRhoEstimate all_id = shrink_sigma_rho(CovMatrix(bad1, CovLabel::sigma_rho_hom));
    CHECK(all_id.k_star == 1);
    CHECK((all_id.shrunk.entries - Eigen::MatrixXd::Identity(H, H)).cwiseAbs().maxCoeff() == 0.0);

    // perturb so the 3x3 determinant turns negative while the 2x2 block
    // stays positive definite; check the leading minors with a direct
    // determinant oracle.
    Eigen::MatrixXd bad3 = pd.entries;
    bad3(2, 2) = -0.5;
    REQUIRE(bad3.topLeftCorner(1, 1).determinant() > 0.0);
    REQUIRE(bad3.topLeftCorner(2, 2).determinant() > 0.0);
    REQUIRE(bad3.determinant() < 0.0);
    const SigmaRhoEstimate part = shrink_sigma_rho(CovMatrix(bad3, CovLabel::sigma_rho_hom));
    CHECK(part.k_star == 3);
    CHECK((part.shrunk.entries.topLeftCorner(2, 2) - pd.entries.topLeftCorner(2, 2))
              .cwiseAbs()
              .maxCoeff() == 0.0);
    CHECK(part.shrunk.entries(2, 2) == 1.0);
    CHECK(part.shrunk.entries(0, 2) == 0.0);
    CHECK(part.shrunk.entries(2, 1) == 0.0);
}

TEST_CASE("shrinkage postconditions on random symmetric matrices", "[regression]") {
    for (int rep = 0; rep < 30; ++rep) {
        RngStream rng = RngStream::substream(81, static_cast<std::uint64_t>(rep));
        const int H = 2 + static_cast<int>(rng.next_u64() % 9);
        Eigen::MatrixXd m(H, H);
        for (int i = 0; i < H; ++i) {
            for (int j = 0; j <= i; ++j) {
                m(i, j) = 2.0 * rng.next_normal();
                m(j, i) = m(i, j);
            }
        }
        const SigmaRhoEstimate est = shrink_sigma_rho(CovMatrix(m, CovLabel::sigma_rho_hom));
        const int keep = est.k_star - 1;
        if (keep > 0 && keep < H) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
                est.shrunk.entries.topLeftCorner(keep, keep), Eigen::EigenvaluesOnly);
            CHECK(es.eigenvalues().minCoeff() > 0.0);
        }
        for (int i = keep; i < H; ++i) {
            for (int j = 0; j < H; ++j) {
                CHECK(est.shrunk.entries(i, j) == ((i == j) ? 1.0 : 0.0));
            }
        }
        CHECK((est.shrunk.entries - est.shrunk.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("dynamic band is never wider than the naive band", "[regression]") {
    for (int rep = 0; rep < 8; ++rep) {
        RngStream prng = RngStream::substream(91, static_cast<std::uint64_t>(rep));
        const double phi = -0.7 + 1.4 * prng.next_uniform();
        const OlsFit fit = ar1_fit(phi, 0.0, 400, 900 + static_cast<std::uint64_t>(rep));
        const Band exact = significance_band_dynamic(fit, 10, 0.1, SigmaRhoMode::hom, false,
                                                     {1e-4, static_cast<std::uint64_t>(rep)});
        const Band naive = significance_band_dynamic(fit, 10, 0.1, SigmaRhoMode::hom, true);
        const auto we = band_width(exact);
        const auto wn = band_width(naive);
        for (int h = 0; h < 10; ++h) {
            CHECK(we[static_cast<std::size_t>(h)] <=
                  wn[static_cast<std::size_t>(h)] * (1.0 + 2e-3) + 1e-12);
        }
        CHECK(exact.kind == BandKind::sig_dynamic_exact);
        CHECK(naive.kind == BandKind::sig_dynamic_naive);
    }
}

TEST_CASE("naive dynamic band equals the observed-series band", "[regression]") {
    const OlsFit fit = ar1_fit(0.5, 0.0, 300, 95);
    const Band naive = significance_band_dynamic(fit, 8, 0.1, SigmaRhoMode::hom, true);
    const Band sim = significance_band_simultaneous(fit.T, 8, 0.1);
    for (int h = 1; h <= 8; ++h) {
        CHECK(naive.upper_at(h) == sim.upper_at(h));
        CHECK(naive.lower_at(h) == sim.lower_at(h));
    }
}

TEST_CASE("uncorrected regressors keep the exact band close to the naive one", "[regression]") {
    // static regression: Gamma_hat -> 0, so the corrected band approaches
    // the naive one
    const int T = 20000;
    RngStream rng(43);
    RngStream erng(44);
    RegressionData data;
    data.y.resize(T);
    data.X.resize(T, 1);
    for (int t = 0; t < T; ++t) {
        data.X(t, 0) = rng.next_normal();
        data.y(t) = 0.5 + data.X(t, 0) + erng.next_normal();
    }
    const OlsFit fit = ols_fit(data);
    const Band exact = significance_band_dynamic(fit, 5, 0.1, SigmaRhoMode::hom, false, {1e-4, 3});
    const Band naive = significance_band_dynamic(fit, 5, 0.1, SigmaRhoMode::hom, true);
    for (int h = 1; h <= 5; ++h) {
        CHECK(exact.upper_at(h) == Catch::Approx(naive.upper_at(h)).epsilon(0.02));
    }
}

TEST_CASE("confidence bands assemble on residual autocorrelations", "[regression]") {
    // static-regression path: the observed-series machinery applies to
    // residual ACFs, with the extended-lag estimate feeding the kernel sum
    RegressionData data;
    const OlsFit fit = ar1_fit(0.4, 0.0, 300, 321, &data);
    const KernelBandwidth kb{KernelKind::bartlett_triangular, BandwidthRule::sqrt_T()};
    const double L = kb.resolve(fit.T);
    const AcfEstimate ext = residual_acf(fit, melard_roy_required_lags(fit.T, L));
    const CovMatrix bhat = melard_roy_estimate(ext, 8, kb);
    const AcfEstimate racf = residual_acf(fit, 8);
    const Band supt = confidence_band(racf, bhat, 0.1, ConfidenceKind::supt, {1e-3, 5});
    CHECK(supt.H == 8);
    for (int h = 1; h <= 8; ++h) {
        CHECK(std::isfinite(supt.lower_at(h)));
        CHECK(0.5 * (supt.lower_at(h) + supt.upper_at(h)) ==
              Catch::Approx(racf.rho_at(h)).margin(1e-12));
    }
}

TEST_CASE("static-regression residual bands keep their size", "[regression]") {
    // with exogenous regressors and white-noise errors the observed-series
    // simultaneous band applies unchanged to residual autocorrelations
    const int T = 400, H = 10, reps = 800;
    const double alpha = 0.1;
    const Band band = significance_band_simultaneous(T, H, alpha);
    int rejections = 0;
    for (int rep = 0; rep < reps; ++rep) {
        RngStream rng = RngStream::substream(50000, static_cast<std::uint64_t>(rep));
        RegressionData data;
        data.y.resize(T);
        data.X.resize(T, 1);
        for (int t = 0; t < T; ++t) {
            data.X(t, 0) = rng.next_normal();
            data.y(t) = 1.0 + 0.5 * data.X(t, 0) + rng.next_normal();
        }
        const AcfEstimate racf = residual_acf(ols_fit(data), H);
        if (rejects_white_noise(racf, band)) ++rejections;
    }
    CHECK(std::fabs(static_cast<double>(rejections) / reps - alpha) <= 0.03);
}

TEST_CASE("lagged designs align rows as specified", "[regression]") {
    const std::vector<double> y{1.0, 2.0, 3.0, 4.0, 5.0};
    const RegressionData d = lagged_design(y, std::nullopt, 1, 0, false);
    REQUIRE(d.T() == 4);
    REQUIRE(d.K() == 1);
    CHECK(d.y(0) == 2.0);
    CHECK(d.y(3) == 5.0);
    CHECK(d.X(0, 0) == 1.0);
    CHECK(d.X(3, 0) == 4.0);

    // static path: p = 0 with an exogenous regressor
    const std::vector<double> x{0.5, 1.0, 1.5, 2.0, 2.5};
    const RegressionData st = lagged_design(y, x, 0, 0, false);
    CHECK(st.T() == 5);
    CHECK(st.K() == 1);
    CHECK(st.X(2, 0) == 1.5);

    // differenced dependent variable with one endogenous lag
    const std::vector<double> yd{1.0, 3.0, 2.0, 5.0, 4.0, 7.0};
    const RegressionData dd = lagged_design(yd, std::nullopt, 1, 0, true);
    REQUIRE(dd.T() == 4);
    CHECK(dd.y(0) == Catch::Approx(-1.0)); // Delta y_3 = 2 - 3
    CHECK(dd.X(0, 0) == Catch::Approx(2.0)); // Delta y_2 = 3 - 1

    // exogenous lags r consume starting values too
    const std::vector<double> y10{1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0};
    const std::vector<double> x10{0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0};
    const RegressionData dr = lagged_design(y10, x10, 0, 2, false);
    REQUIRE(dr.T() == 8);
    CHECK(dr.X(0, 0) == 1.5); // x_t at the first effective row
    CHECK(dr.X(0, 2) == 0.5); // x_{t-2}

    CHECK_THROWS_AS(lagged_design({1.0, 2.0, 3.0}, std::nullopt, 2, 0, false),
                    InsufficientLength);
}
