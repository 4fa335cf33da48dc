#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "acfbands/bands.hpp"
#include "acfbands/simulation.hpp"
#include "test_support.hpp"

using namespace acfbands;

namespace {

struct WidthRef {
    int T;
    int H;
    double sim;
    double pw;
};

// Significance-band widths at alpha = 0.1, rounded to three decimals.
constexpr WidthRef kWidthReference[] = {
    {50, 1, 0.465, 0.465},  {50, 10, 0.724, 0.465},  {50, 25, 0.810, 0.465},
    {200, 1, 0.233, 0.233}, {200, 10, 0.362, 0.233}, {200, 25, 0.405, 0.233},
    {800, 1, 0.116, 0.116}, {800, 10, 0.181, 0.116}, {800, 25, 0.202, 0.116},
};

AcfEstimate synth_acf(int rep, int T, int H, double phi, CovMatrix* bhat = nullptr) {
    RngStream rng = RngStream::substream(1900 + rep, 0);
    const TimeSeriesData y = simulate_ar(Dgp::ar1(phi), T, 200, rng);
    if (bhat) {
        *bhat = melard_roy_estimate(y, H,
                                    {KernelKind::bartlett_triangular, BandwidthRule::sqrt_T()});
    }
    return compute_acf(y, H);
}

} // namespace

TEST_CASE("significance-band widths match the tabulated values", "[bands]") {
    for (const auto& ref : kWidthReference) {
        const Band sim = significance_band_simultaneous(ref.T, ref.H, 0.1);
        const Band pw = significance_band_pointwise(ref.T, ref.H, 0.1);
        INFO("T=" << ref.T << " H=" << ref.H);
        CHECK(std::fabs(band_width(sim)[0] - ref.sim) <= 1e-3);
        CHECK(std::fabs(band_width(pw)[0] - ref.pw) <= 1e-3);
        // constant over lags, symmetric about zero
        for (int h = 1; h <= ref.H; ++h) {
            CHECK(sim.upper_at(h) == sim.upper_at(1));
            CHECK(sim.lower_at(h) == -sim.upper_at(h));
        }
    }
}

TEST_CASE("simultaneous kinds collapse to pointwise ones at H=1", "[bands]") {
    const Band sim = significance_band_simultaneous(200, 1, 0.1);
    const Band pw = significance_band_pointwise(200, 1, 0.1);
    CHECK(std::fabs(sim.upper_at(1) - pw.upper_at(1)) < 1e-9);

    const AcfEstimate acf = synth_acf(3, 200, 1, 0.3);
    Eigen::MatrixXd one(1, 1);
    one << 0.8;
    const CovMatrix bhat(one, CovLabel::melard_roy);
    const Band supt = confidence_band(acf, bhat, 0.1, ConfidenceKind::supt);
    const Band bonf = confidence_band(acf, bhat, 0.1, ConfidenceKind::bonferroni);
    const Band cpw = confidence_band(acf, bhat, 0.1, ConfidenceKind::pointwise);
    CHECK(std::fabs(supt.upper_at(1) - cpw.upper_at(1)) < 1e-9);
    CHECK(std::fabs(bonf.upper_at(1) - cpw.upper_at(1)) < 1e-9);
    CHECK(std::fabs(supt.lower_at(1) - cpw.lower_at(1)) < 1e-9);
}

TEST_CASE("sup-t band with identity covariance equals the simultaneous band", "[bands]") {
    const int T = 200, H = 10;
    const AcfEstimate acf = synth_acf(1, T, H, 0.3);
    const Band supt = confidence_band(acf, CovMatrix::identity(H), 0.1, ConfidenceKind::supt);
    const Band sim = significance_band_simultaneous(T, H, 0.1);
    for (int h = 1; h <= H; ++h) {
        CHECK(band_width(supt)[static_cast<std::size_t>(h - 1)] ==
              Catch::Approx(band_width(sim)[static_cast<std::size_t>(h - 1)]).margin(2e-3));
    }
    // centred on the estimate
    CHECK(0.5 * (supt.upper_at(3) + supt.lower_at(3)) == Catch::Approx(acf.rho_at(3)));
}

TEST_CASE("band nesting: pointwise inside sup-t inside Bonferroni", "[bands]") {
    for (int rep = 0; rep < 12; ++rep) {
        CovMatrix bhat;
        RngStream prng = RngStream::substream(3000, static_cast<std::uint64_t>(rep));
        const double phi = -0.7 + 1.4 * prng.next_uniform();
        const AcfEstimate acf = synth_acf(100 + rep, 150, 8, phi, &bhat);
        const Band pw = confidence_band(acf, bhat, 0.1, ConfidenceKind::pointwise);
        const Band supt = confidence_band(acf, bhat, 0.1, ConfidenceKind::supt,
                                          {1e-4, static_cast<std::uint64_t>(rep)});
        const Band bonf = confidence_band(acf, bhat, 0.1, ConfidenceKind::bonferroni);
        for (int h = 1; h <= 8; ++h) {
            const double slack = 2e-3 * std::fabs(supt.upper_at(h) - supt.lower_at(h)) + 1e-12;
            CHECK(pw.lower_at(h) >= supt.lower_at(h) - slack);
            CHECK(pw.upper_at(h) <= supt.upper_at(h) + slack);
            CHECK(supt.lower_at(h) >= bonf.lower_at(h) - slack);
            CHECK(supt.upper_at(h) <= bonf.upper_at(h) + slack);
        }
    }
}

TEST_CASE("bands shrink as alpha grows", "[bands]") {
    CovMatrix bhat;
    const AcfEstimate acf = synth_acf(42, 200, 6, 0.4, &bhat);
    for (auto kind : {ConfidenceKind::pointwise, ConfidenceKind::bonferroni, ConfidenceKind::supt}) {
        const Band wide = confidence_band(acf, bhat, 0.05, kind);
        const Band narrow = confidence_band(acf, bhat, 0.2, kind);
        for (int h = 1; h <= 6; ++h) {
            CHECK(narrow.lower_at(h) >= wide.lower_at(h) - 2e-3);
            CHECK(narrow.upper_at(h) <= wide.upper_at(h) + 2e-3);
        }
    }
    const Band wide = significance_band_simultaneous(200, 6, 0.05);
    const Band narrow = significance_band_simultaneous(200, 6, 0.2);
    CHECK(narrow.upper_at(1) < wide.upper_at(1));
}

TEST_CASE("width identity for confidence bands", "[bands]") {
    CovMatrix bhat;
    const AcfEstimate acf = synth_acf(7, 120, 5, 0.5, &bhat);
    const Band band = confidence_band(acf, bhat, 0.1, ConfidenceKind::bonferroni);
    const auto w = band_width(band);
    for (int h = 1; h <= 5; ++h) {
        const double expect =
            2.0 * band.scaling_c * std::sqrt(bhat.entries(h - 1, h - 1) / acf.T);
        CHECK(w[static_cast<std::size_t>(h - 1)] == Catch::Approx(expect).margin(1e-12));
    }
}

TEST_CASE("rejection decisions and boundary convention", "[bands]") {
    const int T = 100, H = 4;
    Band band = significance_band_simultaneous(T, H, 0.1);

    AcfEstimate acf;
    acf.T = T;
    acf.H = H;
    acf.gamma.assign(5, 1.0);
    acf.rho.assign(5, 0.0);
    acf.rho[0] = 1.0;
    CHECK_FALSE(rejects_white_noise(acf, band));

    acf.rho[1] = band.upper_at(1); // exactly on the boundary: no rejection
    CHECK_FALSE(rejects_white_noise(acf, band));

    acf.rho[1] = band.upper_at(1) + 1e-9;
    CHECK(rejects_white_noise(acf, band));

    CovMatrix bhat = CovMatrix::identity(H);
    const Band conf = confidence_band(acf, bhat, 0.1, ConfidenceKind::pointwise);
    CHECK_THROWS_AS(rejects_white_noise(acf, conf), KindMismatch);
}

TEST_CASE("coverage decisions", "[bands]") {
    CovMatrix bhat;
    const AcfEstimate acf = synth_acf(13, 150, 6, 0.25, &bhat);
    const Band band = confidence_band(acf, bhat, 0.1, ConfidenceKind::pointwise);

    std::vector<double> center(6);
    for (int h = 1; h <= 6; ++h) center[static_cast<std::size_t>(h - 1)] = acf.rho_at(h);
    CHECK(covers_path(band, center));

    std::vector<double> shifted = center;
    shifted[0] += 2.0 * (band.upper_at(1) - band.lower_at(1));
    CHECK_FALSE(covers_path(band, shifted));

    CHECK_THROWS_AS(covers_path(band, std::vector<double>(4, 0.0)), DimensionMismatch);
    const Band sig = significance_band_pointwise(150, 6, 0.1);
    CHECK_THROWS_AS(covers_path(sig, center), KindMismatch);
}

TEST_CASE("degenerate variances are floored", "[bands]") {
    AcfEstimate acf;
    acf.T = 50;
    acf.H = 3;
    acf.gamma.assign(4, 1.0);
    acf.rho.assign(4, 0.1);
    acf.rho[0] = 1.0;
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(3, 3);
    const Band band = confidence_band(acf, CovMatrix(z, CovLabel::melard_roy), 0.1,
                                      ConfidenceKind::pointwise);
    for (double w : band_width(band)) {
        CHECK(std::isfinite(w));
        CHECK(w > 0.0);
    }
}

TEST_CASE("pointwise significance size approaches its closed form", "[bands]") {
    // Rejection frequency of the pointwise band under white noise is close
    // to 1 - (1-alpha)^H.
    const int T = 800, H = 10, reps = 2000;
    const double alpha = 0.1;
    const Band pw = significance_band_pointwise(T, H, alpha);
    int rejections = 0;
    for (int rep = 0; rep < reps; ++rep) {
        RngStream rng = RngStream::substream(60000, static_cast<std::uint64_t>(rep));
        const TimeSeriesData y = simulate_ar(Dgp::ar1(0.0), T, 100, rng);
        if (rejects_white_noise(compute_acf(y, H), pw)) ++rejections;
    }
    const double freq = static_cast<double>(rejections) / reps;
    const double expect = 1.0 - std::pow(1.0 - alpha, H);
    CHECK(std::fabs(freq - expect) <= 0.03);
}

TEST_CASE("parameter validation", "[bands]") {
    CHECK_THROWS_AS(significance_band_simultaneous(1, 1, 0.1), InvalidArgument);
    CHECK_THROWS_AS(significance_band_simultaneous(100, 0, 0.1), InvalidArgument);
    CHECK_THROWS_AS(significance_band_simultaneous(100, 100, 0.1), InvalidArgument);
    CHECK_THROWS_AS(significance_band_pointwise(100, 10, 0.0), InvalidArgument);
    AcfEstimate acf;
    acf.T = 100;
    acf.H = 5;
    acf.gamma.assign(6, 1.0);
    acf.rho.assign(6, 0.0);
    acf.rho[0] = 1.0;
    CHECK_THROWS_AS(confidence_band(acf, CovMatrix::identity(4), 0.1, ConfidenceKind::pointwise),
                    DimensionMismatch);
}
