#include <catch2/catch_amalgamated.hpp>

#include "acfbands/acf.hpp"
#include "test_support.hpp"

using namespace acfbands;

TEST_CASE("hand-computed ACF values", "[acf]") {
    const TimeSeriesData y{{1.0, 2.0, 3.0, 4.0}};
    const AcfEstimate est = compute_acf(y, 1);
    CHECK(est.mean == Catch::Approx(2.5));
    CHECK(est.gamma_at(0) == Catch::Approx(1.25));
    CHECK(est.gamma_at(1) == Catch::Approx(0.3125));
    CHECK(est.rho_at(1) == Catch::Approx(0.25));

    const TimeSeriesData alt{{1.0, -1.0, 1.0, -1.0}};
    const AcfEstimate est2 = compute_acf(alt, 1);
    CHECK(est2.gamma_at(0) == Catch::Approx(1.0));
    CHECK(est2.rho_at(1) == Catch::Approx(-0.75));
}

TEST_CASE("constant series is degenerate", "[acf]") {
    const TimeSeriesData y{{3.7, 3.7, 3.7, 3.7}};
    CHECK_THROWS_AS(compute_acf(y, 1), DegenerateSeries);
    const TimeSeriesData big{{1e9, 1e9, 1e9, 1e9, 1e9}};
    CHECK_THROWS_AS(compute_acf(big, 1), DegenerateSeries);
}

TEST_CASE("lag bounds are enforced", "[acf]") {
    const TimeSeriesData y{{1.0, 2.0, 3.0, 4.0}};
    CHECK_THROWS_AS(compute_acf(y, 0), InvalidLag);
    CHECK_THROWS_AS(compute_acf(y, 4), InvalidLag);
    CHECK_NOTHROW(compute_acf(y, 3));
    CHECK_THROWS_AS(TimeSeriesData{{1.0}}, InvalidArgument);
    CHECK_THROWS_AS(TimeSeriesData({1.0, std::nan("")}), InvalidArgument);
}

TEST_CASE("matches the double-loop oracle exactly on random short series", "[acf]") {
    RngStream rng(2024);
    for (int rep = 0; rep < 50; ++rep) {
        const int T = 5 + static_cast<int>(rng.next_u64() % 16); // 5..20
        std::vector<double> y(static_cast<std::size_t>(T));
        for (auto& v : y) v = 3.0 * rng.next_normal() + 1.0;
        const int H = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(T - 1));
        const AcfEstimate est = compute_acf(TimeSeriesData{y}, H);
        const auto oracle = test_support::acf_oracle(y, H);
        CHECK(est.mean == oracle.mean);
        for (int h = 0; h <= H; ++h) {
            CHECK(est.gamma_at(h) == oracle.gamma[static_cast<std::size_t>(h)]);
            CHECK(est.rho_at(h) == oracle.rho[static_cast<std::size_t>(h)]);
        }
    }
}

TEST_CASE("shift invariance and scale behaviour", "[acf]") {
    RngStream rng(7);
    std::vector<double> y(80);
    for (auto& v : y) v = rng.next_normal();
    const int H = 10;
    const AcfEstimate base = compute_acf(TimeSeriesData{y}, H);

    std::vector<double> shifted = y;
    for (auto& v : shifted) v += 5.0;
    const AcfEstimate sh = compute_acf(TimeSeriesData{shifted}, H);
    for (int h = 0; h <= H; ++h) {
        CHECK(sh.gamma_at(h) == Catch::Approx(base.gamma_at(h)).margin(1e-12));
        CHECK(sh.rho_at(h) == Catch::Approx(base.rho_at(h)).margin(1e-12));
    }

    std::vector<double> scaled = y;
    for (auto& v : scaled) v *= -2.5;
    const AcfEstimate sc = compute_acf(TimeSeriesData{scaled}, H);
    for (int h = 0; h <= H; ++h) {
        CHECK(sc.gamma_at(h) == Catch::Approx(6.25 * base.gamma_at(h)).margin(1e-12));
        CHECK(sc.rho_at(h) == Catch::Approx(base.rho_at(h)).margin(1e-12));
    }
}

TEST_CASE("autocorrelations are bounded by one", "[acf]") {
    RngStream rng(99);
    for (int rep = 0; rep < 20; ++rep) {
        const int T = 10 + static_cast<int>(rng.next_u64() % 100);
        std::vector<double> y(static_cast<std::size_t>(T));
        for (auto& v : y) v = rng.next_normal();
        const AcfEstimate est = compute_acf(TimeSeriesData{y}, T - 1);
        CHECK(est.rho_at(0) == 1.0);
        CHECK(est.gamma_at(0) > 0.0);
        for (int h = 1; h <= est.H; ++h) CHECK(std::fabs(est.rho_at(h)) <= 1.0 + 1e-12);
    }
}

TEST_CASE("AR(1) population ACF", "[acf]") {
    CHECK(true_acf_ar1(0.0, 3) == std::vector<double>{0.0, 0.0, 0.0});
    const auto r = true_acf_ar1(0.5, 3);
    CHECK(r[0] == Catch::Approx(0.5));
    CHECK(r[1] == Catch::Approx(0.25));
    CHECK(r[2] == Catch::Approx(0.125));
    const auto r2 = true_acf_ar1(0.75, 2);
    CHECK(r2[0] == Catch::Approx(0.75));
    CHECK(r2[1] == Catch::Approx(0.5625));
    CHECK_THROWS_AS(true_acf_ar1(1.0, 2), NonStationary);
    CHECK_THROWS_AS(true_acf_ar1(-1.01, 2), NonStationary);
}

TEST_CASE("default max lag rule", "[acf]") {
    CHECK(default_max_lag(100) == 20);
    CHECK(default_max_lag(800) == 29);
    CHECK(default_max_lag(10) == 9);   // capped at T-1
    CHECK(default_max_lag(2) == 1);
}
