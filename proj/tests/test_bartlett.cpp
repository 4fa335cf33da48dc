#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "acfbands/bartlett.hpp"
#include "acfbands/simulation.hpp"
#include "ar1_reference.hpp"
#include "test_support.hpp"

using namespace acfbands;

TEST_CASE("white noise gives the identity matrix exactly", "[bartlett]") {
    const CovMatrix b = bartlett_analytic(std::vector<double>{}, 10);
    CHECK((b.entries - Eigen::MatrixXd::Identity(10, 10)).cwiseAbs().maxCoeff() == 0.0);
    const CovMatrix b2 = bartlett_analytic_ar1(0.0, 4);
    CHECK((b2.entries - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("AR(1) reference entries at H=2", "[bartlett]") {
    // Values rounded to three decimals, so matches hold within 5e-4 (+fuzz).
    const double tol = 5e-4 + 1e-9;
    const CovMatrix b05 = bartlett_analytic_ar1(0.5, 2);
    CHECK(std::fabs(b05.entries(0, 0) - 0.75) <= tol);
    CHECK(std::fabs(b05.entries(0, 1) - 0.75) <= tol);
    CHECK(std::fabs(b05.entries(1, 0) - 0.75) <= tol);
    CHECK(std::fabs(b05.entries(1, 1) - 1.312) <= tol);

    const CovMatrix b025 = bartlett_analytic_ar1(0.25, 2);
    CHECK(std::fabs(b025.entries(0, 0) - 0.938) <= tol);
    CHECK(std::fabs(b025.entries(0, 1) - 0.469) <= tol);
    CHECK(std::fabs(b025.entries(1, 1) - 1.113) <= tol);
}

TEST_CASE("all four reference matrices reproduce at H=10", "[bartlett]") {
    for (const auto& ref : test_support::kAr1BartlettReference) {
        const CovMatrix b = bartlett_analytic_ar1(ref.phi, 10);
        for (int g = 0; g < 10; ++g) {
            for (int h = 0; h < 10; ++h) {
                INFO("phi=" << ref.phi << " g=" << g + 1 << " h=" << h + 1);
                CHECK(std::fabs(b.entries(g, h) -
                                ref.b[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]) <=
                      5e-4 + 1e-9);
            }
        }
    }
}

TEST_CASE("callable without envelope matches the AR(1) wrapper", "[bartlett]") {
    const CovMatrix direct = bartlett_analytic_ar1(0.6, 6);
    const CovMatrix generic = bartlett_analytic([](int k) { return std::pow(0.6, k); }, 6);
    CHECK((direct.entries - generic.entries).cwiseAbs().maxCoeff() < 1e-10);

    const CovMatrix neg = bartlett_analytic_ar1(-0.5, 4);
    const CovMatrix neg_generic = bartlett_analytic([](int k) { return std::pow(-0.5, k); }, 4);
    CHECK((neg.entries - neg_generic.entries).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("finite-support ACF against the hand-derived sum", "[bartlett]") {
    // rho(1) = 0.4, zero beyond: the Bartlett sum has three nonzero terms.
    const CovMatrix b = bartlett_analytic(std::vector<double>{0.4}, 3);
    CHECK(b.entries(0, 0) == Catch::Approx(0.6224).margin(1e-12));
    CHECK(b.entries(0, 1) == Catch::Approx(0.672).margin(1e-12));
    CHECK(b.entries(0, 2) == Catch::Approx(0.16).margin(1e-12));
    CHECK(b.entries(1, 1) == Catch::Approx(1.32).margin(1e-12));
    CHECK(b.entries(1, 2) == Catch::Approx(0.8).margin(1e-12));
    CHECK(b.entries(2, 2) == Catch::Approx(1.32).margin(1e-12));
}

TEST_CASE("kernel estimate matches an independent evaluation of the sum", "[bartlett]") {
    // expected entries computed independently (numpy) from the estimator's
    // defining sum on this fixed series, T=20, L=sqrt(20), H=3
    const TimeSeriesData y{{-1.423825, 1.563728, -0.270662, 0.640827, 1.124657, 0.759115,
                            0.432207,  0.748893, 0.761058,  -1.252863, 3.347410, 2.268497,
                            0.840613,  2.802198, -0.266953, 0.439310,  1.588844, -0.156668,
                            1.975858,  3.098979}};
    const double expect[3][3] = {
        {0.919563734204448, -0.091508383160798, -0.072355842262358},
        {-0.091508383160798, 0.943088828869049, -0.240964666132636},
        {-0.072355842262358, -0.240964666132636, 1.012820687588362},
    };
    const KernelBandwidth kb{KernelKind::bartlett_triangular, BandwidthRule::sqrt_T()};
    const CovMatrix b = melard_roy_estimate(y, 3, kb);
    for (int g = 0; g < 3; ++g) {
        for (int h = 0; h < 3; ++h) {
            CHECK(b.entries(g, h) == Catch::Approx(expect[g][h]).margin(1e-12));
        }
    }
}

TEST_CASE("analytic matrix is symmetric", "[bartlett]") {
    const CovMatrix b = bartlett_analytic_ar1(0.75, 10);
    CHECK((b.entries - b.entries.transpose()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("bandwidth rules resolve as stated", "[bartlett]") {
    CHECK(resolve_bandwidth(BandwidthRule::m_sqrt(1.0), 400) == Catch::Approx(20.0));
    CHECK(resolve_bandwidth(BandwidthRule::m_sqrt(3.0), 100) == Catch::Approx(30.0));
    CHECK(resolve_bandwidth(BandwidthRule::c_cuberoot(0.75), 1000) == Catch::Approx(7.5));
    CHECK(resolve_bandwidth(BandwidthRule::fixed(12.5), 50) == 12.5);
    CHECK_THROWS_AS(resolve_bandwidth(BandwidthRule::fixed(0.0), 50), InvalidArgument);
    CHECK_THROWS_AS(resolve_bandwidth(BandwidthRule::sqrt_T(), 1), InvalidArgument);
}

TEST_CASE("synthetic zero ACF yields the identity exactly", "[bartlett]") {
    AcfEstimate acf;
    acf.T = 100;
    acf.H = 99;
    acf.mean = 0.0;
    acf.gamma.assign(100, 0.0);
    acf.gamma[0] = 1.0;
    acf.rho.assign(100, 0.0);
    acf.rho[0] = 1.0;
    const KernelBandwidth kb{KernelKind::bartlett_triangular, BandwidthRule::sqrt_T()};
    const CovMatrix b = melard_roy_estimate(acf, 5, kb);
    CHECK((b.entries - Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kernel estimate on iid noise approaches the identity", "[bartlett]") {
    RngStream rng = RngStream::substream(555, 0);
    const TimeSeriesData y = simulate_ar(Dgp::ar1(0.0), 5000, 200, rng);
    const KernelBandwidth kb{KernelKind::bartlett_triangular, BandwidthRule::sqrt_T()};
    const CovMatrix b = melard_roy_estimate(y, 5, kb);
    CHECK((b.entries - Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff() < 0.1);
}

TEST_CASE("kernel estimate on persistent AR(1) matches the reference diagonal", "[bartlett]") {
    RngStream rng = RngStream::substream(556, 0);
    const TimeSeriesData y = simulate_ar(Dgp::ar1(0.75), 10000, 200, rng);
    const KernelBandwidth kb{KernelKind::bartlett_triangular, BandwidthRule::sqrt_T()};
    const CovMatrix b = melard_roy_estimate(y, 2, kb);
    CHECK(std::fabs(b.entries(0, 0) - 0.438) < 0.15);
    CHECK(std::fabs(b.entries(1, 1) - 1.176) < 0.15);
}

TEST_CASE("kernel estimate is symmetric and nonnegative definite", "[bartlett]") {
    const KernelBandwidth kb{KernelKind::bartlett_triangular, BandwidthRule::sqrt_T()};
    for (int rep = 0; rep < 25; ++rep) {
        RngStream rng = RngStream::substream(77, static_cast<std::uint64_t>(rep));
        const double phi = -0.8 + 1.6 * rng.next_uniform();
        const TimeSeriesData y = simulate_ar(Dgp::ar1(phi), 300, 200, rng);
        const CovMatrix b = melard_roy_estimate(y, 10, kb);
        CHECK((b.entries - b.entries.transpose()).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(b.min_eigenvalue() >= -1e-8);
    }
}

TEST_CASE("kernel estimate converges as T grows", "[bartlett]") {
    const CovMatrix truth = bartlett_analytic_ar1(0.5, 5);
    const KernelBandwidth kb{KernelKind::bartlett_triangular, BandwidthRule::sqrt_T()};
    std::vector<double> avg_err;
    for (int T : {500, 5000, 50000}) {
        double total = 0.0;
        const int reps = 20;
        for (int rep = 0; rep < reps; ++rep) {
            RngStream rng = RngStream::substream(9000 + T, static_cast<std::uint64_t>(rep));
            const TimeSeriesData y = simulate_ar(Dgp::ar1(0.5), T, 200, rng);
            const CovMatrix b = melard_roy_estimate(y, 5, kb);
            total += (b.entries - truth.entries).cwiseAbs().maxCoeff();
        }
        avg_err.push_back(total / reps);
    }
    CHECK(avg_err[1] < avg_err[0]);
    CHECK(avg_err[2] < avg_err[1]);
}

TEST_CASE("estimator guards its preconditions", "[bartlett]") {
    const KernelBandwidth kb{KernelKind::bartlett_triangular, BandwidthRule::sqrt_T()};
    const TimeSeriesData tiny{{1.0, 2.0, 1.5}};
    CHECK_THROWS_AS(melard_roy_estimate(tiny, 1, kb), InsufficientData);

    AcfEstimate starved;
    starved.T = 400;
    starved.H = 3; // kernel reaches lag 20
    starved.gamma.assign(4, 0.5);
    starved.rho.assign(4, 0.1);
    starved.rho[0] = 1.0;
    CHECK_THROWS_AS(melard_roy_estimate(starved, 2, kb), InvalidLag);
}

TEST_CASE("tail truncation failure is reported", "[bartlett]") {
    // rho with no usable geometric decay: hovers just below 1 forever.
    auto stubborn = [](int k) { return (k == 0) ? 1.0 : 0.999999 * ((k % 2 == 0) ? 1.0 : -1.0); };
    CHECK_THROWS_AS(bartlett_analytic(stubborn, 2, 1e-12), TruncationFailure);
}
