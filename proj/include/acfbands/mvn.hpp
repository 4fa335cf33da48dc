#ifndef ACFBANDS_MVN_HPP
#define ACFBANDS_MVN_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "acfbands/bartlett.hpp"
#include "acfbands/errors.hpp"
#include "acfbands/rng.hpp"
#include "acfbands/sobol_directions.hpp"
#include "acfbands/special_functions.hpp"

namespace acfbands {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;
inline constexpr double kDefaultProbTol = 1e-4;

/// Request for the equicoordinate quantile q with
/// P(max_h |V_h|/sqrt(sigma_hh) <= q) = tau, V ~ N(0, Sigma).
struct QuantileRequest {
    CovMatrix sigma;
    double tau = 0.9;
    double prob_tol = kDefaultProbTol;
    std::uint64_t seed = kDefaultSeed;
};

/// Correlation matrix R = D^{-1/2} Sigma D^{-1/2}. The equicoordinate
/// quantile depends on Sigma only through R.
inline CovMatrix standardize(const CovMatrix& sigma) {
    const int H = sigma.H();
    for (int i = 0; i < H; ++i) {
        if (!(sigma.entries(i, i) > 0.0)) {
            throw ZeroVariance("standardize: nonpositive variance at coordinate " +
                               std::to_string(i + 1));
        }
    }
    Eigen::VectorXd dinv = sigma.entries.diagonal().array().sqrt().inverse();
    Eigen::MatrixXd r = dinv.asDiagonal() * sigma.entries * dinv.asDiagonal();
    for (int i = 0; i < H; ++i) r(i, i) = 1.0;
    return CovMatrix(std::move(r), sigma.label);
}

namespace detail {

inline void validate_prob_tol(double prob_tol) {
    if (!(prob_tol >= 1e-6 && prob_tol <= 1e-2)) {
        throw InvalidArgument("prob_tol must lie in [1e-6, 1e-2]");
    }
}

/// Pivoted Cholesky with the largest remaining conditional variance first.
/// For a centered symmetric rectangle the truncated-normal means vanish at
/// every step, so this pivot order coincides with the Genz-Bretz variable
/// reordering and sharply reduces the variance of the transformed integrand.
/// The rectangle probability itself is permutation invariant.
inline std::optional<Eigen::MatrixXd> pivoted_cholesky(Eigen::MatrixXd a) {
    const int n = static_cast<int>(a.rows());
    Eigen::MatrixXd chol = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        int k = i;
        for (int j = i + 1; j < n; ++j) {
            if (a(j, j) > a(k, k)) k = j;
        }
        if (k != i) {
            a.row(i).swap(a.row(k));
            a.col(i).swap(a.col(k));
            for (int j = 0; j < i; ++j) std::swap(chol(i, j), chol(k, j));
        }
        const double d = a(i, i);
        if (!(d > 1e-13)) return std::nullopt;
        const double li = std::sqrt(d);
        chol(i, i) = li;
        for (int r = i + 1; r < n; ++r) {
            const double v =
                (a(r, i) - chol.row(r).head(i).dot(chol.row(i).head(i))) / li;
            chol(r, i) = v;
            a(r, r) -= v * v; // running residual variance, also the next pivot key
        }
    }
    return chol;
}

/// Factor of R for the Genz transform, adding a ridge eps*I escalating from
/// 1e-10 to 1e-6 when the matrix is numerically singular (shrunk or
/// kernel-estimated inputs can be).
inline Eigen::MatrixXd cholesky_with_ridge(const Eigen::MatrixXd& r) {
    if (auto chol = pivoted_cholesky(r)) return *chol;
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(r.rows(), r.cols());
    for (double eps = 1e-10; eps <= 1.0000001e-6; eps *= 10.0) {
        if (auto chol = pivoted_cholesky(r + eps * eye)) return *chol;
    }
    throw NumericalBreakdown("central_rect_prob: correlation matrix not factorizable "
                             "even after ridge regularization");
}

inline std::vector<double> kronecker_generators(int dim) {
    std::vector<int> primes{2, 3};
    std::vector<double> gens{std::sqrt(2.0) - 1.0, std::sqrt(3.0) - 1.0};
    while (static_cast<int>(gens.size()) < dim) {
        int cand = primes.back() + 2;
        for (;;) {
            bool is_prime = true;
            for (int p : primes) {
                if (static_cast<long>(p) * p > cand) break;
                if (cand % p == 0) { is_prime = false; break; }
            }
            if (is_prime) break;
            cand += 2;
        }
        primes.push_back(cand);
        double g = std::sqrt(static_cast<double>(cand));
        gens.push_back(g - std::floor(g));
    }
    gens.resize(static_cast<std::size_t>(dim));
    return gens;
}

/// One randomization of the low-discrepancy point set: a Sobol sequence
/// under Matousek linear matrix scrambling plus a random digital shift,
/// falling back to a shifted Kronecker sequence beyond the dimension of the
/// direction-number table. Points are generated incrementally in index
/// order (gray-code recursion), so extending the sample reuses all
/// previous work.
class QmcStream {
public:
    QmcStream(int dim, std::uint64_t seed, std::uint64_t randomization)
        : dim_(dim), sobol_(dim <= kSobolDims) {
        RngStream rng = RngStream::substream(seed, randomization);
        if (sobol_) {
            state_.assign(static_cast<std::size_t>(dim), 0);
            mask_.resize(static_cast<std::size_t>(dim));
            scrambled_v_.assign(static_cast<std::size_t>(dim) * 64, 0);
            std::uint64_t cols[64];
            for (int j = 0; j < dim; ++j) {
                // random invertible lower-triangular bit matrix, MSB-first:
                // column c keeps its diagonal bit and randomizes the bits
                // below it
                for (int c = 0; c < 64; ++c) {
                    const std::uint64_t diag = 0x8000000000000000ULL >> c;
                    const std::uint64_t below = (c == 63) ? 0 : (diag - 1);
                    cols[c] = diag | (rng.next_u64() & below);
                }
                for (int k = 0; k < 64; ++k) {
                    std::uint64_t v = kSobolV[j][k];
                    std::uint64_t u = 0;
                    while (v != 0) {
                        const int c = std::countl_zero(v);
                        u ^= cols[c];
                        v ^= 0x8000000000000000ULL >> c;
                    }
                    scrambled_v_[static_cast<std::size_t>(j) * 64 + static_cast<std::size_t>(k)] = u;
                }
                mask_[static_cast<std::size_t>(j)] = rng.next_u64();
            }
        } else {
            gens_ = kronecker_generators(dim);
            shift_.resize(static_cast<std::size_t>(dim));
            for (auto& s : shift_) s = rng.next_uniform();
        }
    }

    /// Fills w with point number k; k must advance by exactly 1 per call.
    void next(long k, double* w) {
        if (sobol_) {
            const int c = std::countr_zero(static_cast<std::uint64_t>(k));
            for (int j = 0; j < dim_; ++j) {
                auto& s = state_[static_cast<std::size_t>(j)];
                s ^= scrambled_v_[static_cast<std::size_t>(j) * 64 + static_cast<std::size_t>(c)];
                w[j] = static_cast<double>(s ^ mask_[static_cast<std::size_t>(j)]) * 0x1.0p-64;
            }
        } else {
            for (int j = 0; j < dim_; ++j) {
                double x = static_cast<double>(k) * gens_[static_cast<std::size_t>(j)] +
                           shift_[static_cast<std::size_t>(j)];
                x -= std::floor(x);
                w[j] = std::fabs(2.0 * x - 1.0);
            }
        }
    }

private:
    int dim_;
    bool sobol_;
    std::vector<std::uint64_t> state_;
    std::vector<std::uint64_t> mask_;
    std::vector<std::uint64_t> scrambled_v_; // dim x 64, row-major
    std::vector<double> gens_;
    std::vector<double> shift_;
};

/// Genz separation-of-variables integrand for P(-q <= V <= q), V ~ N(0, LL'),
/// evaluated at one point w in [0,1)^(H-1).
inline double genz_integrand(const Eigen::MatrixXd& chol, double q, const double* w,
                             double* y) {
    const int H = static_cast<int>(chol.rows());
    double d = norm_cdf(-q / chol(0, 0));
    double e = norm_cdf(q / chol(0, 0));
    double f = e - d;
    constexpr double u_lo = 1e-300;
    constexpr double u_hi = 1.0 - 1.1102230246251565e-16; // largest double < 1
    for (int i = 1; i < H; ++i) {
        if (f <= 0.0) return 0.0;
        const double u = std::clamp(d + w[i - 1] * (e - d), u_lo, u_hi);
        y[i - 1] = norm_quantile(u);
        double s = 0.0;
        for (int j = 0; j < i; ++j) s += chol(i, j) * y[j];
        e = norm_cdf((q - s) / chol(i, i));
        d = norm_cdf((-q - s) / chol(i, i));
        f *= std::max(0.0, e - d);
    }
    return f;
}

} // namespace detail

/// Estimate of P(|V_1| <= q, ..., |V_H| <= q) for V ~ N(0, R) with estimated
/// absolute error <= prob_tol; deterministic for a fixed seed.
///
/// Randomized QMC over the Genz transform: Sobol points under 12 random
/// digital shifts drawn from per-randomization substreams of the seed. The
/// error estimate is 3x the standard error across randomizations, and the
/// point count doubles until it meets prob_tol.
inline double central_rect_prob(const Eigen::MatrixXd& r, double q, double prob_tol = kDefaultProbTol,
                                std::uint64_t seed = kDefaultSeed) {
    if (r.rows() != r.cols() || r.rows() < 1) {
        throw InvalidArgument("central_rect_prob: R must be square and nonempty");
    }
    if (!(q > 0.0)) throw InvalidArgument("central_rect_prob: q must be > 0");
    detail::validate_prob_tol(prob_tol);

    const int H = static_cast<int>(r.rows());
    if (H == 1) return norm_cdf(q) - norm_cdf(-q);

    const Eigen::MatrixXd chol = detail::cholesky_with_ridge(r);
    const int m = H - 1;

    constexpr int n_shifts = 12;
    std::vector<detail::QmcStream> streams;
    streams.reserve(n_shifts);
    for (int s = 0; s < n_shifts; ++s) {
        streams.emplace_back(m, seed, static_cast<std::uint64_t>(s));
    }

    std::vector<double> sums(n_shifts, 0.0);
    std::vector<double> w(m), y(m);
    long n_done = 0;
    long n_target = 128;
    constexpr long n_max = 1L << 19;

    for (;;) {
        for (int s = 0; s < n_shifts; ++s) {
            double acc = 0.0;
            auto& stream = streams[static_cast<std::size_t>(s)];
            for (long k = n_done + 1; k <= n_target; ++k) {
                stream.next(k, w.data());
                acc += detail::genz_integrand(chol, q, w.data(), y.data());
            }
            sums[static_cast<std::size_t>(s)] += acc;
        }
        n_done = n_target;

        double mean = 0.0;
        for (double v : sums) mean += v;
        mean /= static_cast<double>(n_shifts) * static_cast<double>(n_done);
        double var = 0.0;
        for (double v : sums) {
            const double dm = v / static_cast<double>(n_done) - mean;
            var += dm * dm;
        }
        var /= (n_shifts - 1);
        const double err = 3.0 * std::sqrt(var / n_shifts);
        if (err <= prob_tol) return std::clamp(mean, 0.0, 1.0);
        if (n_done >= n_max) {
            throw NumericalBreakdown("central_rect_prob: error estimate " + std::to_string(err) +
                                     " did not reach prob_tol within the point budget");
        }
        n_target = n_done * 2;
    }
}

/// Sidak quantile z_{(1 + tau^{1/H})/2}: the equicoordinate quantile under
/// independence, q_tau(I_H).
inline double sidak_quantile(double tau, int H) {
    if (!(tau > 0.0 && tau < 1.0)) throw InvalidArgument("sidak_quantile: tau must lie in (0,1)");
    if (H < 1) throw InvalidArgument("sidak_quantile: H must be >= 1");
    return norm_quantile(0.5 * (1.0 + std::pow(tau, 1.0 / H)));
}

/// Bonferroni quantile z_{1 - alpha/(2H)}; an upper bound for q_{1-alpha} of
/// any correlation structure.
inline double bonferroni_quantile(double alpha, int H) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InvalidArgument("bonferroni_quantile: alpha must lie in (0,1)");
    }
    if (H < 1) throw InvalidArgument("bonferroni_quantile: H must be >= 1");
    return norm_quantile(1.0 - alpha / (2.0 * H));
}

/// Equicoordinate quantile q with |P(M <= q) - tau| <= 2*prob_tol, found by
/// guarded bisection with secant refinement inside the analytic bracket
/// [z_{(1+tau)/2}, z_{1-(1-tau)/(2H)}]: the lower end is the univariate
/// quantile (M >= |V_1|/sqrt(sigma_11)), the upper end the Bonferroni bound.
inline double equicoordinate_quantile(const QuantileRequest& req) {
    if (!(req.tau > 0.0 && req.tau < 1.0)) {
        throw InvalidArgument("equicoordinate_quantile: tau must lie in (0,1)");
    }
    detail::validate_prob_tol(req.prob_tol);
    const CovMatrix corr = standardize(req.sigma);
    const int H = corr.H();

    double lo = norm_quantile(0.5 * (1.0 + req.tau));
    double hi = bonferroni_quantile(1.0 - req.tau, H);
    if (H == 1 || hi - lo <= 1e-12) return lo;

    double q_prev = std::numeric_limits<double>::quiet_NaN();
    double p_prev = 0.0;
    double q = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double p = central_rect_prob(corr.entries, q, req.prob_tol, req.seed);
        if (std::fabs(p - req.tau) <= 2.0 * req.prob_tol) return q;
        if (p < req.tau) lo = q; else hi = q;
        if (hi - lo <= 1e-4) return 0.5 * (lo + hi);

        double next = 0.5 * (lo + hi);
        if (std::isfinite(q_prev) && p != p_prev) {
            const double secant = q + (req.tau - p) * (q_prev - q) / (p_prev - p);
            const double margin = 0.05 * (hi - lo);
            if (secant > lo + margin && secant < hi - margin) next = secant;
        }
        q_prev = q;
        p_prev = p;
        q = next;
    }
    throw NoConvergence("equicoordinate_quantile: root search exceeded iteration cap");
}

} // namespace acfbands

#endif
