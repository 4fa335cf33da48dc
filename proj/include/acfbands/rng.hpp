#ifndef ACFBANDS_RNG_HPP
#define ACFBANDS_RNG_HPP

#include <cstdint>

#include "acfbands/special_functions.hpp"

namespace acfbands {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace detail

/// Deterministic counter-splittable RNG (xoshiro256++ seeded through
/// splitmix64). std:: distributions are avoided on purpose: normal draws go
/// through the library's own inverse CDF so that streams are identical
/// across standard libraries and platforms.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : state_) w = detail::splitmix64(sm);
    }

    /// Independent substream for (seed, index), e.g. one per Monte-Carlo
    /// replication. Substreams are a pure function of their arguments, so
    /// results do not depend on scheduling.
    static RngStream substream(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t sm = seed ^ (0x9e3779b97f4a7c15ULL + index * 0xd1342543de82ef95ULL);
        RngStream r(detail::splitmix64(sm));
        return r;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl64(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl64(state_[3], 45);
        return result;
    }

    /// Uniform double in the open interval (0, 1).
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via inverse-CDF transform.
    double next_normal() {
        return norm_quantile(next_uniform());
    }

private:
    std::uint64_t state_[4]{};
};

} // namespace acfbands

#endif
