#pragma once

#include <cmath>
#include <cstdint>

namespace uavc {

// splitmix64, used to expand seeds and derive independent streams.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// PCG32. Deterministic across platforms, cheap enough to initialize
// tens of millions of weights without dominating model construction.
class Rng {
public:
    explicit Rng(uint64_t seed = 0, uint64_t stream = 0) {
        uint64_t sm = seed;
        state_ = splitmix64(sm);
        inc_ = (splitmix64(sm) ^ stream) << 1 | 1u;
        next_u32();
    }

    // Independent stream for worker i derived from a root seed.
    static Rng derive(uint64_t root_seed, uint64_t index) {
        uint64_t sm = root_seed ^ (0x632be59bd9b4e019ULL * (index + 1));
        uint64_t a = splitmix64(sm);
        uint64_t b = splitmix64(sm);
        return Rng(a, b);
    }

    uint32_t next_u32() {
        uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
        uint32_t rot = static_cast<uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    uint64_t next_u64() {
        return (static_cast<uint64_t>(next_u32()) << 32) | next_u32();
    }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next_u32()) * (1.0 / 4294967296.0);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Integer in [0, n).
    uint32_t below(uint32_t n) {
        return static_cast<uint32_t>(static_cast<uint64_t>(next_u32()) * n >> 32);
    }

    // Standard normal via Box-Muller; one value per call, no cached spare,
    // so a stream stays reproducible regardless of call interleaving.
    double normal() {
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 <= 1e-12);
        u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Normal clipped to +/- 2 sigma by rejection.
    double truncated_normal(double stddev) {
        double v;
        do {
            v = normal();
        } while (std::fabs(v) > 2.0);
        return v * stddev;
    }

private:
    uint64_t state_ = 0;
    uint64_t inc_ = 1;
};

} // namespace uavc
