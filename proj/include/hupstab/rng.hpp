#pragma once

#include <cmath>
#include <cstdint>

namespace hupstab {

// Counter-based generator: every draw is a pure function of (seed, stream,
// index), so results are bit-for-bit reproducible and independent of how
// sampling is sharded across workers.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    // uniform in (0, 1), indexed draw
    double uniform(std::uint64_t index) const {
        std::uint64_t z = mix(seed_ ^ (0x9e3779b97f4a7c15ULL * (stream_ + 1)), index);
        return ((z >> 11) + 0.5) * 0x1.0p-53;
    }

    // standard normal via Box-Muller on two decorrelated uniforms
    double normal(std::uint64_t index) const {
        double u1 = uniform(2 * index);
        double u2 = uniform(2 * index + 1);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

private:
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        // splitmix64 finalizer over a combined key
        std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
};

// Sequential convenience wrapper for corpus generation.
class SeqRng {
public:
    explicit SeqRng(std::uint64_t seed, std::uint64_t stream = 0) : rng_(seed, stream) {}
    double uniform() { return rng_.uniform(next_++); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }
    int uniform_int(int lo, int hi) {  // inclusive bounds
        int n = hi - lo + 1;
        int v = lo + static_cast<int>(uniform() * n);
        return v > hi ? hi : v;
    }
private:
    CounterRng rng_;
    std::uint64_t next_ = 0;
};

} // namespace hupstab
