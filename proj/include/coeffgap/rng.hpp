#pragma once

#include <cstdint>
#include <vector>

namespace coeffgap {

/// splitmix64 finalizer: the standard 64-bit avalanche mix.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based generator: draw k of stream s under seed is a pure function
/// of (seed, s, k), so restarts are reproducible and shard-order independent.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(splitmix64(splitmix64(seed) ^ (0x9e3779b97f4a7c15ULL * (stream + 1)))) {}

    std::uint64_t bits(std::uint64_t counter) const {
        return splitmix64(key_ + counter * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t key_;
};

/// Stateful view over a CounterRng stream for sequential sampling.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream) : rng_(seed, stream) {}

    double uniform01() { return rng_.uniform01(counter_++); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in {lo, ..., hi}.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform01() * static_cast<double>(hi - lo + 1));
    }

    /// Uniform sample from the k-simplex via normalized exponentials.
    std::vector<double> simplex(int k);

private:
    CounterRng rng_;
    std::uint64_t counter_ = 0;
};

}  // namespace coeffgap
