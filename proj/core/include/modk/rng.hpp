#pragma once

#include <cstdint>
#include <vector>

namespace modk {

// 64-bit finalizer from splitmix64. Also used to derive independent
// sub-seeds, e.g. one stream per trial index.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream + 0x9e3779b97f4a7c15ULL));
}

// Deterministic splitmix64 stream keyed by (seed, stream). The same pair
// always yields the same sequence, on every platform, so trial logs are
// reproducible and streams for distinct trials are independent.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t stream)
        : state_(derive_seed(seed, stream)) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound >= 1. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

// One residue vector w in [k]^n, drawn from the (seed, trial) stream.
inline std::vector<int> sample_w(std::uint64_t seed, std::uint64_t trial, int n, int k) {
    TrialRng rng(seed, trial);
    std::vector<int> w(static_cast<std::size_t>(n));
    for (auto& r : w) r = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    return w;
}

} // namespace modk
