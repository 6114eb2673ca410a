#pragma once

#include <cstdint>

namespace eds {

// splitmix64 (Steele/Lea/Flood 2014 finalizer). Used for all instance
// generation so that any implementation seeded identically reproduces the
// same corpora byte for byte; the constants below are the whole contract.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound) via 128-bit multiply-shift.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // Bernoulli with probability p (p in [0,1]).
    bool chance(double p) {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }

private:
    std::uint64_t state_;
};

} // namespace eds
