#pragma once

#include <cstdint>
#include <random>

namespace mclimb {

struct RngSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

// Reproducible generator: std::mt19937_64 seeded through std::seed_seq with the
// four 32-bit halves of (seed, stream). Both algorithms are fixed by the C++
// standard, so the sequence is identical on every conforming platform. All
// derived draws below use integer arithmetic only.
//
// Single owner: never share one Rng between threads.
class Rng {
public:
    explicit Rng(RngSeed seed);

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound);

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace mclimb
