#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mclimb/rng.hpp"
#include "mclimb/search_point.hpp"

namespace mclimb {

// Standard bit mutation: every bit flips independently with probability c/n.
//
// Both paths are integer-exact given the generator: the naive path compares one
// 64-bit draw per bit against floor(p * 2^64); the skip path draws the gap to
// the next flipped bit by inverting a table of floor((1-p)^g * 2^64) built
// with plain IEEE multiplication, so no libm call influences the outcome.
class MutationSampler {
public:
    // Requires 0 < c <= n. c == n flips every bit.
    MutationSampler(std::size_t n, double c);

    std::size_t size() const noexcept { return n_; }
    double rate() const noexcept { return c_; }

    FlipSet sample_naive(const SearchPoint& x, Rng& rng) const;
    FlipSet sample_skip(const SearchPoint& x, Rng& rng) const;

private:
    std::size_t skipped_bits(std::uint64_t draw, std::size_t limit) const;

    std::size_t n_;
    double c_;
    bool certain_ = false;           // p == 1
    std::uint64_t flip_threshold_ = 0;
    // survive_[g-1] = floor((1-p)^g * 2^64) for g = 1..n; non-increasing.
    std::vector<std::uint64_t> survive_;
};

enum class MutationPath { Naive, Skip };

}  // namespace mclimb
