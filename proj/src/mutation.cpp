#include "mclimb/mutation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mclimb {

namespace {

std::uint64_t scaled_probability(double p) {
    if (p >= 1.0) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(std::ldexp(p, 64));
}

}  // namespace

MutationSampler::MutationSampler(std::size_t n, double c) : n_(n), c_(c) {
    if (n == 0) throw std::invalid_argument("MutationSampler: n must be positive");
    if (!(c > 0.0) || !(c <= static_cast<double>(n)))
        throw std::invalid_argument("MutationSampler: mutation parameter must satisfy 0 < c <= n");
    const double p = c / static_cast<double>(n);
    certain_ = p >= 1.0;
    flip_threshold_ = scaled_probability(p);

    const double q = 1.0 - p;
    survive_.resize(n);
    double qg = 1.0;
    for (std::size_t g = 0; g < n; ++g) {
        qg *= q;
        survive_[g] = certain_ ? 0 : scaled_probability(qg);
    }
}

FlipSet MutationSampler::sample_naive(const SearchPoint& x, Rng& rng) const {
    FlipSet fs;
    for (std::size_t i = 0; i < n_; ++i) {
        const std::uint64_t r = rng.next();
        if (certain_ || r < flip_threshold_) (x.test(i) ? fs.down : fs.up).push_back(static_cast<BitIndex>(i));
    }
    return fs;
}

// Largest g in [0, limit] with draw < floor((1-p)^g * 2^64), where g = 0 always
// qualifies. P(result >= g) = (1-p)^g up to rounding of the table.
std::size_t MutationSampler::skipped_bits(std::uint64_t draw, std::size_t limit) const {
    std::size_t lo = 0;
    std::size_t hi = limit;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        if (draw < survive_[mid - 1])
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

FlipSet MutationSampler::sample_skip(const SearchPoint& x, Rng& rng) const {
    FlipSet fs;
    std::size_t pos = 0;
    while (pos < n_) {
        const std::size_t remaining = n_ - pos;
        const std::size_t gap = skipped_bits(rng.next(), remaining);
        if (gap >= remaining) break;
        pos += gap;
        (x.test(pos) ? fs.down : fs.up).push_back(static_cast<BitIndex>(pos));
        ++pos;
    }
    return fs;
}

}  // namespace mclimb
