#include "mclimb/subset_rank.hpp"

#include <stdexcept>

namespace mclimb {

SubsetRank subset_rank(std::span<const BitIndex> sorted, std::uint64_t m) {
    SubsetRank out{m, sorted.size(), 0};
    for (std::size_t j = 0; j < sorted.size(); ++j) {
        if (sorted[j] >= m || (j > 0 && sorted[j] <= sorted[j - 1]))
            throw std::logic_error("subset_rank: indices must be strictly increasing and below the universe size");
        out.rank += binomial(sorted[j], j + 1);
    }
    return out;
}

std::vector<BitIndex> subset_unrank(const BigInt& rank, std::uint64_t m, std::uint64_t r) {
    if (r > m || rank < 0 || rank >= binomial(m, r))
        throw std::out_of_range("subset_unrank: rank outside [0, C(m, r))");
    std::vector<BitIndex> out(r);
    BigInt remaining = rank;
    std::uint64_t bound = m;  // elements chosen so far are >= bound
    for (std::uint64_t j = r; j >= 1; --j) {
        // Largest x in [j-1, bound) with C(x, j) <= remaining; C(j-1, j) = 0.
        std::uint64_t lo = j - 1;
        std::uint64_t hi = bound - 1;
        while (lo < hi) {
            const std::uint64_t mid = lo + (hi - lo + 1) / 2;
            if (binomial(mid, j) <= remaining)
                lo = mid;
            else
                hi = mid - 1;
        }
        out[j - 1] = static_cast<BitIndex>(lo);
        remaining -= binomial(lo, j);
        bound = lo;
    }
    return out;
}

}  // namespace mclimb
