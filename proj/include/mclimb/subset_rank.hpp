#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mclimb/rational.hpp"
#include "mclimb/search_point.hpp"

namespace mclimb {

// An r-subset of [0, m) identified by its colexicographic rank
// sum_j C(s_j, j + 1) over the ascending elements s_0 < s_1 < ...
struct SubsetRank {
    std::uint64_t universe = 0;
    std::uint64_t size = 0;
    BigInt rank;
};

// Throws std::logic_error unless `sorted` is strictly increasing within [0, m).
SubsetRank subset_rank(std::span<const BitIndex> sorted, std::uint64_t m);

// Inverse of subset_rank; throws std::out_of_range when rank >= C(m, r).
std::vector<BitIndex> subset_unrank(const BigInt& rank, std::uint64_t m, std::uint64_t r);

}  // namespace mclimb
