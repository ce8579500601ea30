#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mclimb/rng.hpp"

namespace mclimb {

using BitIndex = std::uint32_t;

// Fixed-length bit string with a cached one-count. Bits are indexed 0..n-1 and
// bit 0 is the leftmost character of the textual form ("0101" has bits 1 and 3
// set). Index i here corresponds to coordinate i+1 of the usual 1-based [n].
class SearchPoint {
public:
    explicit SearchPoint(std::size_t n);  // all zeros, n >= 1

    static SearchPoint zeros(std::size_t n) { return SearchPoint(n); }
    static SearchPoint ones(std::size_t n);
    static SearchPoint from_string(std::string_view bits);
    static SearchPoint uniform(std::size_t n, Rng& rng);

    std::size_t size() const noexcept { return n_; }
    std::size_t ones_count() const noexcept { return ones_; }
    std::size_t zeros_count() const noexcept { return n_ - ones_; }
    bool all_ones() const noexcept { return ones_ == n_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool value);

    std::vector<BitIndex> one_indices() const;
    std::vector<BitIndex> zero_indices() const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::string to_string() const;

    friend bool operator==(const SearchPoint&, const SearchPoint&) = default;

private:
    std::size_t n_;
    std::size_t ones_ = 0;
    std::vector<std::uint64_t> words_;
};

// The change between a parent and its offspring: indices raised 0->1 (up) and
// lowered 1->0 (down), each sorted ascending.
struct FlipSet {
    std::vector<BitIndex> up;
    std::vector<BitIndex> down;

    std::size_t up_count() const noexcept { return up.size(); }
    std::size_t down_count() const noexcept { return down.size(); }
    bool empty() const noexcept { return up.empty() && down.empty(); }

    // Sorted, disjoint, in range, and consistent with the bits of x.
    bool valid_for(const SearchPoint& x) const;

    friend bool operator==(const FlipSet&, const FlipSet&) = default;
};

// Splits a sorted list of flipped positions into up/down relative to x.
FlipSet split_flips(const SearchPoint& x, std::span<const BitIndex> flipped);

// Throws std::logic_error if fs is not valid for x.
SearchPoint apply(const SearchPoint& x, const FlipSet& fs);

// The flips turning `from` into `to`.
FlipSet difference(const SearchPoint& from, const SearchPoint& to);

}  // namespace mclimb
