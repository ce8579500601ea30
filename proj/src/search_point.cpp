#include "mclimb/search_point.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mclimb {

Rng::Rng(RngSeed seed) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed.seed), static_cast<std::uint32_t>(seed.seed >> 32),
        static_cast<std::uint32_t>(seed.stream), static_cast<std::uint32_t>(seed.stream >> 32)};
    engine_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

SearchPoint::SearchPoint(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {
    if (n == 0) throw std::invalid_argument("SearchPoint: length must be at least 1");
}

SearchPoint SearchPoint::ones(std::size_t n) {
    SearchPoint x(n);
    for (auto& w : x.words_) w = ~std::uint64_t{0};
    if (n % 64) x.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
    x.ones_ = n;
    return x;
}

SearchPoint SearchPoint::from_string(std::string_view bits) {
    SearchPoint x(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            x.set(i, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("SearchPoint: expected only '0' and '1'");
    }
    return x;
}

SearchPoint SearchPoint::uniform(std::size_t n, Rng& rng) {
    SearchPoint x(n);
    std::size_t count = 0;
    for (auto& w : x.words_) w = rng.next();
    if (n % 64) x.words_.back() &= (std::uint64_t{1} << (n % 64)) - 1;
    for (auto w : x.words_) count += static_cast<std::size_t>(std::popcount(w));
    x.ones_ = count;
    return x;
}

void SearchPoint::set(std::size_t i, bool value) {
    if (i >= n_) throw std::out_of_range("SearchPoint::set: index out of range");
    std::uint64_t& w = words_[i >> 6];
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    const bool current = w & mask;
    if (current == value) return;
    if (value) {
        w |= mask;
        ++ones_;
    } else {
        w &= ~mask;
        --ones_;
    }
}

std::vector<BitIndex> SearchPoint::one_indices() const {
    std::vector<BitIndex> out;
    out.reserve(ones_);
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            out.push_back(static_cast<BitIndex>(wi * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::vector<BitIndex> SearchPoint::zero_indices() const {
    std::vector<BitIndex> out;
    out.reserve(n_ - ones_);
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = ~words_[wi];
        if (wi + 1 == words_.size() && n_ % 64) w &= (std::uint64_t{1} << (n_ % 64)) - 1;
        while (w) {
            out.push_back(static_cast<BitIndex>(wi * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::string SearchPoint::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (test(i)) s[i] = '1';
    return s;
}

bool FlipSet::valid_for(const SearchPoint& x) const {
    auto sorted_unique = [](const std::vector<BitIndex>& v) {
        return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
    };
    if (!sorted_unique(up) || !sorted_unique(down)) return false;
    for (BitIndex i : up)
        if (i >= x.size() || x.test(i)) return false;
    for (BitIndex i : down)
        if (i >= x.size() || !x.test(i)) return false;
    return true;
}

FlipSet split_flips(const SearchPoint& x, std::span<const BitIndex> flipped) {
    FlipSet fs;
    for (BitIndex i : flipped) (x.test(i) ? fs.down : fs.up).push_back(i);
    return fs;
}

SearchPoint apply(const SearchPoint& x, const FlipSet& fs) {
    if (!fs.valid_for(x)) throw std::logic_error("apply: flip set is not valid for this point");
    SearchPoint y = x;
    for (BitIndex i : fs.up) y.set(i, true);
    for (BitIndex i : fs.down) y.set(i, false);
    return y;
}

FlipSet difference(const SearchPoint& from, const SearchPoint& to) {
    if (from.size() != to.size()) throw std::invalid_argument("difference: length mismatch");
    FlipSet fs;
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (from.test(i) == to.test(i)) continue;
        (to.test(i) ? fs.up : fs.down).push_back(static_cast<BitIndex>(i));
    }
    return fs;
}

}  // namespace mclimb
