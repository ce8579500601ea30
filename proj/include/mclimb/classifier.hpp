#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mclimb/fitness.hpp"

namespace mclimb {

enum class UpdateLabel { Good, Bad, Unclassified };

const char* to_string(UpdateLabel label);

// val_z(j) = f(z) - f(z - e_j) for every one-bit j of z.
struct ValueTable {
    std::vector<std::pair<BitIndex, FitnessValue>> entries;  // ascending index
};

// Throws std::logic_error when z^j = 0.
FitnessValue value(const MonotoneFunction& f, const SearchPoint& z, std::size_t j);

ValueTable value_table(const MonotoneFunction& f, const SearchPoint& z);

// ceil((1 - alpha) * n): how many one-bits must be strictly cheaper than the
// raised bit for an update to count as bad. Requires 0 <= alpha <= 1.
std::size_t bad_threshold(std::size_t n, const Rational& alpha);

// Bad iff exactly one bit i is raised and at least bad_threshold(n, alpha)
// one-bits of y + e_i have value strictly below val_{y+e_i}(i). Throws
// std::logic_error unless fs is a non-empty accepted move from y.
UpdateLabel classify_update(const SearchPoint& y, const FlipSet& fs, const MonotoneFunction& f,
                            const Rational& alpha);

// One-bits j of z with at least bad_threshold(n, alpha) one-bits strictly
// cheaper than j, ascending. A bad update raising i always has i in
// candidate_set(y + e_i).
std::vector<BitIndex> candidate_set(const SearchPoint& z, const MonotoneFunction& f, const Rational& alpha);

}  // namespace mclimb
