#pragma once

#include <cstdint>

#include "mclimb/engine.hpp"

namespace mclimb {

// log2 C(m, r) from the exact binomial. Throws std::logic_error when r > m.
double log2_binom(std::uint64_t m, std::uint64_t r);

// Sum over updates of log2( C(#0_t, U_t) * C(#1_t + U_t, D_t) ).
double entropy_lower_bound(const Trajectory& traj);

// Forward-minus-backward choice counts, collapsing to log2 C(n, #1_0).
struct TelescopingResult {
    double lhs = 0;
    double rhs = 0;
    bool ok = false;
};

inline constexpr double kTelescopingTolerance = 1e-6;

// Requires a trajectory that reached the optimum (std::logic_error otherwise).
TelescopingResult telescoping_check(const Trajectory& traj);

}  // namespace mclimb
