#include "mclimb/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace mclimb {

double log2_binom(std::uint64_t m, std::uint64_t r) {
    if (r > m) throw std::logic_error("log2_binom: r exceeds m");
    if (r == 0 || r == m) return 0.0;
    return static_cast<double>(log2(binomial(m, r)));
}

namespace {

// log2 of the forward choice count for one update.
double forward_bits(std::size_t n, const UpdateRecord& r) {
    const std::size_t zeros_before = n - r.ones_before;
    return log2_binom(zeros_before, r.up()) + log2_binom(r.ones_before + r.up(), r.down());
}

// log2 of the backward choice count for one update.
double backward_bits(std::size_t n, const UpdateRecord& r) {
    const std::size_t zeros_after = n - r.ones_after;
    return log2_binom(zeros_after, r.down()) + log2_binom(r.ones_after + r.down(), r.up());
}

}  // namespace

double entropy_lower_bound(const Trajectory& traj) {
    double bits = 0;
    for (const auto& r : traj.records) bits += forward_bits(traj.n(), r);
    return bits;
}

TelescopingResult telescoping_check(const Trajectory& traj) {
    if (!traj.reached_optimum) throw std::logic_error("telescoping_check: trajectory did not reach the optimum");
    TelescopingResult result;
    for (const auto& r : traj.records) result.lhs += backward_bits(traj.n(), r) - forward_bits(traj.n(), r);
    result.rhs = log2_binom(traj.n(), traj.start.ones_count());
    result.ok = std::fabs(result.lhs - result.rhs) <= kTelescopingTolerance;
    return result;
}

}  // namespace mclimb
