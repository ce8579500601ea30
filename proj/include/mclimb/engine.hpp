#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mclimb/classifier.hpp"
#include "mclimb/fitness.hpp"
#include "mclimb/mutation.hpp"
#include "mclimb/rng.hpp"

namespace mclimb {

enum class StartMode { Uniform, Zeros, Ones, Explicit };

struct RunConfig {
    std::size_t n = 0;
    double c = 1.0;
    FunctionPtr function;
    RngSeed seed;
    StartMode start = StartMode::Uniform;
    std::optional<SearchPoint> start_point;  // StartMode::Explicit
    std::uint64_t max_steps = 0;             // 0 selects default_max_steps(n)
    Rational alpha{1, 4};
    bool classify = true;
    MutationPath sampler = MutationPath::Skip;

    // 10^4 * n * log2(n + 1), rounded up.
    static std::uint64_t default_max_steps(std::size_t n);

    // Throws std::invalid_argument on a violated invariant.
    void validate() const;
    std::uint64_t step_cap() const { return max_steps ? max_steps : default_max_steps(n); }
};

// One accepted move Y_t -> Y_{t+1} with Y_{t+1} != Y_t.
struct UpdateRecord {
    std::size_t index = 0;
    FlipSet flips;
    std::size_t ones_before = 0;
    std::size_t ones_after = 0;
    UpdateLabel label = UpdateLabel::Unclassified;
    std::uint64_t steps_waited = 0;  // rounds since the previous update, this one included

    std::size_t up() const noexcept { return flips.up_count(); }
    std::size_t down() const noexcept { return flips.down_count(); }
};

// The update chain: the step chain with self-transitions removed.
struct Trajectory {
    SearchPoint start{1};
    std::vector<UpdateRecord> records;
    bool reached_optimum = false;
    std::uint64_t total_steps = 0;

    std::size_t n() const noexcept { return start.size(); }
    std::size_t updates() const noexcept { return records.size(); }
    std::size_t bad_updates() const;
    bool classified() const;

    // Y_0, Y_1, ..., Y_T.
    std::vector<SearchPoint> states() const;
    SearchPoint final_state() const;
};

// Runs the (1+1)-EA until the all-ones string or the step cap; ties accepted.
Trajectory run(const RunConfig& config);

// Exact structural checks: flips valid along the chain, U >= 1, one-count
// bookkeeping, and the optimum flag.
bool is_consistent(const Trajectory& traj);

// Same start and update chain (flips, labels, order). Step counts are ignored.
bool same_update_chain(const Trajectory& a, const Trajectory& b);

// Line-oriented canonical text, platform independent; basis of the digest.
std::string canonical_text(const Trajectory& traj);
std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t trajectory_digest(const Trajectory& traj);

// Phase k spans the updates from the first state with at most 2^k - 1 zeros
// up to the first state with at most 2^(k-1) - 1 zeros, for
// k = floor(log2 n) - 1 down to 1. Phases with no updates are omitted.
struct Phase {
    unsigned k = 0;
    std::size_t first_update = 0;
    std::size_t updates = 0;
    std::uint64_t steps = 0;
};

struct PhaseStats {
    std::vector<Phase> phases;       // descending k
    unsigned top_phase = 0;          // floor(log2 n) - 1
    std::size_t prefix_updates = 0;  // before first entering the top phase
    std::uint64_t prefix_steps = 0;
    bool complete = true;            // false for trajectories that did not finish
};

PhaseStats phase_stats(const Trajectory& traj);

// "k:updates:steps" joined by ';', empty when there are no phases.
std::string phase_summary(const PhaseStats& stats);

struct DriftStats {
    std::size_t updates = 0;
    std::size_t bad_updates = 0;
    double mean_gain_good = 0;  // E[U - D | good]
    double se_gain_good = 0;
    double mean_gain_bad = 0;   // E[U - D | bad]
    double se_gain_bad = 0;
    double mean_flips = 0;      // E[U + D] over all updates
    double se_flips = 0;
    bool empty = true;          // no classified updates
};

DriftStats drift_stats(const std::vector<Trajectory>& trajs);

}  // namespace mclimb
