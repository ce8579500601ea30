#include "mclimb/engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mclimb {

std::uint64_t RunConfig::default_max_steps(std::size_t n) {
    const long double cap = 1e4L * static_cast<long double>(n) * std::log2(static_cast<long double>(n) + 1);
    return static_cast<std::uint64_t>(std::ceil(cap));
}

void RunConfig::validate() const {
    if (n < 1) throw std::invalid_argument("RunConfig: n must be at least 1");
    if (!(c > 0.0) || !(c < static_cast<double>(n)))
        throw std::invalid_argument("RunConfig: mutation parameter must satisfy 0 < c < n");
    if (!function) throw std::invalid_argument("RunConfig: no fitness function");
    if (function->dimension() != n) throw std::invalid_argument("RunConfig: function dimension differs from n");
    if (alpha <= 0 || alpha > Rational(1, 2)) throw std::invalid_argument("RunConfig: alpha must lie in (0, 1/2]");
    if (start == StartMode::Explicit && (!start_point || start_point->size() != n))
        throw std::invalid_argument("RunConfig: explicit start needs a point of length n");
}

std::size_t Trajectory::bad_updates() const {
    std::size_t count = 0;
    for (const auto& r : records) count += r.label == UpdateLabel::Bad;
    return count;
}

bool Trajectory::classified() const {
    for (const auto& r : records)
        if (r.label == UpdateLabel::Unclassified) return false;
    return true;
}

std::vector<SearchPoint> Trajectory::states() const {
    std::vector<SearchPoint> out;
    out.reserve(records.size() + 1);
    out.push_back(start);
    for (const auto& r : records) out.push_back(apply(out.back(), r.flips));
    return out;
}

SearchPoint Trajectory::final_state() const {
    SearchPoint x = start;
    for (const auto& r : records) x = apply(x, r.flips);
    return x;
}

Trajectory run(const RunConfig& config) {
    config.validate();
    const MonotoneFunction& f = *config.function;
    Rng rng(config.seed);

    Trajectory traj;
    switch (config.start) {
        case StartMode::Uniform: traj.start = SearchPoint::uniform(config.n, rng); break;
        case StartMode::Zeros: traj.start = SearchPoint::zeros(config.n); break;
        case StartMode::Ones: traj.start = SearchPoint::ones(config.n); break;
        case StartMode::Explicit: traj.start = *config.start_point; break;
    }

    const MutationSampler sampler(config.n, config.c);
    const std::uint64_t cap = config.step_cap();
    SearchPoint x = traj.start;
    std::uint64_t waited = 0;
    while (!x.all_ones() && traj.total_steps < cap) {
        FlipSet fs = config.sampler == MutationPath::Skip ? sampler.sample_skip(x, rng) : sampler.sample_naive(x, rng);
        ++traj.total_steps;
        ++waited;
        // Without an upflip the offspring is either the parent or strictly worse.
        if (fs.up.empty()) continue;
        if (f.delta(x, fs) < 0) continue;

        UpdateRecord record;
        record.index = traj.records.size();
        record.ones_before = x.ones_count();
        record.ones_after = x.ones_count() + fs.up_count() - fs.down_count();
        record.steps_waited = waited;
        if (config.classify)
            record.label = fs.up_count() == 1 ? classify_update(x, fs, f, config.alpha) : UpdateLabel::Good;
        x = apply(x, fs);
        record.flips = std::move(fs);
        traj.records.push_back(std::move(record));
        waited = 0;
    }
    traj.reached_optimum = x.all_ones();
    return traj;
}

bool is_consistent(const Trajectory& traj) {
    SearchPoint x = traj.start;
    for (std::size_t t = 0; t < traj.records.size(); ++t) {
        const auto& r = traj.records[t];
        if (r.index != t || r.up() < 1 || !r.flips.valid_for(x)) return false;
        if (r.ones_before != x.ones_count() || r.ones_after != r.ones_before + r.up() - r.down()) return false;
        x = apply(x, r.flips);
    }
    return x.all_ones() == traj.reached_optimum;
}

bool same_update_chain(const Trajectory& a, const Trajectory& b) {
    if (!(a.start == b.start) || a.records.size() != b.records.size() || a.reached_optimum != b.reached_optimum)
        return false;
    for (std::size_t t = 0; t < a.records.size(); ++t) {
        const auto& ra = a.records[t];
        const auto& rb = b.records[t];
        if (!(ra.flips == rb.flips) || ra.label != rb.label || ra.ones_before != rb.ones_before ||
            ra.ones_after != rb.ones_after)
            return false;
    }
    return true;
}

namespace {

void join(std::ostringstream& out, const std::vector<BitIndex>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
}

}  // namespace

std::string canonical_text(const Trajectory& traj) {
    std::ostringstream out;
    out << "n=" << traj.n() << '\n'
        << "start=" << traj.start.to_string() << '\n'
        << "reached=" << (traj.reached_optimum ? 1 : 0) << '\n'
        << "total_steps=" << traj.total_steps << '\n';
    for (const auto& r : traj.records) {
        out << "u " << r.index << " up=";
        join(out, r.flips.up);
        out << " down=";
        join(out, r.flips.down);
        out << " ones=" << r.ones_before << "->" << r.ones_after << " label=" << to_string(r.label)
            << " wait=" << r.steps_waited << '\n';
    }
    return out.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t trajectory_digest(const Trajectory& traj) { return fnv1a64(canonical_text(traj)); }

PhaseStats phase_stats(const Trajectory& traj) {
    PhaseStats stats;
    stats.complete = traj.reached_optimum;
    const std::size_t n = traj.n();
    const int top = static_cast<int>(std::bit_width(n)) - 2;  // floor(log2 n) - 1
    stats.top_phase = top > 0 ? static_cast<unsigned>(top) : 0;
    if (top < 1) return stats;

    const std::size_t T = traj.records.size();
    std::vector<std::size_t> zeros(T + 1);
    zeros[0] = traj.start.zeros_count();
    for (std::size_t t = 0; t < T; ++t) zeros[t + 1] = n - traj.records[t].ones_after;

    // entry[k] = first t with zeros(Y_t) <= 2^k - 1, or T when never reached.
    std::vector<std::size_t> entry(static_cast<std::size_t>(top) + 1, T);
    for (int k = 0; k <= top; ++k) {
        const std::size_t limit = (std::size_t{1} << k) - 1;
        for (std::size_t t = 0; t <= T; ++t) {
            if (zeros[t] <= limit) {
                entry[static_cast<std::size_t>(k)] = t;
                break;
            }
        }
    }
    auto steps_between = [&](std::size_t from, std::size_t to) {
        std::uint64_t s = 0;
        for (std::size_t t = from; t < to; ++t) s += traj.records[t].steps_waited;
        return s;
    };
    stats.prefix_updates = entry[static_cast<std::size_t>(top)];
    stats.prefix_steps = steps_between(0, stats.prefix_updates);
    for (int k = top; k >= 1; --k) {
        const std::size_t from = entry[static_cast<std::size_t>(k)];
        const std::size_t to = entry[static_cast<std::size_t>(k - 1)];
        if (to <= from) continue;
        stats.phases.push_back({static_cast<unsigned>(k), from, to - from, steps_between(from, to)});
    }
    return stats;
}

std::string phase_summary(const PhaseStats& stats) {
    std::ostringstream out;
    for (std::size_t i = 0; i < stats.phases.size(); ++i) {
        const auto& p = stats.phases[i];
        out << (i ? ";" : "") << p.k << ':' << p.updates << ':' << p.steps;
    }
    return out.str();
}

namespace {

struct Moments {
    std::size_t count = 0;
    long double sum = 0;
    long double sum_sq = 0;

    void add(long double x) {
        ++count;
        sum += x;
        sum_sq += x * x;
    }
    double mean() const { return count ? static_cast<double>(sum / count) : 0.0; }
    double std_error() const {
        if (count < 2) return 0.0;
        const long double m = sum / count;
        const long double var = (sum_sq - count * m * m) / (count - 1);
        return static_cast<double>(std::sqrt(std::max(var, 0.0L) / count));
    }
};

}  // namespace

DriftStats drift_stats(const std::vector<Trajectory>& trajs) {
    Moments good;
    Moments bad;
    Moments flips;
    for (const auto& traj : trajs) {
        for (const auto& r : traj.records) {
            if (r.label == UpdateLabel::Unclassified) continue;
            const long double gain = static_cast<long double>(r.up()) - static_cast<long double>(r.down());
            (r.label == UpdateLabel::Bad ? bad : good).add(gain);
            flips.add(static_cast<long double>(r.up() + r.down()));
        }
    }
    DriftStats s;
    s.updates = flips.count;
    s.bad_updates = bad.count;
    s.empty = flips.count == 0;
    s.mean_gain_good = good.mean();
    s.se_gain_good = good.std_error();
    s.mean_gain_bad = bad.mean();
    s.se_gain_bad = bad.std_error();
    s.mean_flips = flips.mean();
    s.se_flips = flips.std_error();
    return s;
}

}  // namespace mclimb
