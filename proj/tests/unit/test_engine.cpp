#include <doctest.h>

#include <cmath>

#include "mclimb/engine.hpp"

using namespace mclimb;

namespace {

RunConfig onemax_config(std::size_t n, std::uint64_t seed, double c = 1.0) {
    RunConfig cfg;
    cfg.n = n;
    cfg.c = c;
    cfg.function = std::make_shared<OneMax>(n);
    cfg.seed = {seed, 0};
    return cfg;
}

}  // namespace

TEST_CASE("config validation") {
    RunConfig cfg = onemax_config(10, 1);
    CHECK_NOTHROW(cfg.validate());
    cfg.c = 10;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.c = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = onemax_config(10, 1);
    cfg.alpha = Rational(3, 5);
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = onemax_config(10, 1);
    cfg.function = make_function("onemax", 11);
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = onemax_config(10, 1);
    cfg.start = StartMode::Explicit;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    CHECK(RunConfig::default_max_steps(1) == 10000);
}

TEST_CASE("all-ones start is absorbing") {
    RunConfig cfg = onemax_config(16, 1);
    cfg.start = StartMode::Ones;
    const auto traj = run(cfg);
    CHECK(traj.updates() == 0);
    CHECK(traj.total_steps == 0);
    CHECK(traj.reached_optimum);
    CHECK(phase_stats(traj).phases.empty());
}

TEST_CASE("runs are consistent, monotone and reproducible") {
    for (const char* spec : {"onemax", "linear-random:2", "expw:2", "plugin:halves-product"}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            RunConfig cfg = onemax_config(40, seed, 1.1);
            cfg.function = make_function(spec, 40);
            const auto traj = run(cfg);
            CHECK(traj.reached_optimum);
            CHECK(is_consistent(traj));
            CHECK(traj.classified());
            const auto states = traj.states();
            std::uint64_t steps = 0;
            for (std::size_t t = 0; t < traj.updates(); ++t) {
                CHECK(cfg.function->eval(states[t + 1]) >= cfg.function->eval(states[t]));
                CHECK(traj.records[t].up() >= 1);
                CHECK(states[t + 1] != states[t]);
                steps += traj.records[t].steps_waited;
            }
            CHECK(steps <= traj.total_steps);
            CHECK(trajectory_digest(run(cfg)) == trajectory_digest(traj));
        }
    }
}

TEST_CASE("both samplers solve OneMax") {
    for (auto path : {MutationPath::Naive, MutationPath::Skip}) {
        RunConfig cfg = onemax_config(64, 9);
        cfg.sampler = path;
        const auto traj = run(cfg);
        CHECK(traj.reached_optimum);
        CHECK(is_consistent(traj));
    }
}

TEST_CASE("step cap yields an unfinished trajectory") {
    RunConfig cfg = onemax_config(200, 3);
    cfg.max_steps = 50;
    const auto traj = run(cfg);
    CHECK_FALSE(traj.reached_optimum);
    CHECK(traj.total_steps == 50);
    CHECK(is_consistent(traj));
    CHECK_FALSE(phase_stats(traj).complete);
}

TEST_CASE("golden OneMax n = 4 trajectory") {
    RunConfig cfg = onemax_config(4, 2024);
    cfg.start = StartMode::Zeros;
    const auto traj = run(cfg);
    CHECK(canonical_text(traj) ==
          "n=4\n"
          "start=0000\n"
          "reached=1\n"
          "total_steps=6\n"
          "u 0 up=2 down= ones=0->1 label=good wait=1\n"
          "u 1 up=0,1 down= ones=1->3 label=good wait=4\n"
          "u 2 up=3 down= ones=3->4 label=good wait=1\n");
    CHECK(trajectory_digest(traj) == 0x0c7088bf78a5b952ull);
}

TEST_CASE("fnv1a64 reference values") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("phase boundaries for n = 8 from three zeros") {
    bool saw_both = false;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        RunConfig cfg = onemax_config(8, seed);
        cfg.start = StartMode::Explicit;
        cfg.start_point = SearchPoint::from_string("10110110");
        const auto traj = run(cfg);
        const auto ps = phase_stats(traj);
        CHECK(ps.top_phase == 2);
        CHECK(ps.prefix_updates == 0);
        REQUIRE(!ps.phases.empty());
        CHECK(ps.phases.front().k == 2);
        CHECK(ps.phases.front().first_update == 0);
        std::size_t total = 0;
        for (const auto& p : ps.phases) total += p.updates;
        CHECK(total == traj.updates());
        // Phase 2 ends at the first state with at most one zero.
        const auto states = traj.states();
        std::size_t end = 0;
        while (states[end].zeros_count() > 1) ++end;
        CHECK(ps.phases.front().updates == end);
        if (ps.phases.size() == 2) {
            saw_both = true;
            CHECK(ps.phases[1].k == 1);
            CHECK(ps.phases[1].first_update == end);
        }
    }
    CHECK(saw_both);
}

TEST_CASE("phase summary text") {
    PhaseStats ps;
    ps.phases = {{3, 0, 5, 40}, {1, 5, 2, 9}};
    CHECK(phase_summary(ps) == "3:5:40;1:2:9");
    CHECK(phase_summary(PhaseStats{}).empty());
}

TEST_CASE("phase update counts follow the bound shape on OneMax n = 1024") {
    const std::size_t n = 1024;
    const double log_n = std::log2(static_cast<double>(n));
    std::vector<Trajectory> trajs;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        RunConfig cfg = onemax_config(n, seed);
        cfg.classify = false;
        trajs.push_back(run(cfg));
        REQUIRE(trajs.back().reached_optimum);
    }
    // beta from whole runs: T / ((n - k0) + log2 C(n, k0)), k0 the starting one-count.
    double beta = 0;
    for (const auto& t : trajs) {
        const double k0 = static_cast<double>(t.start.ones_count());
        const double log_choose = (std::lgamma(n + 1.0) - std::lgamma(k0 + 1) - std::lgamma(n - k0 + 1)) / std::log(2.0);
        beta = std::max(beta, static_cast<double>(t.updates()) / ((n - k0) + log_choose));
    }
    for (const auto& t : trajs)
        for (const auto& p : phase_stats(t).phases)
            CHECK(static_cast<double>(p.updates) <= 2 * beta * std::ldexp(1.0, static_cast<int>(p.k)) * log_n);
}

TEST_CASE("drift statistics") {
    CHECK(drift_stats({}).empty);

    std::vector<Trajectory> onemax_runs;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) onemax_runs.push_back(run(onemax_config(64, seed)));
    const auto om = drift_stats(onemax_runs);
    CHECK_FALSE(om.empty);
    CHECK(om.bad_updates == 0);
    CHECK(om.mean_flips <= 2 * std::exp(1.0) + 3 * om.se_flips);

    std::vector<Trajectory> exp_runs;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        RunConfig cfg = onemax_config(64, seed, 1.1);
        cfg.function = make_function("expw:2", 64);
        exp_runs.push_back(run(cfg));
    }
    const auto ex = drift_stats(exp_runs);
    REQUIRE(ex.bad_updates > 100);
    CHECK(ex.mean_gain_bad >= (1 - 1.1) - 3 * ex.se_gain_bad);

    RunConfig unclassified = onemax_config(32, 1);
    unclassified.classify = false;
    CHECK(drift_stats({run(unclassified)}).empty);
}
