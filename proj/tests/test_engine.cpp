#include <catch2/catch_amalgamated.hpp>

#include "dsmix/engine.hpp"
#include "dsmix/traps.hpp"
#include "helpers.hpp"

using namespace dsmix;
using testutil::CountingProblem;
using testutil::FunctionProblem;

TEST_CASE("an optimum found during initialization ends the run at once") {
    const FunctionProblem constant(8, [](const BitVector&) { return 5.0; }, 5.0);
    const CountingProblem counted(constant);
    EngineConfig cfg;
    cfg.population_size = 10;
    cfg.seed = 3;
    const RunResult rr = run(counted, cfg);
    REQUIRE(rr.success);
    REQUIRE(rr.nfe == 1);
    REQUIRE(rr.generations == 0);
    REQUIRE(rr.best_fitness == 5.0);
    REQUIRE(rr.total_evaluations == counted.calls());
    REQUIRE(rr.nfe == counted.calls()); // nothing evaluated past the hit
}

TEST_CASE("configuration problems are rejected before evaluating") {
    const FunctionProblem no_optimum(4, [](const BitVector&) { return 0.0; });
    const CountingProblem counted(no_optimum);
    EngineConfig cfg;
    cfg.population_size = 10;
    REQUIRE_THROWS_AS(run(counted, cfg), std::invalid_argument); // no optimum, no budget
    cfg.max_nfe = 100;
    cfg.population_size = 1;
    REQUIRE_THROWS_AS(run(counted, cfg), std::invalid_argument);
    cfg.population_size = 10;
    cfg.selection_pressure = 1;
    REQUIRE_THROWS_AS(run(counted, cfg), std::invalid_argument);
    cfg.selection_pressure = 2;
    cfg.dsm_interval = 0;
    REQUIRE_THROWS_AS(run(counted, cfg), std::invalid_argument);
    REQUIRE(counted.calls() == 0);
}

TEST_CASE("default round count scales with the problem size") {
    REQUIRE(default_mixing_rounds(10) == 1);
    REQUIRE(default_mixing_rounds(50) == 1);
    REQUIRE(default_mixing_rounds(100) == 2);
    REQUIRE(default_mixing_rounds(400) == 8);
}

TEST_CASE("budget exhaustion stops the run at the exact count") {
    // budget far below the initialization + hill-climbing cost, so it
    // binds mid-operator
    const TrapProblem trap(5, 5);
    const CountingProblem counted(trap);
    EngineConfig cfg;
    cfg.population_size = 60;
    cfg.max_nfe = 500;
    cfg.seed = 11;
    const RunResult rr = run(counted, cfg);
    REQUIRE_FALSE(rr.success);
    REQUIRE(rr.nfe == 500);
    REQUIRE(rr.total_evaluations == 500);
    REQUIRE(counted.calls() == 500);
}

TEST_CASE("a concatenated trap run converges and replays bit-identically") {
    const TrapProblem trap(5, 5);
    const CountingProblem counted(trap);
    EngineConfig cfg;
    cfg.population_size = 60;
    cfg.max_nfe = 200000;
    cfg.seed = 20250809;

    const RunResult a = run(counted, cfg);
    REQUIRE(a.success);
    REQUIRE(a.best_fitness == 5.0);
    REQUIRE(a.best.count_ones() == 25);
    REQUIRE(a.nfe <= cfg.max_nfe);
    REQUIRE(a.diagnostics.best_monotone);
    REQUIRE(a.diagnostics.rm_unique);
    REQUIRE(a.diagnostics.bm_phases);
    REQUIRE(a.nfe == a.total_evaluations); // stopped at the hit

    const RunResult b = run(counted, cfg);
    REQUIRE(b.success == a.success);
    REQUIRE(b.nfe == a.nfe);
    REQUIRE(b.generations == a.generations);
    REQUIRE(b.best.to_string() == a.best.to_string());
    REQUIRE(b.total_evaluations == a.total_evaluations);
}

TEST_CASE("reported NFE matches an instrumented wrapper exactly") {
    const TrapProblem trap(3, 5);
    const CountingProblem counted(trap);
    EngineConfig cfg;
    cfg.population_size = 40;
    cfg.max_nfe = 100000;
    cfg.seed = 7;
    const RunResult rr = run(counted, cfg);
    REQUIRE(rr.total_evaluations == counted.calls());
    if (rr.success)
        REQUIRE(rr.nfe == counted.calls());
}

TEST_CASE("runs on flat landscapes terminate instead of spinning") {
    // Constant fitness with an unreachable optimum: the population can
    // converge completely, after which no operator can change it. The run
    // must end rather than loop through evaluation-free generations.
    const FunctionProblem flat(2, [](const BitVector&) { return 0.0; }, 1.0);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        EngineConfig cfg;
        cfg.population_size = 2;
        cfg.max_nfe = 2000;
        cfg.seed = seed;
        const RunResult rr = run(flat, cfg);
        REQUIRE_FALSE(rr.success);
        REQUIRE(rr.total_evaluations <= 2000);
    }
}

TEST_CASE("the model rebuild schedule is honored") {
    const TrapProblem trap(3, 5);
    for (int interval : {1, 3, 5}) {
        EngineConfig cfg;
        cfg.population_size = 30;
        cfg.max_nfe = 50000;
        cfg.seed = 99;
        cfg.dsm_interval = interval;
        const RunResult rr = run(trap, cfg);
        const std::uint64_t expected =
            (rr.generations + static_cast<std::uint64_t>(interval) - 1) /
            static_cast<std::uint64_t>(interval);
        REQUIRE(rr.dsm_rebuilds == expected);
    }
}
