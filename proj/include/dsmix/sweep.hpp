#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dsmix/engine.hpp"

namespace dsmix {

struct SweepConfig {
    /// Consecutive successful runs required per population size.
    int hits = 10;
    int initial_population = 10;
    int initial_step = 30;
    /// Stop refining when the sweep range is within this fraction of the
    /// best size.
    double range_fraction = 0.05;
    /// Per-run evaluation budget; a run that exhausts it counts as a failure.
    std::uint64_t run_budget = 0;
    std::uint64_t master_seed = 0;
    /// Upper bound for the initial expansion.
    int max_population = 2000;
    /// Worker threads for independent runs; 0 resolves DSMIX_THREADS or
    /// the hardware count.
    int threads = 0;
};

struct SizeRecord {
    int population_size = 0;
    /// Runs counted under sequential abort-on-first-failure semantics.
    int runs = 0;
    int successes = 0;
    /// Mean NFE over the required hits; infinity when the size failed.
    double mean_nfe = 0.0;
};

struct SweepResult {
    bool any_success = false;
    int best_size = 0;
    double best_mean_nfe = 0.0;
    /// Every size tried, sorted by size.
    std::vector<SizeRecord> trace;
    std::uint64_t total_runs = 0;
    /// Evaluations actually spent, including runs beyond an abort when
    /// executing in parallel.
    std::uint64_t total_nfe = 0;
};

using RunFunction = std::function<RunResult(const ProblemInstance&, const EngineConfig&)>;

/// Adaptive population sizing: expand upward from the initial size until
/// the NFE curve turns, then repeatedly halve the step inside a window
/// around the best size until the window is within range_fraction of it.
/// A size is charged the mean NFE of `hits` consecutive successful runs;
/// any failure marks it infinite. The reported best size must addition-
/// ally pass the required hits on the verification seed stream (the one
/// run_batch replays), so a size is never returned whose verification
/// re-run fails. Returns an all-failed result (rather than throwing)
/// when no size succeeds.
SweepResult sweep(const ProblemInstance& problem, const SweepConfig& scfg,
                  const EngineConfig& tmpl, const RunFunction& run_fn = {});

struct VerifySummary {
    int runs = 0;
    int successes = 0;
    // NFE statistics over the successful runs.
    double mean_nfe = 0.0;
    double median_nfe = 0.0;
    double min_nfe = 0.0;
    double max_nfe = 0.0;
};

struct BatchResult {
    std::string family;
    std::string instance;
    int ell = 0;
    int hits = 0;
    int repeats = 0;
    std::uint64_t master_seed = 0;
    SweepResult sweep;
    VerifySummary verify;
};

/// Per problem: sweep, then `repeats` fresh runs at the best size.
/// All-failed sweeps are carried through without aborting the batch.
std::vector<BatchResult> run_batch(const std::vector<const ProblemInstance*>& problems,
                                   const SweepConfig& scfg, const EngineConfig& tmpl, int repeats,
                                   const RunFunction& run_fn = {});

/// One row per size tried plus a verification summary row per instance.
/// Columns: problem,ell,instance,pop_size,hits,mean_nfe,success_rate,seed.
/// Byte-identical for identical inputs.
std::string emit_csv(const std::vector<BatchResult>& results);

/// Stable run-seed derivation: identical inputs give identical seeds on
/// every platform.
std::uint64_t derive_seed(std::uint64_t master, std::string_view instance, int population_size,
                          int run_index, std::string_view purpose);

/// Thread cap: an explicit request wins, then DSMIX_THREADS, then the
/// hardware concurrency.
int resolve_threads(int requested);

} // namespace dsmix
