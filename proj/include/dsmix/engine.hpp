#pragma once

#include <cstdint>

#include "dsmix/evaluation.hpp"
#include "dsmix/problem.hpp"

namespace dsmix {

struct EngineConfig {
    int population_size = 0;
    int selection_pressure = 2;
    /// Mixing rounds per generation; 0 derives the value from the problem
    /// size (one round per 50 variables, at least one).
    int mixing_rounds = 0;
    /// Generations between model rebuilds.
    int dsm_interval = 1;
    /// Evaluation budget; 0 means unbounded (needs a known optimum).
    std::uint64_t max_nfe = 0;
    std::uint64_t seed = 0;
};

int default_mixing_rounds(int ell);

/// Cheap always-on consistency flags, aggregated over a whole run.
struct RunDiagnostics {
    bool best_monotone = true;  // population best never decreased
    bool rm_unique = true;      // accepted trials were unique in the population
    bool bm_phases = true;      // side walks only in passes without strict improvement
};

struct RunResult {
    bool success = false;
    /// NFE at the first optimum hit, or at the stop otherwise.
    std::uint64_t nfe = 0;
    double best_fitness = 0.0;
    BitVector best;
    std::uint64_t generations = 0;
    /// All evaluations spent, including any on the final partial generation.
    std::uint64_t total_evaluations = 0;
    std::uint64_t dsm_rebuilds = 0;
    RunDiagnostics diagnostics;
};

/// One full optimizer run: random initialization, hill climbing, then
/// generations of selection-driven model updates and permuted
/// restricted/back mixing until the optimum appears or the budget runs out.
RunResult run(const ProblemInstance& problem, const EngineConfig& cfg);

} // namespace dsmix
